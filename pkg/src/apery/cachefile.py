"""On-disk cache of exact Apery values.

Format: a tab-separated header line ``apery-cache <version> apery`` followed
by one record per line, ``n <tab> A(n)`` in decimal, with strictly
increasing n.  An empty file is an empty cache.

Loading validates structure everywhere and integrity by sampling: runs of
three or more consecutive indices are checked against the three-term
recurrence (cheap, exact, and a single corrupted digit always breaks it),
and any record not covered that way is recomputed outright when n is small
enough to make that cheap.  Records beyond both nets are taken on trust.
"""

from __future__ import annotations

import os
import sys
from typing import Mapping

from .sequence import apery, _recurrence_step

__all__ = ["CacheError", "FORMAT_VERSION", "cache_load", "cache_store"]

FORMAT_VERSION = 1
_SEQUENCE_ID = "apery"
_RECOMPUTE_BOUND = 400  # direct recomputation is milliseconds below this


class CacheError(ValueError):
    """A cache file failed validation; line is 1-based when applicable."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


def _unlimited_decimals() -> None:
    # records can be far longer than the interpreter's int/str cap
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


def cache_store(path: str | os.PathLike, values: Mapping[int, int]) -> None:
    """Write the values atomically, sorted by n."""
    _unlimited_decimals()
    tmp = f"{os.fspath(path)}.tmp"
    with open(tmp, "w", encoding="ascii") as fh:
        fh.write(f"apery-cache\t{FORMAT_VERSION}\t{_SEQUENCE_ID}\n")
        for n in sorted(values):
            if n < 0:
                raise ValueError(f"cache keys must be >= 0, got {n}")
            fh.write(f"{n}\t{values[n]}\n")
    os.replace(tmp, path)


def _parse_header(line: str) -> None:
    fields = line.rstrip("\n").split("\t")
    if len(fields) != 3 or fields[0] != "apery-cache":
        raise CacheError("not an apery-cache file", line=1)
    try:
        version = int(fields[1])
    except ValueError:
        raise CacheError(f"bad version field {fields[1]!r}", line=1) from None
    if version != FORMAT_VERSION:
        raise CacheError(
            f"format version {version} not supported (expected {FORMAT_VERSION})",
            line=1,
        )
    if fields[2] != _SEQUENCE_ID:
        raise CacheError(f"unknown sequence id {fields[2]!r}", line=1)


def _verify(values: dict[int, int], lines: dict[int, int]) -> None:
    ns = sorted(values)
    covered: set[int] = set()
    i = 0
    while i < len(ns):
        j = i
        while j + 1 < len(ns) and ns[j + 1] == ns[j] + 1:
            j += 1
        run = ns[i : j + 1]
        if len(run) >= 3:
            for m in run[2:]:
                if values[m] != _recurrence_step(m, values[m - 1], values[m - 2]):
                    raise CacheError(
                        f"record for n={m} breaks the recurrence", line=lines[m]
                    )
            covered.update(run)
        i = j + 1
    for n in ns:
        if n not in covered and n <= _RECOMPUTE_BOUND:
            if values[n] != apery(n):
                raise CacheError(f"record for n={n} is wrong", line=lines[n])
            covered.add(n)
    # anchor the runs so a uniformly rescaled file cannot slip through
    for n in (0, 1):
        if n in values and values[n] != apery(n):
            raise CacheError(f"record for n={n} is wrong", line=lines[n])


def cache_load(path: str | os.PathLike, verify: bool = True) -> dict[int, int]:
    """Read a cache file back into an {n: A(n)} map.

    Raises CacheError, naming the offending line, for structural problems
    (bad header, malformed or non-increasing records) and for sampled
    records that fail re-verification.
    """
    _unlimited_decimals()
    with open(path, "r", encoding="ascii") as fh:
        raw = fh.read()
    if raw == "":
        return {}
    text = raw.splitlines()
    _parse_header(text[0])
    values: dict[int, int] = {}
    lines: dict[int, int] = {}
    previous = -1
    for idx, line in enumerate(text[1:], start=2):
        if line == "":
            raise CacheError("blank record", line=idx)
        fields = line.split("\t")
        if len(fields) != 2:
            raise CacheError("expected 'n<TAB>value'", line=idx)
        try:
            n, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise CacheError("non-integer record", line=idx) from None
        if n <= previous:
            raise CacheError(f"n={n} is not strictly increasing", line=idx)
        if n < 0:
            raise CacheError(f"negative index n={n}", line=idx)
        previous = n
        values[n] = value
        lines[n] = idx
    if verify:
        _verify(values, lines)
    return values
