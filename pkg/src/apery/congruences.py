"""Finite-range verification of the base-p digit congruences satisfied by
the Apery numbers, and the digit sets that support them modulo p^2.

D(p) is the set of digits d with A(d) = A(p-1-d) mod p^2; those are exactly
the digits d for which A(d + p n) = A(d) A(n) mod p^2 holds for every
integer n.  Negative n are always in scope: reflection A(n) = A(-1-n) turns
them into non-negative evaluations.

The per-(d, n) sweeps reduce exact values.  verify_multi_digit's mod p^2
laws go through the digit tables instead (the tables are exact reductions,
and the digit route is itself checked against exact reduction in the test
suite); its mod p^3 law has no digit shortcut and reduces exact values from
a rolling recurrence sweep.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .arith import Residue, is_prime, primes_upto, rational_mod
from .sequence import (
    AperyCache,
    apery_deriv,
    apery_fast,
    apery_mod_p2,
    apery_mod_sweep,
    mod_p2_tables,
)

__all__ = [
    "CongruenceReport",
    "Counterexample",
    "DigitSet",
    "digit_set",
    "scan_digit_sets",
    "verify_digit_set_lucas",
    "verify_gessel_mod_p2",
    "verify_lucas_mod_p",
    "verify_mod_p3_suite",
    "verify_multi_digit",
]


@dataclass(frozen=True)
class DigitSet:
    """A prime p with the sorted digits d such that A(d) = A(p-1-d) mod p^2."""

    p: int
    digits: tuple[int, ...]

    def __contains__(self, d: int) -> bool:
        return d in self.digits

    def __len__(self) -> int:
        return len(self.digits)

    def format_row(self) -> str:
        return f"{self.p}: " + " ".join(str(d) for d in self.digits)


class Counterexample(NamedTuple):
    """One failing case: digit d (None when not digit-indexed), argument n,
    prime p, and the two residues that should have agreed."""

    d: int | None
    n: int
    p: int
    lhs: Residue
    rhs: Residue

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "p": self.p,
            "lhs": {"value": str(self.lhs.value), "modulus": str(self.lhs.modulus)},
            "rhs": {"value": str(self.rhs.value), "modulus": str(self.rhs.modulus)},
        }


@dataclass
class CongruenceReport:
    """Outcome of one verification sweep.

    counterexamples are theorem violations; an empty list means the claim
    held on every checked case.  For the digit-set theorem the expected
    violations for digits outside D(p) are recorded separately as witnesses,
    and digits for which no witness turned up in the searched range land in
    unwitnessed (enlarging the range is the remedy; the existence proof
    guarantees one exists).
    """

    theorem: str
    parameters: dict
    checked: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    witnesses: list[Counterexample] = field(default_factory=list)
    unwitnessed: list[int] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    @property
    def conclusive(self) -> bool:
        return not self.unwitnessed

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "parameters": self.parameters,
            "checked": self.checked,
            "pass": self.passed,
            "conclusive": self.conclusive,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "witnesses": [w.to_dict() for w in self.witnesses],
            "unwitnessed": list(self.unwitnessed),
            "notes": list(self.notes),
        }


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def _span(n_range: tuple[int, int]) -> range:
    lo, hi = n_range
    if lo > hi:
        raise ValueError(f"empty range {n_range}")
    return range(lo, hi + 1)


def digit_set(p: int, cache: AperyCache | None = None) -> DigitSet:
    """D(p) by exact reduction of A(0), ..., A(p-1) modulo p^2."""
    _require_prime(p)
    m = p * p
    values = [apery_fast(d, cache) % m for d in range(p)]
    digits = tuple(d for d in range(p) if values[d] == values[p - 1 - d])
    return DigitSet(p, digits)


def scan_digit_sets(
    p_max: int, min_size: int, workers: int = 1, cache: AperyCache | None = None
) -> list[DigitSet]:
    """All primes p <= p_max whose digit set has at least min_size digits.

    Primes are independent, so the scan can fan out over a worker pool; the
    result order is by p regardless of worker count.
    """
    if p_max < 2 or min_size < 1:
        raise ValueError("need p_max >= 2 and min_size >= 1")
    primes = primes_upto(p_max)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            sets = list(pool.map(lambda p: digit_set(p, cache), primes))
    else:
        sets = [digit_set(p, cache) for p in primes]
    return [ds for ds in sorted(sets, key=lambda ds: ds.p) if len(ds) >= min_size]


def verify_lucas_mod_p(
    p: int, n_range: tuple[int, int], cache: AperyCache | None = None
) -> CongruenceReport:
    """Check A(d + p n) = A(d) A(n) mod p for every digit d and n in range."""
    _require_prime(p)
    report = CongruenceReport(
        "lucas-p", {"p": p, "n_lo": n_range[0], "n_hi": n_range[1]}
    )
    digit_values = [apery_fast(d, cache) % p for d in range(p)]
    for n in _span(n_range):
        an = apery_fast(n, cache) % p
        for d in range(p):
            lhs = apery_fast(d + p * n, cache) % p
            rhs = digit_values[d] * an % p
            report.checked += 1
            if lhs != rhs:
                report.counterexamples.append(
                    Counterexample(d, n, p, Residue(lhs, p), Residue(rhs, p))
                )
    return report


def verify_gessel_mod_p2(
    p: int, n_range: tuple[int, int], cache: AperyCache | None = None
) -> CongruenceReport:
    """Check A(d + p n) = (A(d) + p n A'(d)) A(n) mod p^2 over the range.

    Also asserts the companion claim that no A'(d) denominator is divisible
    by p; a failure there would falsify the theorem and is recorded as a
    counterexample.
    """
    _require_prime(p)
    m = p * p
    report = CongruenceReport(
        "gessel-p2", {"p": p, "n_lo": n_range[0], "n_hi": n_range[1]}
    )
    digit_values = [apery_fast(d, cache) % m for d in range(p)]
    deriv_values = []
    for d in range(p):
        try:
            deriv_values.append(rational_mod(apery_deriv(d), m).value)
        except ValueError:
            report.counterexamples.append(
                Counterexample(d, 0, p, Residue(0, m), Residue(1, m))
            )
            report.notes.append(
                f"A'({d}) has denominator divisible by {p}; theorem falsified"
            )
            return report
    for n in _span(n_range):
        an = apery_fast(n, cache) % m
        for d in range(p):
            lhs = apery_fast(d + p * n, cache) % m
            rhs = (digit_values[d] + p * n * deriv_values[d]) * an % m
            report.checked += 1
            if lhs != rhs:
                report.counterexamples.append(
                    Counterexample(d, n, p, Residue(lhs, m), Residue(rhs, m))
                )
    return report


def verify_mod_p3_suite(
    p: int, n_range: tuple[int, int], cache: AperyCache | None = None
) -> CongruenceReport:
    """The strongest congruence available at each prime, over the range.

    p = 2:  A(n) = 5^n mod 8 for n >= 0 and A(n) = 5^(n+1) mod 8 for n <= -1.
    p = 3:  A(d + 3n) = A(d) A(n) mod 9 for every digit d.
    p >= 5: A(p n) = A(n) = A(p n + p - 1) mod p^3.
    """
    if p not in (2, 3):
        _require_prime(p)  # a prime other than 2 and 3 is >= 5
    report = CongruenceReport(
        "p3-suite", {"p": p, "n_lo": n_range[0], "n_hi": n_range[1]}
    )
    if p == 2:
        for n in _span(n_range):
            lhs = apery_fast(n, cache) % 8
            rhs = pow(5, n if n >= 0 else n + 1, 8)
            report.checked += 1
            if lhs != rhs:
                report.counterexamples.append(
                    Counterexample(None, n, 2, Residue(lhs, 8), Residue(rhs, 8))
                )
        return report
    if p == 3:
        for n in _span(n_range):
            an = apery_fast(n, cache) % 9
            for d in range(3):
                lhs = apery_fast(d + 3 * n, cache) % 9
                rhs = apery_fast(d, cache) * an % 9
                report.checked += 1
                if lhs != rhs:
                    report.counterexamples.append(
                        Counterexample(d, n, 3, Residue(lhs, 9), Residue(rhs, 9))
                    )
        return report
    m = p**3
    for n in _span(n_range):
        an = apery_fast(n, cache) % m
        for d, label in ((0, 0), (p - 1, p - 1)):
            lhs = apery_fast(d + p * n, cache) % m
            report.checked += 1
            if lhs != an:
                report.counterexamples.append(
                    Counterexample(label, n, p, Residue(lhs, m), Residue(an, m))
                )
    return report


def verify_digit_set_lucas(
    p: int,
    n_range: tuple[int, int] | None = None,
    cache: AperyCache | None = None,
) -> CongruenceReport:
    """Membership check for the digit-set theorem modulo p^2.

    Digits in D(p) must satisfy A(d + p n) = A(d) A(n) mod p^2 on the whole
    range; digits outside D(p) must violate it for some n (the first such n
    is recorded as a witness).  The default range is -p..p, which in
    practice always contains a witness.
    """
    _require_prime(p)
    if n_range is None:
        n_range = (-p, p)
    m = p * p
    ds = digit_set(p, cache)
    report = CongruenceReport(
        "digitset-p2",
        {"p": p, "n_lo": n_range[0], "n_hi": n_range[1], "digits": list(ds.digits)},
    )
    digit_values = [apery_fast(d, cache) % m for d in range(p)]
    member_of_ds = [d in ds for d in range(p)]
    found = [False] * p
    for n in _span(n_range):
        an = apery_fast(n, cache) % m
        for d in range(p):
            if not member_of_ds[d] and found[d]:
                continue
            lhs = apery_fast(d + p * n, cache) % m
            rhs = digit_values[d] * an % m
            report.checked += 1
            if member_of_ds[d]:
                if lhs != rhs:
                    report.counterexamples.append(
                        Counterexample(d, n, p, Residue(lhs, m), Residue(rhs, m))
                    )
            elif lhs != rhs:
                found[d] = True
                report.witnesses.append(
                    Counterexample(d, n, p, Residue(lhs, m), Residue(rhs, m))
                )
    report.unwitnessed = [
        d for d in range(p) if not member_of_ds[d] and not found[d]
    ]
    if report.unwitnessed:
        report.notes.append(
            "no violating n found in range for some digits outside D(p); "
            "widen the range (existence is guaranteed)"
        )
    return report


def _digit_numbers(p: int, alphabet: Sequence[int], depth: int) -> list[int]:
    # all n < p^depth whose base-p digits lie in the alphabet
    out = set()
    for digits in itertools.product(sorted(alphabet), repeat=depth):
        n = 0
        for d in reversed(digits):
            n = n * p + d
        out.add(n)
    return sorted(out)


def verify_multi_digit(
    p: int,
    alphabet: Iterable[int],
    depth: int,
    law: str,
    cache: AperyCache | None = None,
) -> CongruenceReport:
    """Digit-wise laws over every n < p^depth with digits in the alphabet.

    law="product": A(n) = prod over digits d of A(d), mod p^2; requires the
        alphabet to sit inside D(p) and is rejected otherwise.
    law="power": alphabet {0, (p-1)/2, p-1} for odd p; A(n) = A((p-1)/2)^e(n)
        mod p^2 where e(n) counts the middle digit.
    law="unit": alphabet within {0, p-1} for p >= 5; A(n) = 1 mod p^3.

    The two mod p^2 laws evaluate A(n) through the digit tables (the tables
    themselves are exact reductions); the mod p^3 law has no digit shortcut,
    so it reduces exact values from a rolling recurrence sweep.
    """
    _require_prime(p)
    alphabet = sorted(set(alphabet))
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    if not alphabet or any(d < 0 or d >= p for d in alphabet):
        raise ValueError(f"alphabet must be non-empty digits below {p}")

    if law == "product":
        ds = digit_set(p, cache)
        outside = [d for d in alphabet if d not in ds]
        if outside:
            raise ValueError(
                f"digits {outside} are outside D({p}); the product law only "
                "holds on D(p)"
            )
        modulus = p * p
    elif law == "power":
        if p == 2 or alphabet != sorted({0, (p - 1) // 2, p - 1}):
            raise ValueError(
                "power law needs odd p and alphabet {0, (p-1)/2, p-1}"
            )
        modulus = p * p
    elif law == "unit":
        if p < 5 or not set(alphabet) <= {0, p - 1}:
            raise ValueError("unit law needs p >= 5 and alphabet within {0, p-1}")
        modulus = p**3
    else:
        raise ValueError(f"unknown law {law!r}")

    report = CongruenceReport(
        f"multi-digit-{law}",
        {"p": p, "alphabet": list(alphabet), "depth": depth, "modulus": str(modulus)},
    )
    numbers = _digit_numbers(p, alphabet, depth)

    if law == "unit":
        reductions = apery_mod_sweep(numbers, modulus)
        for n in numbers:
            lhs = reductions[n]
            report.checked += 1
            if lhs != 1:
                report.counterexamples.append(
                    Counterexample(None, n, p, Residue(lhs, modulus), Residue(1, modulus))
                )
        return report

    tables = mod_p2_tables(p, cache)
    centre = (p - 1) // 2
    centre_value = tables[0][centre]
    for n in numbers:
        lhs = apery_mod_p2(n, p, tables).value
        if law == "product":
            rhs = 1
            rest = n
            while rest:
                rest, d = divmod(rest, p)
                rhs = rhs * tables[0][d] % modulus
        else:
            count = 0
            rest = n
            while rest:
                rest, d = divmod(rest, p)
                count += d == centre
            rhs = pow(centre_value, count, modulus)
        report.checked += 1
        if lhs != rhs:
            report.counterexamples.append(
                Counterexample(None, n, p, Residue(lhs, modulus), Residue(rhs, modulus))
            )
    return report
