"""The Apery numbers A(n) on all of Z and their derivative sequence A'(n).

A(n) = sum_k C(n,k)^2 C(n+k,k)^2 for n >= 0, extended to negative arguments
by the reflection A(n) = A(-1-n).  A'(n) is the harmonic-weighted variant
2 sum_k C(n,k)^2 C(n+k,k)^2 (H_{n+k} - H_{n-k}), an exact rational.

Besides the defining sums this module provides the three-term recurrence
(with a shared memo cache), O(log n) modular evaluation through the base-p
digit congruences, and a memory-flat recurrence sweep for reducing A(n) at
scattered large indices.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Iterable, Mapping

from .arith import Residue, is_prime, rational_mod

__all__ = [
    "AperyCache",
    "apery",
    "apery_deriv",
    "apery_deriv_reflected",
    "apery_fast",
    "apery_mod_p",
    "apery_mod_p2",
    "apery_mod_sweep",
    "apery_via_recurrence",
    "mod_p2_tables",
    "mod_p_table",
    "shared_cache",
]


def apery(n: int) -> int:
    """A(n) by the defining binomial sum; negative n reflect to A(-1-n)."""
    if n < 0:
        n = -1 - n
    total = 0
    term = 1  # C(n,0)^2 C(n,0)^2
    for k in range(n + 1):
        total += term
        # C(n,k+1)^2 C(n+k+1,k+1)^2 from the k-th term; division is exact
        term = term * (n - k) ** 2 * (n + k + 1) ** 2 // (k + 1) ** 4
    return total


def _recurrence_step(m: int, prev1: int, prev2: int) -> int:
    """A(m) from A(m-1), A(m-2) via m^3 A(m) = r1(m) A(m-1) - r2(m) A(m-2)."""
    numerator = (34 * m**3 - 51 * m**2 + 27 * m - 5) * prev1 - (m - 1) ** 3 * prev2
    value, remainder = divmod(numerator, m**3)
    if remainder:
        raise ArithmeticError(f"recurrence step not exact at m={m}")
    return value


class AperyCache:
    """Thread-safe memo of exact A(n) values for n >= 0.

    Values are immutable once inserted, so lock-free reads are safe; writers
    take a lock.  A contiguous high-water mark lets the recurrence restart
    from the longest verified prefix instead of from zero.
    """

    def __init__(self, values: Mapping[int, int] | None = None):
        self._values: dict[int, int] = {0: 1, 1: 5}
        self._lock = threading.Lock()
        self._contiguous = 1
        if values:
            self.preload(values)

    def get(self, n: int) -> int | None:
        return self._values.get(n)

    def put(self, n: int, value: int) -> None:
        with self._lock:
            existing = self._values.setdefault(n, value)
            if existing != value:
                raise ValueError(f"conflicting cache values at n={n}")
            self._advance()

    def preload(self, values: Mapping[int, int]) -> None:
        with self._lock:
            for n, value in values.items():
                if n < 0:
                    raise ValueError(f"cache keys must be >= 0, got {n}")
                existing = self._values.setdefault(n, value)
                if existing != value:
                    raise ValueError(f"conflicting cache values at n={n}")
            self._advance()

    def _advance(self) -> None:
        while self._contiguous + 1 in self._values:
            self._contiguous += 1

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._values.items())

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, n: int) -> bool:
        return n in self._values


_SHARED_CACHE = AperyCache()


def shared_cache() -> AperyCache:
    """The process-wide default memo used when no cache is passed."""
    return _SHARED_CACHE


def apery_via_recurrence(n: int, cache: AperyCache | None = None) -> int:
    """A(n) for n >= 0 from the holonomic three-term recurrence.

    Must agree with apery(n) everywhere; the test suite checks the two
    routes against each other up to n = 2000.
    """
    if n < 0:
        raise ValueError(f"recurrence route requires n >= 0, got {n}")
    cache = cache or _SHARED_CACHE
    hit = cache.get(n)
    if hit is not None:
        return hit
    start = min(n, cache._contiguous)
    prev2, prev1 = cache.get(start - 1), cache.get(start)
    if prev2 is None or prev1 is None:  # defensive; contiguous prefix always has both
        start, prev2, prev1 = 1, 1, 5
    for m in range(start + 1, n + 1):
        value = cache.get(m)
        if value is None:
            value = _recurrence_step(m, prev1, prev2)
            cache.put(m, value)
        prev2, prev1 = prev1, value
    return prev1


def apery_fast(n: int, cache: AperyCache | None = None) -> int:
    """A(n) for any integer n: reflection plus the cached recurrence."""
    if n < 0:
        n = -1 - n
    return apery_via_recurrence(n, cache)


def apery_deriv(n: int) -> Fraction:
    """A'(n) = 2 sum_k C(n,k)^2 C(n+k,k)^2 (H_{n+k} - H_{n-k}), exact.

    Defined here for n >= 0 only; see apery_deriv_reflected for the
    reflection-derived extension.
    """
    if n < 0:
        raise ValueError(f"apery_deriv requires n >= 0, got {n}")
    # H[0..2n] built incrementally
    H = [Fraction(0)]
    for i in range(1, 2 * n + 1):
        H.append(H[-1] + Fraction(1, i))
    total = Fraction(0)
    term = 1
    for k in range(n + 1):
        total += term * (H[n + k] - H[n - k])
        term = term * (n - k) ** 2 * (n + k + 1) ** 2 // (k + 1) ** 4
    return 2 * total


def apery_deriv_reflected(n: int) -> Fraction:
    """A'(n) for any integer n, using A'(-1-n) = -A'(n) for n <= -1.

    The negative-argument rule is derived by differentiating the reflection
    symmetry A(-1-z) = A(z) of the entire interpolation; it is a consequence
    of that symmetry, not an independently stated identity.
    """
    if n >= 0:
        return apery_deriv(n)
    return -apery_deriv(-1 - n)


def mod_p_table(p: int, cache: AperyCache | None = None) -> list[int]:
    """A(0), ..., A(p-1) reduced mod p."""
    return [apery_via_recurrence(d, cache) % p for d in range(p)]


def mod_p2_tables(p: int, cache: AperyCache | None = None) -> tuple[list[int], list[int]]:
    """Digit tables (A(d) mod p^2, A'(d) mod p^2) for d = 0, ..., p-1.

    The derivative table is well defined because no A'(d) denominator is
    divisible by p; a violation would falsify the mod p^2 congruence theorem
    and surfaces here as ValueError.
    """
    m = p * p
    values = [apery_via_recurrence(d, cache) % m for d in range(p)]
    derivs = [rational_mod(apery_deriv(d), m).value for d in range(p)]
    return values, derivs


def apery_mod_p(n: int, p: int, table: list[int] | None = None) -> Residue:
    """A(n) mod p for n >= 0 as the product of A(d) over base-p digits d.

    O(log_p n) multiplications once the digit table is built; pass a
    precomputed table when sweeping many n.
    """
    if n < 0:
        raise ValueError(f"apery_mod_p requires n >= 0, got {n}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if table is None:
        table = mod_p_table(p)
    result = 1
    while n > 0:
        n, d = divmod(n, p)
        result = result * table[d] % p
    return Residue(result, p)


def apery_mod_p2(
    n: int, p: int, tables: tuple[list[int], list[int]] | None = None
) -> Residue:
    """A(n) mod p^2 for n >= 0, digit by digit from the least significant.

    Each digit d with quotient q contributes the factor A(d) + p*q*A'(d);
    only q mod p matters there because of the explicit factor p.
    """
    if n < 0:
        raise ValueError(f"apery_mod_p2 requires n >= 0, got {n}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if tables is None:
        tables = mod_p2_tables(p)
    values, derivs = tables
    m = p * p
    result = 1
    while n > 0:
        n, d = divmod(n, p)
        result = result * (values[d] + p * (n % p) * derivs[d]) % m
    return Residue(result, m)


def apery_mod_sweep(targets: Iterable[int], modulus: int) -> dict[int, int]:
    """A(n) mod modulus at the given n >= 0, via one exact recurrence pass.

    Keeps only a two-value window of exact A values, so memory stays flat no
    matter how large max(targets) is.  Intended for the occasional reduction
    at indices too large to be worth caching exactly.
    """
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    wanted = set(targets)
    if not wanted:
        return {}
    if min(wanted) < 0:
        raise ValueError("sweep targets must be >= 0")
    out: dict[int, int] = {}
    if 0 in wanted:
        out[0] = 1 % modulus
    if 1 in wanted:
        out[1] = 5 % modulus
    prev2, prev1 = 1, 5
    for m in range(2, max(wanted) + 1):
        prev2, prev1 = prev1, _recurrence_step(m, prev1, prev2)
        if m in wanted:
            out[m] = prev1 % modulus
    return out
