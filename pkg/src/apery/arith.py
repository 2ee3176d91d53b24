"""Exact arithmetic helpers shared by the whole package.

Arbitrary-precision integers are plain Python ints and exact rationals are
``fractions.Fraction``; both round-trip through decimal strings, which is the
serialization the CLI uses.  This module adds residues, modular inverses, and
the two classical congruence facts (Wolstenholme, Jacobsthal) that feed the
mod p^3 checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "PRIMALITY_BOUND",
    "Residue",
    "binomial",
    "harmonic",
    "is_prime",
    "jacobsthal_holds",
    "mod_inverse",
    "primes_upto",
    "rational_mod",
    "wolstenholme_residue",
]

# Trial division is plenty for desk-scale scans.  Swap in a stronger test
# here if a run ever needs moduli beyond this bound.
PRIMALITY_BOUND = 10**6


def is_prime(n: int) -> bool:
    """Deterministic primality check for n up to PRIMALITY_BOUND."""
    if n > PRIMALITY_BOUND:
        raise ValueError(f"is_prime supports n <= {PRIMALITY_BOUND}, got {n}")
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def primes_upto(limit: int) -> list[int]:
    """All primes p <= limit, ascending."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [p for p in range(limit + 1) if flags[p]]


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, with the convention C(n, k) = 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def harmonic(k: int) -> Fraction:
    """The harmonic number H_k = 1 + 1/2 + ... + 1/k, exactly; H_0 = 0."""
    if k < 0:
        raise ValueError(f"harmonic requires k >= 0, got {k}")
    return sum((Fraction(1, i) for i in range(1, k + 1)), Fraction(0))


@dataclass(frozen=True)
class Residue:
    """An integer normalized into [0, modulus), tagged with its modulus.

    Arithmetic is defined only between residues of the same modulus; mixing
    moduli raises ValueError rather than guessing.
    """

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _compatible(self, other: "Residue") -> None:
        if self.modulus != other.modulus:
            raise ValueError(
                f"mixed moduli {self.modulus} and {other.modulus}"
            )

    def __add__(self, other: "Residue") -> "Residue":
        self._compatible(other)
        return Residue(self.value + other.value, self.modulus)

    def __sub__(self, other: "Residue") -> "Residue":
        self._compatible(other)
        return Residue(self.value - other.value, self.modulus)

    def __mul__(self, other: "Residue") -> "Residue":
        self._compatible(other)
        return Residue(self.value * other.value, self.modulus)

    def __pow__(self, exponent: int) -> "Residue":
        # pow() accepts negative exponents when the value is invertible
        return Residue(pow(self.value, exponent, self.modulus), self.modulus)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


def mod_inverse(a: int, m: int) -> Residue:
    """The residue r with a*r = 1 (mod m); ValueError when gcd(a, m) > 1."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    try:
        return Residue(pow(a, -1, m), m)
    except ValueError:
        raise ValueError(f"{a} is not invertible modulo {m}") from None


def rational_mod(q: Fraction | int, m: int) -> Residue:
    """Reduce an exact rational modulo m as numerator * denominator^-1.

    The reduction only makes sense when the denominator is coprime to m;
    otherwise ValueError is raised.
    """
    q = Fraction(q)
    if math.gcd(q.denominator, m) != 1:
        raise ValueError(
            f"denominator {q.denominator} is not invertible modulo {m}"
        )
    return Residue(q.numerator * pow(q.denominator, -1, m), m)


def wolstenholme_residue(p: int) -> Residue:
    """Sum of d^-2 over 0 < d < p, modulo p.  Zero for every prime p >= 5."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    total = sum(pow(d, -2, p) for d in range(1, p))
    return Residue(total, p)


def jacobsthal_holds(a: int, b: int, p: int) -> bool:
    """Whether C(p*a, p*b) = C(a, b) modulo p^3.

    True for every prime p >= 5 and a >= b >= 0 (Jacobsthal's congruence);
    this routine checks one instance by exact computation.
    """
    if a < b or b < 0:
        raise ValueError(f"need a >= b >= 0, got a={a}, b={b}")
    if p < 5 or not is_prime(p):
        raise ValueError(f"p must be a prime >= 5, got {p}")
    return (binomial(p * a, p * b) - binomial(a, b)) % p**3 == 0
