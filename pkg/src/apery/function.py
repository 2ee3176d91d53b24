"""Numeric evaluation of the entire Apery function and exact truncated
Taylor coefficients of its expansion at the origin.

The interpolation is A(z) = sum_k ((-z)_k (z+1)_k / k!^2)^2 with Pochhammer
symbols (rising factorials).  Terms are updated incrementally, never through
gamma-function quotients, so the poles of gamma at non-positive integers are
never touched.  For non-negative integer z the factor (-z)_k vanishes once
k > z and the series terminates exactly.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "ComplexApprox",
    "TruncatedPolynomial",
    "apery_eval",
    "functional_equation_residual",
    "taylor_coeff_truncated",
]


@dataclass(frozen=True)
class ComplexApprox:
    """A numeric partial sum: value, number of terms summed, tail estimate.

    residual is the magnitude of the first omitted term; it is exactly zero
    when the series terminated before the requested term count.
    """

    real: float
    imag: float
    terms: int
    residual: float

    @property
    def value(self) -> complex:
        return complex(self.real, self.imag)


def apery_eval(z: complex, terms: int = 100_000) -> ComplexApprox:
    """Partial sum of the interpolation series for A(z) with the given
    number of terms.

    The term ratio is ((k - z)(k + 1 + z))^2 / (k + 1)^4, so each step is a
    handful of complex multiplications.  Term magnitudes decay like 1/k^2,
    giving an O(1/terms) tail away from the integers.
    """
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    z = complex(z)
    total = 0j
    term = 1 + 0j
    summed = 0
    for k in range(terms):
        total += term
        summed = k + 1
        term = term * ((k - z) * (k + 1 + z) / (k + 1) ** 2) ** 2
        if term == 0:  # series terminated (integer z)
            break
    return ComplexApprox(total.real, total.imag, summed, abs(term))


def functional_equation_residual(z: complex, terms: int = 100_000) -> float:
    """Residual of the inhomogeneous three-term functional equation at z.

    |z^3 A(z) - (34z^3 - 51z^2 + 27z - 5) A(z-1) + (z-1)^3 A(z-2)
     - (8/pi^2)(2z - 1) sin(pi z)^2|

    evaluated with partial sums of the given length.  Exactly zero at
    integer z up to series termination, since the sine factor vanishes
    there and the equation reduces to the integer recurrence.
    """
    z = complex(z)
    a0 = apery_eval(z, terms).value
    a1 = apery_eval(z - 1, terms).value
    a2 = apery_eval(z - 2, terms).value
    lhs = z**3 * a0 - (34 * z**3 - 51 * z**2 + 27 * z - 5) * a1 + (z - 1) ** 3 * a2
    rhs = 8 / math.pi**2 * (2 * z - 1) * cmath.sin(cmath.pi * z) ** 2
    return abs(lhs - rhs)


class TruncatedPolynomial:
    """Dense polynomial over exact rationals, degree-capped; products drop
    powers above the cap."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: tuple[Fraction, ...]):
        if not coeffs:
            raise ValueError("need at least the constant coefficient")
        self.coeffs = coeffs

    @classmethod
    def one(cls, max_degree: int) -> "TruncatedPolynomial":
        return cls((Fraction(1),) + (Fraction(0),) * max_degree)

    @property
    def max_degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, power: int) -> Fraction:
        return self.coeffs[power]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TruncatedPolynomial) and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        return f"TruncatedPolynomial({self.coeffs!r})"

    def _same_cap(self, other: "TruncatedPolynomial") -> None:
        if self.max_degree != other.max_degree:
            raise ValueError("mixed truncation degrees")

    def __add__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        self._same_cap(other)
        return TruncatedPolynomial(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other) -> "TruncatedPolynomial":
        if isinstance(other, (int, Fraction)):
            return TruncatedPolynomial(tuple(c * other for c in self.coeffs))
        self._same_cap(other)
        cap = self.max_degree
        out = [Fraction(0)] * (cap + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: cap + 1 - i]):
                if b:
                    out[i + j] += a * b
        return TruncatedPolynomial(tuple(out))

    __rmul__ = __mul__

    def mul_sparse(self, terms: dict[int, Fraction]) -> "TruncatedPolynomial":
        """Product with sum_{p} terms[p] z^p, truncated at the cap."""
        cap = self.max_degree
        out = [Fraction(0)] * (cap + 1)
        for power, coeff in terms.items():
            if power > cap or not coeff:
                continue
            for i, a in enumerate(self.coeffs[: cap + 1 - power]):
                if a:
                    out[i + power] += a * coeff
        return TruncatedPolynomial(tuple(out))


def taylor_coeff_truncated(m: int, upper: int) -> Fraction:
    """Exact coefficient of z^m in the series truncated at k <= upper.

    The k-th summand of the interpolation series expands as

        (1 - 2 z^2/1^2 + z^4/1^4) ... (1 - 2 z^2/(k-1)^2 + z^4/(k-1)^4)
        * (z^2/k^2 + 2 z^3/k^3 + z^4/k^4)

    for k >= 1 (and 1 for k = 0).  The running product is kept as a
    TruncatedPolynomial capped at degree m, so the cost is O(upper * m)
    rational multiplications.
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if upper < 0:
        raise ValueError(f"upper must be >= 0, got {upper}")
    total = Fraction(1) if m == 0 else Fraction(0)  # the k = 0 summand
    if m < 2:
        return total  # every k >= 1 summand starts at z^2
    running = TruncatedPolynomial.one(m)
    for k in range(1, upper + 1):
        k2 = Fraction(1, k * k)
        k3 = Fraction(1, k**3)
        k4 = Fraction(1, k**4)
        pick = running[m - 2] * k2
        if m >= 3:
            pick += running[m - 3] * 2 * k3
        if m >= 4:
            pick += running[m - 4] * k4
        total += pick
        running = running.mul_sparse({0: Fraction(1), 2: -2 * k2, 4: k4})
    return total
