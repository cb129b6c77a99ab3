"""Truncated power series in the theta class and splitting-locus class coefficients.

All coefficients are :class:`fractions.Fraction`; nothing here touches floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import SplitLociError
from .splitting_core import SplittingType, balanced, is_balanced, make_type, serre_dual, u


@dataclass(frozen=True)
class ThetaPoly:
    """c_0 + c_1 theta + ... + c_trunc theta^trunc, arithmetic mod theta^(trunc+1)."""

    coeffs: tuple[Fraction, ...]
    trunc: int

    def __post_init__(self):
        if self.trunc < 0:
            raise SplitLociError("truncation order must be non-negative")
        cs = [Fraction(c) for c in self.coeffs[: self.trunc + 1]]
        cs += [Fraction(0)] * (self.trunc + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c, trunc: int) -> "ThetaPoly":
        return cls((Fraction(c),), trunc)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i <= self.trunc:
            return self.coeffs[i]
        return Fraction(0)

    def __mul__(self, other: "ThetaPoly") -> "ThetaPoly":
        return mul(self, other)

    def __truediv__(self, other: "ThetaPoly") -> "ThetaPoly":
        return div(self, other)

    def __add__(self, other: "ThetaPoly") -> "ThetaPoly":
        n = min(self.trunc, other.trunc)
        return ThetaPoly(tuple(self[i] + other[i] for i in range(n + 1)), n)

    def __str__(self):
        terms = [f"{c}*θ^{i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


def exp_series(sign: int, trunc: int) -> ThetaPoly:
    """sum_{i <= trunc} (sign*theta)^i / i!"""
    if sign not in (1, -1):
        raise SplitLociError("sign must be +1 or -1")
    return ThetaPoly(tuple(Fraction(sign**i, factorial(i)) for i in range(trunc + 1)), trunc)


def mul(a: ThetaPoly, b: ThetaPoly) -> ThetaPoly:
    n = min(a.trunc, b.trunc)
    out = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        ai = a.coeffs[i]
        if not ai:
            continue
        for j in range(n + 1 - i):
            out[i + j] += ai * b.coeffs[j]
    return ThetaPoly(tuple(out), n)


def div(a: ThetaPoly, b: ThetaPoly) -> ThetaPoly:
    """Quotient q with a = q*b mod theta^(trunc+1); b needs a unit constant term."""
    if b.coeffs[0] == 0:
        raise SplitLociError("non-unit divisor")
    n = min(a.trunc, b.trunc)
    q = [Fraction(0)] * (n + 1)
    inv0 = 1 / b.coeffs[0]
    for i in range(n + 1):
        acc = a.coeffs[i] - sum(q[j] * b.coeffs[i - j] for j in range(i))
        q[i] = acc * inv0
    return ThetaPoly(tuple(q), n)


@dataclass(frozen=True)
class ClassResult:
    """Class a * theta^u of a degeneracy locus; ``point_count`` only when u == g."""

    stratum: SplittingType
    a: Fraction
    u: int
    point_count: int | None = None

    def format(self) -> str:
        return f"{self.a.numerator}/{self.a.denominator} · θ^{self.u}"

    def to_json(self) -> dict:
        return {
            "type": self.stratum.to_json(),
            "a": [self.a.numerator, self.a.denominator],
            "u": self.u,
            "points": self.point_count,
        }


def extreme_summand_type(k: int, total_degree: int, n: int) -> SplittingType:
    """The type O(-n) + B(k-1, total_degree + n), checked to have -n strictly minimal."""
    if k < 2:
        raise SplitLociError("not an extreme-summand type")
    rest = balanced(k - 1, total_degree + n)
    if -n >= rest.parts[0]:
        raise SplitLociError("not an extreme-summand type")
    return make_type((-n,) + rest.parts)


def is_extreme_summand(e: SplittingType) -> bool:
    p = e.parts
    return len(p) >= 2 and p[0] < p[1] and is_balanced(SplittingType(p[1:]))


def extreme_summand_coefficient(u_val: int, trunc: int | None = None) -> Fraction:
    """theta^u coefficient of (e^theta)^2 / e^theta, computed through the series engine."""
    n = u_val if trunc is None else max(trunc, u_val)
    e_plus = exp_series(1, n)
    return div(mul(e_plus, e_plus), e_plus)[u_val]


def point_count(a: Fraction, u_val: int, g: int) -> int:
    """a * g!, the number of points of a zero-dimensional class a * theta^g."""
    if u_val != g:
        raise SplitLociError("not zero-dimensional")
    val = Fraction(a) * factorial(g)
    if val.denominator != 1 or val < 0:
        raise SplitLociError("inconsistent class")
    return int(val)


def extreme_summand_class(k: int, total_degree: int, n: int, g: int) -> ClassResult:
    t = extreme_summand_type(k, total_degree, n)
    cod = u(t)
    # the series is taken to order max(g, u) so the coefficient never depends on g
    a = extreme_summand_coefficient(cod, max(g, cod))
    pts = point_count(a, cod, g) if cod == g else None
    return ClassResult(t, a, cod, pts)


def _class_of_extreme(e: SplittingType, g: int) -> ClassResult:
    return extreme_summand_class(e.rank(), e.degree(), -e.parts[0], g)


def dual_class(e: SplittingType, g: int) -> ClassResult:
    """Class of a type whose Serre dual (or itself) is an extreme-summand type.

    L -> K - L is an automorphism of Pic preserving theta that swaps the
    degeneracy loci of e and its dual, so both carry the same coefficient.
    """
    if is_extreme_summand(e):
        return _class_of_extreme(e, g)
    dual = serre_dual(e)
    if not is_extreme_summand(dual):
        raise SplitLociError("coefficient not computable by this module")
    res = _class_of_extreme(dual, g)
    return ClassResult(e, res.a, res.u, res.point_count)


def kkl_coefficient(g: int, r: int, d: int) -> tuple[Fraction, int]:
    """Classical class of W^r_d on a general curve: prod_i i!/(g-d+r+i)! times theta^((r+1)(g-d+r))."""
    s = g - d + r
    coeff = Fraction(1)
    for i in range(r + 1):
        coeff *= Fraction(factorial(i), factorial(s + i))
    return coeff, (r + 1) * s


# Stored value for the stratum (-3,-1,1) of the genus-5 trigonal example.  It
# comes from a general class formula this package does not implement.
STORED_CLASSES: dict[tuple[int, tuple[int, ...]], Fraction] = {
    (5, (-3, -1, 1)): Fraction(1, 60),
}


def stored_class(e: SplittingType, g: int) -> ClassResult:
    try:
        a = STORED_CLASSES[(g, e.parts)]
    except KeyError:
        raise SplitLociError(f"no stored class for {e} in genus {g}") from None
    cod = u(e)
    return ClassResult(e, a, cod, point_count(a, cod, g) if cod == g else None)


def kkl_check(g: int, terms: Sequence[Fraction] | None = None) -> bool:
    """Check that the two W^1_4 components of the genus-5 trigonal example sum to
    the classical class of W^1_4.

    ``terms`` overrides the component coefficients (used to make sure a wrong
    sum is rejected).
    """
    if g != 5:
        raise SplitLociError("kkl_check is only defined for the genus-5 trigonal fixture")
    target, exponent = kkl_coefficient(g, 1, 4)
    if terms is None:
        first = extreme_summand_class(3, -3, 3, g)
        second = dual_class(make_type([-2, -2, 1]), g)
        if first.u != exponent or second.u != exponent:
            return False
        terms = [first.a, second.a]
    return sum(Fraction(t) for t in terms) == target
