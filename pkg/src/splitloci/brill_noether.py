"""Brill-Noether numerology for a general k-gonal curve.

Everything here is closed-form arithmetic on (g, k, d, r) together with one
brute-force enumeration, :func:`maximal_strata_bruteforce`, kept independent
of the closed forms so the two can be checked against each other.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate

from .errors import SplitLociError
from .splitting_core import (
    SplittingType,
    balanced,
    h0_twist,
    make_type,
    types_in_window,
    u,
)


@dataclass(frozen=True)
class BNContext:
    g: int
    k: int
    d: int

    def __post_init__(self):
        if self.k < 2:
            raise SplitLociError("cover degree k must be at least 2")
        if self.g < 0:
            raise SplitLociError("genus must be non-negative")

    @property
    def d_prime(self) -> int:
        """Degree of the push-forward, d - g + 1 - k."""
        return self.d - self.g + 1 - self.k

    @classmethod
    def from_pushforward(cls, g: int, k: int, d_prime: int) -> "BNContext":
        return cls(g, k, d_prime + g - 1 + k)


@dataclass(frozen=True)
class StratumReport:
    stratum: SplittingType
    ell: int | None
    codim: int
    dim: int | None  # None means the stratum is empty (u > g)
    maximal: bool
    whole_picard: bool = False

    @property
    def empty(self) -> bool:
        return self.dim is None

    def to_json(self) -> dict:
        out = {
            "type": self.stratum.to_json(),
            "ell": self.ell,
            "u": self.codim,
            "dim": "empty" if self.dim is None else self.dim,
            "maximal": self.maximal,
        }
        if self.whole_picard:
            out["whole_picard"] = True
        return out


def rho(g: int, r: int, d: int) -> int:
    return g - (r + 1) * (g - d + r)


def rho_k(ctx: BNContext, r: int) -> int:
    """Maximum of rho(g, r - l, d) - l*k over l = 0..min(r, g - d + r - 1)."""
    if r < 0:
        raise SplitLociError("r must be non-negative")
    g, k, d = ctx.g, ctx.k, ctx.d
    if r <= d - g:
        return g
    r_top = min(r, g - d + r - 1)
    return max(rho(g, r - ell, d) - ell * k for ell in range(r_top + 1))


def ell_range(ctx: BNContext, r: int) -> range:
    """Labels l for which the 'balanced plus balanced' type w_{r,l} exists."""
    return range(max(0, r + 2 - ctx.k), r + 1)


def is_admissible(ctx: BNContext, r: int, ell: int) -> bool:
    """Whether w_{r,l} is maximal among types with r+1 sections."""
    if ell not in ell_range(ctx, r):
        return False
    return ell == 0 or ell <= ctx.g - ctx.d + 2 * r + 1 - ctx.k


def _check_wrl(ctx: BNContext, r: int, ell: int) -> None:
    if r < 0:
        raise SplitLociError("r must be non-negative")
    if r <= ctx.d - ctx.g:
        raise SplitLociError("Brill-Noether locus is all of Pic")
    if ell not in ell_range(ctx, r):
        raise SplitLociError("no such stratum")


def w_rl(ctx: BNContext, r: int, ell: int) -> SplittingType:
    """B(k-r-1+l, d'-l) + B(r+1-l, l)."""
    _check_wrl(ctx, r, ell)
    neg = balanced(ctx.k - r - 1 + ell, ctx.d_prime - ell)
    pos = balanced(r + 1 - ell, ell)
    return make_type(neg.parts + pos.parts)


def u_wrl_closed_form(ctx: BNContext, r: int, ell: int) -> int:
    _check_wrl(ctx, r, ell)
    return ell * ctx.k - (r + 1 - ell) * (ctx.d - ctx.g - r + ell)


def _report(ctx: BNContext, e: SplittingType, ell, maximal: bool, whole=False) -> StratumReport:
    cod = u(e)
    dim = ctx.g - cod if cod <= ctx.g else None
    return StratumReport(e, ell, cod, dim, maximal, whole)


def wrd_decomposition(ctx: BNContext, r: int, include_nonmaximal: bool = False) -> list[StratumReport]:
    """Strata whose closures make up W^r_d, sorted by l.

    When W^r_d is all of Pic^d a single sentinel report for the balanced
    type is returned (``whole_picard=True``, ``ell=None``).  With
    ``include_nonmaximal`` the dominated 'balanced plus balanced' types are
    listed too, flagged ``maximal=False``.
    """
    if r < 0:
        raise SplitLociError("r must be non-negative")
    if r <= ctx.d - ctx.g:
        return [_report(ctx, balanced(ctx.k, ctx.d_prime), None, True, whole=True)]
    out = []
    for ell in ell_range(ctx, r):
        maximal = is_admissible(ctx, r, ell)
        if maximal or include_nonmaximal:
            out.append(_report(ctx, w_rl(ctx, r, ell), ell, maximal))
    return out


def max_component_dimension(reports: list[StratumReport]) -> int | None:
    dims = [rep.dim for rep in reports if rep.maximal and rep.dim is not None]
    return max(dims) if dims else None


def default_window(rank: int, degree: int, r: int) -> int:
    return abs(degree) + rank + r + 2


def maximal_strata_bruteforce(rank: int, degree: int, r: int, window: int | None = None) -> list[SplittingType]:
    """Dominance-maximal types with at least r+1 sections, by enumeration.

    Every type with parts in ``[-window, window]`` is tested; nothing from the
    closed forms above is used.  Output is sorted lexicographically.
    """
    if window is None:
        window = default_window(rank, degree, r)
    cands = [e for e in types_in_window(rank, degree, -window, window) if h0_twist(e, 0) >= r + 1]
    # sorting by total of prefix sums is a linear extension of dominance, so
    # anything above a candidate has already been seen when it is examined
    keyed = sorted(((sum(accumulate(e.parts)), e) for e in cands), key=lambda t: (-t[0], t[1].parts))
    maxima: list[tuple[list[int], SplittingType]] = []
    for _, e in keyed:
        pref = list(accumulate(e.parts))
        dominated = any(all(x <= y for x, y in zip(pref, mp)) for mp, _ in maxima)
        if not dominated:
            maxima.append((pref, e))
    return sorted(e for _, e in maxima)
