"""Splitting types of vector bundles on the projective line.

A splitting type ``(e_1, ..., e_k)`` stands for ``O(e_1) + ... + O(e_k)``.
Types are stored ascending, so two types compare equal exactly when they
describe isomorphic bundles.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Sequence

from .errors import SplitLociError


@dataclass(frozen=True, order=True)
class SplittingType:
    """Canonical (ascending) splitting type.

    The dataclass ordering is lexicographic on ``parts`` and is only used for
    deterministic sorting; the geometric order is :func:`dominance_leq`.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted(int(p) for p in self.parts))
        if not parts:
            raise SplitLociError("rank must be positive")
        object.__setattr__(self, "parts", parts)

    def rank(self) -> int:
        return len(self.parts)

    def degree(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def to_json(self) -> list[int]:
        return list(self.parts)


def make_type(parts: Iterable[int]) -> SplittingType:
    return SplittingType(tuple(parts))


def u(e: SplittingType) -> int:
    """Expected codimension: sum over pairs i<j of max(0, e_j - e_i - 1)."""
    p = e.parts
    total = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            gap = p[j] - p[i] - 1
            if gap > 0:
                total += gap
    return total


def prefix_sums(e: SplittingType) -> list[int]:
    return list(accumulate(e.parts))


def dominance_leq(a: SplittingType, b: SplittingType) -> bool:
    """True iff every prefix sum of ``a`` is at most that of ``b``."""
    if a.rank() != b.rank() or a.degree() != b.degree():
        raise SplitLociError("incomparable universes")
    return all(x <= y for x, y in zip(accumulate(a.parts), accumulate(b.parts)))


def balanced(rank: int, degree: int) -> SplittingType:
    if rank < 1:
        raise SplitLociError("rank must be positive")
    q, rem = divmod(degree, rank)
    return SplittingType((q,) * (rank - rem) + (q + 1,) * rem)


def h0_twist(e: SplittingType, m: int) -> int:
    """h^0 of O(e)(m) on the projective line."""
    return sum(max(0, p + m + 1) for p in e.parts)


@dataclass(frozen=True)
class HilbertProfile:
    """Values ``h(base_twist), h(base_twist + 1), ...`` of ``m -> h^0(O(e)(m))``.

    Outside the stored window the function is 0 on the left and linear of
    slope ``rank`` on the right.
    """

    base_twist: int
    values: tuple[int, ...]

    @property
    def last_twist(self) -> int:
        return self.base_twist + len(self.values) - 1

    def slope(self) -> int:
        if len(self.values) < 2:
            return self.values[-1] if self.values else 0
        return self.values[-1] - self.values[-2]

    def value(self, m: int) -> int:
        if m < self.base_twist:
            return 0
        if m > self.last_twist:
            return self.values[-1] + self.slope() * (m - self.last_twist)
        return self.values[m - self.base_twist]


def hilbert_profile(e: SplittingType) -> HilbertProfile:
    # below -max-2 every twist has no sections; above -min the slope is rank
    lo = -e.parts[-1] - 2
    hi = -e.parts[0]
    return HilbertProfile(lo, tuple(h0_twist(e, m) for m in range(lo, hi + 1)))


def type_from_hilbert(p: HilbertProfile, rank: int) -> SplittingType:
    """Recover the type: the multiplicity of O(-j) is the second difference at j."""
    vals = list(p.values)
    bad = SplitLociError("not a splitting-type Hilbert function")
    if rank < 1 or not vals or vals[0] != 0 or any(v < 0 for v in vals):
        raise bad
    padded = [0, 0] + vals
    parts: list[int] = []
    for i in range(2, len(padded)):
        second = padded[i] - 2 * padded[i - 1] + padded[i - 2]
        if second < 0:
            raise bad
        j = p.base_twist + i - 2
        parts.extend([-j] * second)
    if len(parts) != rank or padded[-1] - padded[-2] != rank:
        raise bad
    return SplittingType(tuple(parts))


def serre_dual(e: SplittingType) -> SplittingType:
    """Type of the relative dual twisted by the dualizing sheaf: parts -e_i - 2."""
    return SplittingType(tuple(-p - 2 for p in e.parts))


def h0_end(e: SplittingType) -> int:
    """h^0 of End(O(e)); equals u(e) + rank(e)**2."""
    return sum(max(0, a - b + 1) for a in e.parts for b in e.parts)


def is_balanced(e: SplittingType) -> bool:
    return e.parts[-1] - e.parts[0] <= 1


def types_in_window(rank: int, degree: int, lo: int, hi: int) -> Iterable[SplittingType]:
    """All ascending types of the given rank/degree with parts in ``[lo, hi]``."""

    def rec(prefix: list[int], start: int, remaining: int, left: int):
        if left == 0:
            if remaining == 0:
                yield SplittingType(tuple(prefix))
            return
        # remaining parts are all >= the next one, and all <= hi
        for x in range(start, hi + 1):
            if x * left > remaining:
                break
            if remaining - x > hi * (left - 1):
                continue
            prefix.append(x)
            yield from rec(prefix, x, remaining - x, left - 1)
            prefix.pop()

    if rank < 1:
        raise SplitLociError("rank must be positive")
    yield from rec([], lo, degree, rank)


def parse_type(text: str | Sequence[int]) -> SplittingType:
    """Parse ``"-2,-2,1"`` (brackets and spaces tolerated) into a type."""
    if not isinstance(text, str):
        return make_type(text)
    cleaned = text.strip().strip("()[]")
    try:
        parts = [int(tok) for tok in cleaned.replace(" ", "").split(",") if tok]
    except ValueError as exc:
        raise SplitLociError(f"cannot parse splitting type {text!r}") from exc
    return make_type(parts)
