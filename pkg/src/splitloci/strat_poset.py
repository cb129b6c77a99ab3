"""The poset of splitting types that occur in Pic^d of a general k-gonal curve."""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from .brill_noether import BNContext
from .errors import SplitLociError
from .splitting_core import SplittingType, balanced, dominance_leq, u

DEFAULT_NODE_CAP = 100_000
SCHEMA = "splitloci/1"


def node_cap_from_env(default: int = DEFAULT_NODE_CAP) -> int:
    raw = os.environ.get("SPLITLOCI_NODE_CAP")
    if raw is None or raw.strip() == "":
        return default
    try:
        cap = int(raw)
    except ValueError as exc:
        raise SplitLociError(f"SPLITLOCI_NODE_CAP must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise SplitLociError("SPLITLOCI_NODE_CAP must be positive")
    return cap


@dataclass(frozen=True)
class StratPoset:
    ctx: BNContext
    nodes: tuple[tuple[SplittingType, int], ...]
    covers: tuple[tuple[int, int], ...]  # (lower, upper) indices into nodes
    u_limit: int = -1
    _index: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {e: i for i, (e, _) in enumerate(self.nodes)})

    @property
    def types(self) -> list[SplittingType]:
        return [e for e, _ in self.nodes]

    def index(self, e: SplittingType) -> int:
        try:
            return self._index[e]
        except KeyError:
            raise SplitLociError(f"{e} is not a node of this poset") from None

    def maximum(self) -> SplittingType:
        return balanced(self.ctx.k, self.ctx.d_prime)

    def cover_pairs(self) -> list[tuple[SplittingType, SplittingType]]:
        return [(self.nodes[i][0], self.nodes[j][0]) for i, j in self.covers]


def enumerate_strata(ctx: BNContext, u_limit: int | None = None, node_cap: int = DEFAULT_NODE_CAP) -> list[SplittingType]:
    """Types of rank k and degree d' with u <= u_limit (default g), sorted.

    If two parts differ by more than u_limit + 1 that pair alone pushes u past
    the limit, so all parts lie within u_limit + 1 of the balanced value.
    """
    limit = ctx.g if u_limit is None else u_limit
    k, dp = ctx.k, ctx.d_prime
    lo = dp // k - limit - 1
    hi = -((-dp) // k) + limit + 1
    out = []
    for e in _bounded_u_types(k, dp, lo, hi, limit):
        out.append(e)
        if len(out) > node_cap:
            raise SplitLociError("poset too large")
    return sorted(out)


def _bounded_u_types(rank: int, degree: int, lo: int, hi: int, limit: int):
    # same recursion as types_in_window, pruning as soon as the partial u exceeds limit
    def rec(prefix, start, remaining, left, partial_u):
        if left == 0:
            if remaining == 0:
                yield SplittingType(tuple(prefix))
            return
        for x in range(start, hi + 1):
            if x * left > remaining:
                break
            if remaining - x > hi * (left - 1):
                continue
            add = sum(max(0, x - p - 1) for p in prefix)
            if partial_u + add > limit:
                # larger x only increases the gaps
                break
            prefix.append(x)
            yield from rec(prefix, x, remaining - x, left - 1, partial_u + add)
            prefix.pop()

    yield from rec([], lo, degree, rank, 0)


def _covers(types: list[SplittingType]) -> list[tuple[int, int]]:
    n = len(types)
    above = [[j for j in range(n) if j != i and dominance_leq(types[i], types[j])] for i in range(n)]
    above_sets = [set(a) for a in above]
    covers = []
    for i in range(n):
        for j in above[i]:
            # j covers i unless some c strictly between them
            if not any(j in above_sets[c] for c in above[i] if c != j):
                covers.append((i, j))
    return sorted(covers)


def build_poset(ctx: BNContext, include_empty: int = 0, node_cap: int | None = None) -> StratPoset:
    """Nodes are types with u <= g + include_empty; covers come from the full order."""
    if include_empty < 0:
        raise SplitLociError("include_empty must be non-negative")
    cap = node_cap_from_env() if node_cap is None else node_cap
    limit = ctx.g + include_empty
    types = enumerate_strata(ctx, limit, cap)
    nodes = tuple((e, u(e)) for e in types)
    return StratPoset(ctx, nodes, tuple(_covers(types)), limit)


def downset(p: StratPoset, e: SplittingType) -> list[SplittingType]:
    """Index set of the degeneracy locus of e: all nodes dominated by e."""
    p.index(e)
    return [t for t in p.types if dominance_leq(t, e)]


def expected_dimension(ctx: BNContext, e: SplittingType) -> int | None:
    """g - u(e), or None when the stratum is empty (u > g)."""
    if e.rank() != ctx.k or e.degree() != ctx.d_prime:
        raise SplitLociError(
            f"type {e} does not have rank {ctx.k} and degree {ctx.d_prime}"
        )
    cod = u(e)
    return ctx.g - cod if cod <= ctx.g else None


def _label(e: SplittingType, cod: int) -> str:
    return f"{e} u={cod}"


def export_dot(p: StratPoset) -> str:
    lines = ["digraph strata {", "  rankdir=BT;"]
    for i, (e, cod) in enumerate(p.nodes):
        lines.append(f'  n{i} [label="{_label(e, cod)}"];')
    for i, j in p.covers:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_json(p: StratPoset) -> dict:
    g = p.ctx.g
    return {
        "schema": SCHEMA,
        "g": g,
        "k": p.ctx.k,
        "d": p.ctx.d,
        "nodes": [
            {"type": e.to_json(), "u": cod, "dim": g - cod if cod <= g else "empty"}
            for e, cod in p.nodes
        ],
        "covers": [list(c) for c in p.covers],
    }


def export_json(p: StratPoset) -> str:
    return json.dumps(poset_to_json(p), sort_keys=True, indent=2) + "\n"
