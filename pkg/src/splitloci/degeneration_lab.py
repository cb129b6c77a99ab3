"""Linear-algebra models for the elliptic-chain degeneration.

A component of the chain is an elliptic curve X with a degree-k cover of the
projective line, totally ramified at two points p and q.  For a line bundle
L of degree k + a (0 <= a < k) the push-forward is O(1)^a + O^(k-a), and an
endomorphism is a block upper triangular matrix: scalar entries c[l][j] on
the two diagonal blocks, linear forms alpha*s + beta*t on the off block
(rows l < a, columns j >= a), zero on the other off block.  Here s vanishes
to order k at q and t to order k at p.

Being order preserving at p or q is a pattern of vanishing unknowns.  Only
the vanishing patterns are modelled, never the function field of X.  The
unknowns are rational and the constraint rows have 0/1 coefficients, so the
dimensions computed here do not depend on the ground field.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import SplitLociError
from .splitting_core import SplittingType, make_type

Var = tuple[str, int, int]  # ("c" | "alpha" | "beta", row, col)


def elliptic_pushforward(k: int, d: int, pullback: bool) -> SplittingType:
    """Splitting type of f_*L for a degree-d line bundle on an elliptic k-fold cover."""
    if k < 2:
        raise SplitLociError("cover degree k must be at least 2")
    n, a = divmod(d, k)
    if pullback:
        if a != 0:
            raise SplitLociError(f"L = f^*O(n) needs k | d, got k={k}, d={d}")
        return make_type([n - 2] + [n - 1] * (k - 2) + [n])
    return make_type([n - 1] * (k - a) + [n] * a)


@dataclass(frozen=True)
class EndoModel:
    """Endomorphisms of O(1)^a + O^(k-a) in the adapted basis.

    ``special`` is ``()`` for a general L, ``("at_q", m)`` when L = O(m q)
    (then m = k + a), or ``("at_pq", n, m)`` when L = O(n p + m q) with
    a < n < k, n >= m > 0 and n + m = k + a.
    """

    k: int
    a: int
    special: tuple = ()
    variables: tuple[Var, ...] = field(default=(), compare=False)

    def __post_init__(self):
        k, a = self.k, self.a
        if k < 1 or not 0 <= a < k:
            raise SplitLociError(f"need k >= 1 and 0 <= a < k, got k={k}, a={a}")
        sp = tuple(self.special)
        if sp:
            kind = sp[0]
            if kind == "at_q":
                (m,) = sp[1:]
                if a < 1 or m != k + a:
                    raise SplitLociError("at_q(m) needs a >= 1 and m = k + a")
            elif kind == "at_pq":
                n, m = sp[1:]
                if not (a < n < k and n >= m > 0 and n + m == k + a):
                    raise SplitLociError(f"invalid at_pq({n}, {m}) for k={k}, a={a}")
            else:
                raise SplitLociError(f"unknown special case {kind!r}")
        object.__setattr__(self, "special", sp)
        vs: list[Var] = []
        for l in range(k):
            for j in range(k):
                if (l < a) == (j < a):
                    vs.append(("c", l, j))
        for l in range(a):
            for j in range(a, k):
                vs.append(("alpha", l, j))
                vs.append(("beta", l, j))
        object.__setattr__(self, "variables", tuple(vs))

    @classmethod
    def generic(cls, k: int, a: int) -> "EndoModel":
        return cls(k, a)

    @classmethod
    def at_q(cls, k: int, a: int) -> "EndoModel":
        return cls(k, a, ("at_q", k + a))

    @classmethod
    def at_pq(cls, k: int, a: int, n: int) -> "EndoModel":
        return cls(k, a, ("at_pq", n, k + a - n))

    @property
    def num_vars(self) -> int:
        return len(self.variables)

    def index(self, var: Var) -> int:
        return self.variables.index(var)

    def linear_form_entries(self) -> int:
        return self.a * (self.k - self.a)


def valid_models(k: int) -> list[EndoModel]:
    """Every configuration covered by the two-point analysis for rank k."""
    out = []
    for a in range(k):
        out.append(EndoModel.generic(k, a))
        if a >= 1:
            out.append(EndoModel.at_q(k, a))
        for n in range(a + 1, k):
            m = k + a - n
            if n >= m > 0:
                out.append(EndoModel.at_pq(k, a, n))
    return out


@dataclass(frozen=True)
class ConstraintSystem:
    model: EndoModel
    rows: tuple[dict[int, Fraction], ...]
    tags: tuple[str, ...]

    @property
    def num_vars(self) -> int:
        return self.model.num_vars

    def dense(self) -> list[list[Fraction]]:
        out = []
        for row in self.rows:
            v = [Fraction(0)] * self.num_vars
            for i, c in row.items():
                v[i] = Fraction(c)
            out.append(v)
        return out

    def __add__(self, other: "ConstraintSystem") -> "ConstraintSystem":
        if other.model != self.model:
            raise SplitLociError("cannot stack systems on different models")
        return ConstraintSystem(self.model, self.rows + other.rows, self.tags + other.tags)


def _vanish(model: EndoModel, vars_: list[Var], tag: str) -> ConstraintSystem:
    rows = tuple({model.index(v): Fraction(1)} for v in vars_)
    return ConstraintSystem(model, rows, (tag,) * len(rows))


def order_preserving_space(model: EndoModel, at: str) -> ConstraintSystem:
    """Rows cutting out the endomorphisms that are order preserving at ``at``."""
    cs = [v for v in model.variables if v[0] == "c"]
    if at == "p":
        kill = [v for v in model.variables if v[0] == "alpha"]
        kill += [v for v in cs if v[1] < v[2]]
        return _vanish(model, kill, "order-preserving at p")
    if at != "q":
        raise SplitLociError(f"at must be 'p' or 'q', got {at!r}")
    kind = model.special[0] if model.special else None
    betas = [v for v in model.variables if v[0] == "beta"]
    lower = [v for v in cs if v[1] > v[2]]
    if kind == "at_pq":
        n = model.special[1]
        kill = betas + [v for v in lower if (v[1], v[2]) != (n, n - 1)] + [("c", n - 1, n)]
    elif kind == "at_q":
        kill = [v for v in betas if (v[1], v[2]) != (0, model.k - 1)] + lower
    else:
        kill = betas + lower
    return _vanish(model, kill, "order-preserving at q")


def vanishing_orders(model: EndoModel, at: str) -> list[int]:
    """Order of vanishing at ``at`` of each adapted basis section (a permutation of 0..k-1)."""
    k, a = model.k, model.a
    if at == "p":
        return list(range(k))
    if at != "q":
        raise SplitLociError(f"at must be 'p' or 'q', got {at!r}")
    orders = [a - 1 - j for j in range(a)] + [k + a - 1 - j for j in range(a, k)]
    kind = model.special[0] if model.special else None
    if kind == "at_pq":
        n = model.special[1]
        orders[n], orders[n - 1] = k + a - n, k + a - n - 1
    elif kind == "at_q":
        orders[0], orders[k - 1] = a, a - 1
    return orders


def fiber_matrix(model: EndoModel, x: Sequence, at: str) -> list[list[Fraction]]:
    """Restriction of the endomorphism with coordinates ``x`` to the fiber over ``at``.

    Rows and columns are indexed by vanishing order at that point, so order
    preserving means lower triangular.  A linear-form entry alpha*s + beta*t
    restricts to alpha at p (t vanishes there) and to beta at q.
    """
    k = model.k
    pi = vanishing_orders(model, at)
    lin = "alpha" if at == "p" else "beta"
    out = [[Fraction(0)] * k for _ in range(k)]
    for i, (kind, l, j) in enumerate(model.variables):
        if kind == "c" or kind == lin:
            out[pi[l]][pi[j]] = Fraction(x[i])
    return out


def nullity(cs: ConstraintSystem) -> int:
    return cs.num_vars - linalg.rank(cs.dense(), cs.num_vars)


def solution_basis(cs: ConstraintSystem) -> list[list[Fraction]]:
    return linalg.nullspace(cs.dense(), cs.num_vars)


def _two_point_space(model: EndoModel) -> list[list[Fraction]]:
    return solution_basis(order_preserving_space(model, "p") + order_preserving_space(model, "q"))


def _diag(model: EndoModel, vec: Sequence[Fraction]) -> list[Fraction]:
    return [vec[model.index(("c", j, j))] for j in range(model.k)]


def diag_map_rank(model: EndoModel) -> int:
    """Rank of phi -> (diagonal entries at p) on the endomorphisms order preserving at p and q."""
    basis = _two_point_space(model)
    if not basis:
        return 0
    # columns of the diag map in the basis coordinates
    mat = [[_diag(model, b)[j] for b in basis] for j in range(model.k)]
    return linalg.rank(mat, len(basis))


def diag_kernel(model: EndoModel) -> list[list[Fraction]]:
    """Basis (in variable coordinates) of the kernel of the diagonal map on W_p ∩ W_q."""
    basis = _two_point_space(model)
    if not basis:
        return []
    mat = [[_diag(model, b)[j] for b in basis] for j in range(model.k)]
    out = []
    for lam in linalg.nullspace(mat, len(basis)):
        out.append([sum(l * b[i] for l, b in zip(lam, basis)) for i in range(model.num_vars)])
    return out


def chain_bound_long_form(g: int, k: int, eps: Sequence[int]) -> int:
    """Sum of component dimensions minus k conditions per node, for g >= 2."""
    two_ends = 2 * (k * (k + 1) // 2)
    middle = sum(k + eps[i] for i in range(1, g - 1))
    return two_ends + middle + eps[0] + eps[g - 1] - k * (g - 1)


def chain_bound(g: int, k: int, eps: Sequence[int]) -> int:
    """Upper bound k^2 + delta on limits of endomorphisms over a chain of g elliptic curves.

    ``eps[i]`` is 1 when the i-th component's line bundle is special with
    respect to its nodes.  For g == 1 there are no nodes and the bound is read
    off directly.
    """
    if g < 1:
        raise SplitLociError("genus must be at least 1")
    if len(eps) != g or any(e not in (0, 1) for e in eps):
        raise SplitLociError("eps must be a 0/1 list of length g")
    delta = sum(eps)
    if g == 1:
        return k * k + delta
    long_form = chain_bound_long_form(g, k, eps)
    if long_form != k * k + delta:
        raise AssertionError(f"chain bound mismatch: {long_form} != {k * k + delta}")
    return k * k + delta


def _is_lower_triangular(mat: Sequence[Sequence]) -> bool:
    return all(mat[i][j] == 0 for i in range(len(mat)) for j in range(i + 1, len(mat)))


def node_compatibility(left: Sequence[Sequence], right: Sequence[Sequence], k: int) -> bool:
    """Matching of diagonals across a node.

    ``left`` and ``right`` are the k x k fiber matrices (see
    :func:`fiber_matrix`) of the two components' endomorphisms at the shared
    node.  The constant terms must agree and the j-th diagonal entry on one
    side must equal the (k-j)-th on the other.
    """
    for mat in (left, right):
        if len(mat) != k or any(len(row) != k for row in mat):
            raise SplitLociError(f"expected {k} x {k} matrices")
        if not _is_lower_triangular(mat):
            raise SplitLociError("compatibility undefined")
    if left[0][0] != right[0][0]:
        return False
    return all(left[j][j] == right[k - j][k - j] for j in range(1, k))


def nullity_case_table(kmax: int) -> list[dict]:
    """Per-configuration dimensions for k = 2..kmax, with the expected values alongside."""
    rows = []
    for k in range(2, kmax + 1):
        tri = k * (k + 1) // 2
        for model in valid_models(k):
            kind = model.special[0] if model.special else "generic"
            wp = nullity(order_preserving_space(model, "p"))
            wq = nullity(order_preserving_space(model, "q"))
            both = nullity(order_preserving_space(model, "p") + order_preserving_space(model, "q"))
            drank = diag_map_rank(model)
            kernel = diag_kernel(model)
            sparse = all(sum(1 for x in v if x != 0) <= 1 for v in kernel)
            exp_q = tri + (1 if kind == "at_q" else 0)
            exp_both = k + (0 if kind == "generic" else 1)
            ok = (
                wp == tri and wq == exp_q and both == exp_both and drank == k
                and len(kernel) == both - k and sparse
            )
            rows.append({
                "k": k, "a": model.a, "case": kind, "special": list(model.special[1:]),
                "dim_Wp": wp, "dim_Wq": wq, "dim_WpWq": both, "diag_rank": drank,
                "kernel_dim": len(kernel), "kernel_sparse": sparse,
                "expected": {"dim_Wp": tri, "dim_Wq": exp_q, "dim_WpWq": exp_both, "diag_rank": k},
                "pass": ok,
            })
    return rows
