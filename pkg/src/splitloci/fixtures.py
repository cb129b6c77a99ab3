"""Published worked examples, each as a named yes/no check.

``splitloci fixtures`` runs all of them; the test-suite runs them too.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .brill_noether import BNContext, maximal_strata_bruteforce, u_wrl_closed_form, w_rl, wrd_decomposition
from .degeneration_lab import (
    EndoModel,
    diag_kernel,
    diag_map_rank,
    elliptic_pushforward,
    nullity,
    order_preserving_space,
)
from .splitting_core import balanced, dominance_leq, h0_twist, make_type, serre_dual, u
from .strat_poset import build_poset, downset, expected_dimension, export_dot
from .theta_calc import div, dual_class, exp_series, extreme_summand_class, kkl_check, mul, point_count


@dataclass(frozen=True)
class Fixture:
    name: str
    check: Callable[[], bool]


T = make_type
GENUS5 = BNContext(5, 3, 4)
GENUS6 = BNContext(6, 3, 4)
PENTAGONAL = BNContext.from_pushforward(12, 5, -4)  # d - g = 0, any genus works
GENUS5_NODES = {T([-1, -1, -1]): 5, T([-2, -1, 0]): 4, T([-2, -2, 1]): 1, T([-3, 0, 0]): 1, T([-3, -1, 1]): 0}
GENUS5_COVERS = {
    (T([-2, -1, 0]), T([-1, -1, -1])),
    (T([-2, -2, 1]), T([-2, -1, 0])),
    (T([-3, 0, 0]), T([-2, -1, 0])),
    (T([-3, -1, 1]), T([-2, -2, 1])),
    (T([-3, -1, 1]), T([-3, 0, 0])),
}
TABLE_W3 = [T([-4, 0, 0, 0, 0]), T([-3, -2, 0, 0, 1]), T([-2, -2, -2, 1, 1]), T([-2, -2, -2, -1, 3])]


def _wrd(ctx, r):
    return [(rep.stratum, rep.dim) for rep in wrd_decomposition(ctx, r)]


def _genus5_poset() -> bool:
    p = build_poset(GENUS5)
    dims = {e: expected_dimension(GENUS5, e) for e in p.types}
    return dims == GENUS5_NODES and set(p.cover_pairs()) == GENUS5_COVERS


def _genus5_dot() -> bool:
    text = export_dot(build_poset(GENUS5))
    return text.count("label=") == 5 and text.count("->") == 5


def _nullities_match(model: EndoModel, wp: int, both: int) -> bool:
    return (
        nullity(order_preserving_space(model, "p")) == wp
        and nullity(order_preserving_space(model, "p") + order_preserving_space(model, "q")) == both
    )


def _special_diag() -> bool:
    m = EndoModel.at_pq(3, 0, 2)
    ker = diag_kernel(m)
    return diag_map_rank(m) == 3 and len(ker) == 1 and sum(1 for x in ker[0] if x) == 1


def _cli(argv, needle_checks) -> bool:
    import io
    from contextlib import redirect_stdout

    from .cli import run

    buf = io.StringIO()
    with redirect_stdout(buf):
        code = run(argv)
    return code == 0 and needle_checks(buf.getvalue())


def _cli_wrd_table(out: str) -> bool:
    rows = [ln.split() for ln in out.strip().splitlines()[2:]]
    return len(rows) == 2 and sorted(r[3] for r in rows) == ["0", "1"]


FIXTURES: list[Fixture] = [
    Fixture("make_type (1,-3,-1) -> (-3,-1,1)", lambda: make_type([1, -3, -1]).parts == (-3, -1, 1)),
    Fixture("u(-4,0,0) = 6", lambda: u(T([-4, 0, 0])) == 6),
    Fixture("u(-3,-2,1) = 5", lambda: u(T([-3, -2, 1])) == 5),
    Fixture("u(-4,0,0,0,0) = 12", lambda: u(T([-4, 0, 0, 0, 0])) == 12),
    Fixture("(-3,-1,1) <= (-2,-2,1)", lambda: dominance_leq(T([-3, -1, 1]), T([-2, -2, 1]))),
    Fixture(
        "(-2,-2,1) and (-3,0,0) incomparable",
        lambda: not dominance_leq(T([-2, -2, 1]), T([-3, 0, 0])) and not dominance_leq(T([-3, 0, 0]), T([-2, -2, 1])),
    ),
    Fixture("balanced(3,-3) = (-1,-1,-1)", lambda: balanced(3, -3) == T([-1, -1, -1])),
    Fixture("h0 of (-3,0,0) twisted by 1 = 4", lambda: h0_twist(T([-3, 0, 0]), 1) == 4),
    Fixture("serre_dual(-2,-2,1) = (-3,0,0)", lambda: serre_dual(T([-2, -2, 1])) == T([-3, 0, 0])),
    Fixture("genus 6: w_{1,0} = (-4,0,0)", lambda: w_rl(GENUS6, 1, 0) == T([-4, 0, 0])),
    Fixture("genus 6: w_{1,1} = (-3,-2,1)", lambda: w_rl(GENUS6, 1, 1) == T([-3, -2, 1])),
    Fixture("rank 5 table: w_{3,l}", lambda: [w_rl(PENTAGONAL, 3, l) for l in range(4)] == TABLE_W3),
    Fixture("closed-form u, genus 6", lambda: [u_wrl_closed_form(GENUS6, 1, l) for l in (0, 1)] == [6, 5]),
    Fixture("rank 5 table: u(w_{3,l}) = 12,11,12,15", lambda: [u_wrl_closed_form(PENTAGONAL, 3, l) for l in range(4)] == [12, 11, 12, 15]),
    Fixture("W^1_4, genus 5: two curves", lambda: _wrd(GENUS5, 1) == [(T([-3, 0, 0]), 1), (T([-2, -2, 1]), 1)]),
    Fixture("W^1_4, genus 6: dims 0 and 1", lambda: _wrd(GENUS6, 1) == [(T([-4, 0, 0]), 0), (T([-3, -2, 1]), 1)]),
    Fixture("W^0_4, genus 5 = closure of (-2,-1,0)", lambda: _wrd(GENUS5, 0) == [(T([-2, -1, 0]), 4)]),
    Fixture("rank 5 table: first three maximal", lambda: maximal_strata_bruteforce(5, -4, 3, 8) == sorted(TABLE_W3[:3])),
    Fixture("genus-5 trigonal poset", _genus5_poset),
    Fixture(
        "downset of (-2,-2,1)",
        lambda: set(downset(build_poset(GENUS5), T([-2, -2, 1]))) == {T([-2, -2, 1]), T([-3, -1, 1])},
    ),
    Fixture("(-3,-1,1) is two points (dim 0)", lambda: expected_dimension(GENUS5, T([-3, -1, 1])) == 0),
    Fixture("genus-5 DOT: 5 nodes, 5 edges", _genus5_dot),
    Fixture(
        "(e^θ)^2 / e^θ = e^θ",
        lambda: div(mul(exp_series(1, 8), exp_series(1, 8)), exp_series(1, 8)) == exp_series(1, 8),
    ),
    Fixture("class of (-3,0,0) = θ^4/24", lambda: _class(extreme_summand_class(3, -3, 3, 5), Fraction(1, 24), 4)),
    Fixture("class of (-2,-1,0) = θ", lambda: _class(extreme_summand_class(3, -3, 2, 5), Fraction(1), 1)),
    Fixture("class of (-2,-2,1) = θ^4/24", lambda: _class(dual_class(T([-2, -2, 1]), 5), Fraction(1, 24), 4)),
    Fixture("class of (-3,-1,1) = θ^5/60 is two points", lambda: point_count(Fraction(1, 60), 5, 5) == 2),
    Fixture("[W^1_4] = θ^4/12", lambda: kkl_check(5)),
    Fixture("elliptic push-forward of O_X, k=3", lambda: elliptic_pushforward(3, 0, True) == T([-2, -1, 0])),
    Fixture("dim W_p = 6 for k=3", lambda: _nullities_match(EndoModel.generic(3, 1), 6, 3)),
    Fixture("dim W_p ∩ W_q = k+1 when L = O(np+mq)", lambda: _nullities_match(EndoModel.at_pq(3, 0, 2), 6, 4)),
    Fixture("diag map surjective, generic k=3", lambda: diag_map_rank(EndoModel.generic(3, 1)) == 3 and not diag_kernel(EndoModel.generic(3, 1))),
    Fixture("diag map, special k=3: one-entry kernel", _special_diag),
    Fixture(
        "cli bn-wrd genus 6 table",
        lambda: _cli(["bn-wrd", "--g", "6", "--k", "3", "--d", "4", "--r", "1", "--format", "table"], _cli_wrd_table),
    ),
    Fixture(
        "cli strata-poset genus 5 dot",
        lambda: _cli(["strata-poset", "--g", "5", "--k", "3", "--d", "4", "--format", "dot"], lambda s: s.count("label=") == 5),
    ),
]


def _class(res, a, u_val) -> bool:
    return res.a == a and res.u == u_val


def run_fixtures() -> list[tuple[str, bool, str]]:
    results = []
    for fx in FIXTURES:
        try:
            ok, note = bool(fx.check()), ""
        except Exception as exc:  # a crashing fixture is a failing fixture
            ok, note = False, f"{type(exc).__name__}: {exc}"
        results.append((fx.name, ok, note))
    return results
