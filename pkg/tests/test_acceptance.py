"""Acceptance gate: one test per criterion, reported by conftest.py as a PASS/FAIL line each.

Every check is exact equality over Fractions or integers.  Random sweeps use
fixed seeds so a run is reproducible.
"""
import random
from fractions import Fraction
from functools import lru_cache
from math import factorial

import pytest

from splitloci.brill_noether import (
    BNContext,
    ell_range,
    is_admissible,
    maximal_strata_bruteforce,
    rho_k,
    u_wrl_closed_form,
    w_rl,
    wrd_decomposition,
)
from splitloci.degeneration_lab import (
    chain_bound,
    chain_bound_long_form,
    diag_kernel,
    nullity_case_table,
    valid_models,
)
from splitloci.errors import SplitLociError
from splitloci.splitting_core import (
    dominance_leq,
    h0_end,
    hilbert_profile,
    make_type,
    serre_dual,
    type_from_hilbert,
    types_in_window,
    u,
)
from splitloci.strat_poset import build_poset, expected_dimension
from splitloci.theta_calc import (
    dual_class,
    extreme_summand_class,
    extreme_summand_coefficient,
    kkl_check,
    point_count,
)

T = make_type
SWEEP = 10_000
pytestmark = pytest.mark.acceptance


def test_c01_genus5_poset(record_property):
    ctx = BNContext(5, 3, 4)
    p = build_poset(ctx)
    expected_nodes = [(-3, -1, 1), (-3, 0, 0), (-2, -2, 1), (-2, -1, 0), (-1, -1, -1)]
    expected_covers = {
        ((-3, -1, 1), (-3, 0, 0)),
        ((-3, -1, 1), (-2, -2, 1)),
        ((-3, 0, 0), (-2, -1, 0)),
        ((-2, -2, 1), (-2, -1, 0)),
        ((-2, -1, 0), (-1, -1, -1)),
    }
    assert sorted(e.parts for e in p.types) == expected_nodes
    assert {(a.parts, b.parts) for a, b in p.cover_pairs()} == expected_covers
    dims = tuple(sorted((expected_dimension(ctx, e) for e in p.types), reverse=True))
    assert dims == (5, 4, 1, 1, 0)
    record_property("detail", f"{len(p.nodes)} nodes, {len(p.covers)} covers, dims {dims}")


def _random_wrl_tuple(rng):
    while True:
        g, k, r = rng.randint(0, 40), rng.randint(2, 8), rng.randint(0, 6)
        d = rng.randint(g + r - 12, g + r - 1)  # keeps r > d - g
        ctx = BNContext(g, k, d)
        ells = ell_range(ctx, r)
        if ells:
            return ctx, r, rng.choice(list(ells))


def test_c02_u_values(record_property):
    assert u(T([-4, 0, 0])) == 6
    assert u(T([-3, -2, 1])) == 5
    ctx = BNContext.from_pushforward(9, 5, -4)
    assert [u(w_rl(ctx, 3, ell)) for ell in range(4)] == [12, 11, 12, 15]
    rng = random.Random(20260202)
    for _ in range(SWEEP):
        ctx, r, ell = _random_wrl_tuple(rng)
        assert u_wrl_closed_form(ctx, r, ell) == u(w_rl(ctx, r, ell)), (ctx, r, ell)
    record_property("detail", f"table (12,11,12,15); closed form = direct u on {SWEEP} random tuples")


def test_c03_maximality_oracle(record_property):
    table = BNContext.from_pushforward(9, 5, -4)
    assert [is_admissible(table, 3, ell) for ell in range(4)] == [True, True, True, False]
    assert dominance_leq(w_rl(table, 3, 3), w_rl(table, 3, 2)) and w_rl(table, 3, 3) != w_rl(table, 3, 2)
    assert maximal_strata_bruteforce(5, -4, 3) == sorted(w_rl(table, 3, ell) for ell in range(3))
    checked = 0
    for k in range(2, 7):
        for dp in range(-8, 9):
            for r in range(0, 6):
                # the genus does not affect the prediction once d' is fixed
                ctx = BNContext.from_pushforward(20, k, dp)
                if r <= ctx.d - ctx.g:
                    continue
                predicted = sorted(w_rl(ctx, r, ell) for ell in ell_range(ctx, r) if is_admissible(ctx, r, ell))
                assert maximal_strata_bruteforce(k, dp, r) == predicted, (k, dp, r)
                checked += 1
    record_property("detail", f"{checked} (k, d', r) cases agree with brute force")


def test_c04_rho_k_consistency(record_property):
    rng = random.Random(4)
    negative = 0
    for _ in range(SWEEP):
        g, k, r = rng.randint(0, 40), rng.randint(2, 8), rng.randint(0, 8)
        d = rng.randint(g + r - 15, g + r - 1)
        ctx = BNContext(g, k, d)
        reports = wrd_decomposition(ctx, r)
        dims = [rep.dim for rep in reports if rep.dim is not None]
        value = rho_k(ctx, r)
        if value >= 0:
            assert dims and value == max(dims), (ctx, r)
        else:
            negative += 1
            assert not dims, (ctx, r)
        assert value == max(g - rep.codim for rep in reports), (ctx, r)
    record_property("detail", f"{SWEEP} tuples, {negative} with every stratum empty")


def test_c05_class_fixtures(record_property):
    res = extreme_summand_class(3, -3, 2, 5)
    assert res.stratum == T([-2, -1, 0]) and (res.a, res.u) == (1, 1)
    res = extreme_summand_class(3, -3, 3, 5)
    assert res.stratum == T([-3, 0, 0]) and (res.a, res.u) == (Fraction(1, 24), 4)
    res = dual_class(T([-2, -2, 1]), 5)
    assert (res.a, res.u) == (Fraction(1, 24), 4)
    assert kkl_check(5)
    assert point_count(Fraction(1, 60), 5, 5) == 2
    record_property("detail", "θ, θ^4/24, θ^4/24 (dual), θ^4/12 total, 2 points")


def test_c06_inverse_factorial(record_property):
    for n in range(31):
        assert extreme_summand_coefficient(n) == Fraction(1, factorial(n)), n
    record_property("detail", "u = 0..30")


def test_c07_genus_independence(record_property):
    rng = random.Random(7)
    shapes = 0
    while shapes < 100:
        k = rng.randint(2, 8)
        total = rng.randint(-30, 30)
        n = rng.randint(1, 15) - total // k
        g = rng.randint(0, 30)
        try:
            a = extreme_summand_class(k, total, n, g)
        except SplitLociError:
            continue
        b = extreme_summand_class(k, total, n, g + 5)
        assert (a.a, a.u, a.stratum) == (b.a, b.u, b.stratum), (k, total, n, g)
        shapes += 1
    record_property("detail", "100 random extreme-summand shapes")


def test_c08_linear_algebra_suite(record_property):
    rows = nullity_case_table(8)
    for row in rows:
        k = row["k"]
        assert row["dim_Wp"] == k * (k + 1) // 2, row
        assert row["dim_WpWq"] == (k if row["case"] == "generic" else k + 1), row
        assert row["diag_rank"] == k, row
        assert row["pass"], row
    vectors = 0
    for k in range(2, 9):
        for model in valid_models(k):
            for vec in diag_kernel(model):
                assert sum(1 for x in vec if x != 0) <= 1
                vectors += 1
    record_property("detail", f"{len(rows)} configurations, {vectors} kernel vectors")


def test_c09_chain_bound(record_property):
    rng = random.Random(9)
    evaluations = 0
    for g in range(1, 51):
        for k in range(1, 11):
            for _ in range(1000):
                eps = [rng.randint(0, 1) for _ in range(g)]
                delta = sum(eps)
                if g >= 2:
                    assert chain_bound_long_form(g, k, eps) == k * k + delta
                assert chain_bound(g, k, eps) == k * k + delta
                evaluations += 1
    record_property("detail", f"{evaluations} (g, k, eps) evaluations")


@lru_cache(maxsize=None)
def _pool(k, degree):
    b = degree // k
    return tuple(types_in_window(k, degree, b - 3, b + 4))


def _random_type(rng):
    return T([rng.randint(-8, 8) for _ in range(rng.randint(1, 6))])


def _random_pool(rng):
    return _pool(rng.randint(2, 5), rng.randint(-6, 6))


def _hilbert_roundtrip(rng):
    for _ in range(SWEEP):
        e = _random_type(rng)
        if type_from_hilbert(hilbert_profile(e), e.rank()) != e:
            return 1, f"fails on {e}"
    return 0, f"{SWEEP} types"


def _partial_order_laws(rng):
    bad = 0
    for _ in range(SWEEP):
        e = _random_type(rng)
        bad += not dominance_leq(e, e)
        pool = _random_pool(rng)
        a, b, c = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        if dominance_leq(a, b) and dominance_leq(b, a) and a != b:
            bad += 1
        if dominance_leq(a, b) and dominance_leq(b, c) and not dominance_leq(a, c):
            bad += 1
    return bad, f"{SWEEP} reflexive, antisymmetric and transitive draws"


def _serre_involution_u(rng):
    bad = 0
    for _ in range(SWEEP):
        e = _random_type(rng)
        bad += serre_dual(serre_dual(e)) != e or u(serre_dual(e)) != u(e)
    return bad, f"{SWEEP} types"


def _serre_order_reversal(rng):
    # as stated: a <= b must give serre_dual(b) <= serre_dual(a)
    pairs = bad = 0
    first = None
    while pairs < SWEEP:
        pool = _random_pool(rng)
        a, b = rng.choice(pool), rng.choice(pool)
        if not dominance_leq(a, b):
            continue
        pairs += 1
        if not dominance_leq(serre_dual(b), serre_dual(a)):
            bad += 1
            first = first or (a, b)
    note = f"{bad}/{pairs} comparable pairs violate it"
    if first:
        a, b = first
        note += f", e.g. {a} <= {b} but dual {serre_dual(b)} is not <= {serre_dual(a)}"
    return bad, note


def _h0_end(rng):
    bad = 0
    for _ in range(SWEEP):
        e = _random_type(rng)
        bad += h0_end(e) - e.rank() ** 2 != u(e)
    return bad, f"{SWEEP} types"


SUBCHECKS = [
    ("Hilbert roundtrip", _hilbert_roundtrip),
    ("dominance partial-order laws", _partial_order_laws),
    ("serre_dual involution + u-invariance", _serre_involution_u),
    ("serre_dual order reversal", _serre_order_reversal),
    ("h0_end - k^2 = u", _h0_end),
]


def test_c10_property_suites(record_property):
    failures = []
    for i, (name, check) in enumerate(SUBCHECKS):
        bad, note = check(random.Random(1000 + i))
        status = "PASS" if bad == 0 else "FAIL"
        record_property(f"sub:{name}", f"{status} ({note})")
        if bad:
            failures.append(f"{name}: {note}")
    assert not failures, "; ".join(failures)
