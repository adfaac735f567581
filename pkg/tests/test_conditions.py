import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

import walkparadox as wp
from walkparadox.errors import GraphError, ParameterError

import _oracles as oracle
from _strategies import graphs


def test_walk_growth_figure1():
    g = wp.figure1()
    c1 = wp.check_walk_growth(g, 1)
    assert c1.lhs == 42 and c1.rhs == Fraction(256, 8)
    assert c1.exact["slack"] == 10
    assert c1.holds and c1.guaranteed  # odd k on an unweighted graph

    c2 = wp.check_walk_growth(g, 2)
    assert c2.lhs == 96 and c2.rhs == Fraction(42 * 16, 8)
    assert c2.exact["slack"] == 12
    assert c2.holds and not c2.guaranteed
    assert c2.condition_id == "walk_growth(k=2)"


def test_walk_growth_star_is_tight_at_k2():
    # stars sit exactly on the boundary of the order-2 condition
    for m in range(3, 11):
        rep = wp.check_walk_growth(wp.star_undirected(m + 1), 2)
        assert rep.exact["slack"] == 0
        assert rep.holds


def test_walk_growth_validation():
    with pytest.raises(GraphError, match="mixed"):
        wp.check_walk_growth(wp.three_node(), 1)
    with pytest.raises(ParameterError, match=">= 1"):
        wp.check_walk_growth(wp.figure1(), 0)


def test_walk_growth_fails_on_weighted_violator():
    g = oracle.weighted_growth_violator()
    rep = wp.check_walk_growth(g, 2)
    assert not rep.holds
    assert not rep.guaranteed  # weighted: no exactness, no guarantee
    assert rep.exact is None
    # confirm lhs/rhs against dense arithmetic
    a = oracle.dense_adjacency(g)
    one = a[0] * 0 + 1
    w1 = float(one @ (a @ one))
    w2 = float(one @ (a @ (a @ one)))
    w3 = float(one @ (a @ (a @ (a @ one))))
    assert rep.lhs == pytest.approx(w3, rel=1e-12)
    assert rep.rhs == pytest.approx(w2 * w1 / g.n, rel=1e-12)
    assert rep.slack < -1


@given(graphs(max_n=7, directed=False))
@settings(max_examples=60)
def test_walk_growth_odd_orders_hold(g):
    # guaranteed instances: odd k on unweighted undirected graphs
    for k in (1, 3, 5):
        rep = wp.check_walk_growth(g, k)
        assert rep.guaranteed and rep.holds
        assert rep.exact["slack"] >= 0


def test_lagarias_figure1_values():
    g = wp.figure1()
    rep = wp.check_lagarias(g, 1, 1)
    assert rep.lhs == 8 * 42 and rep.rhs == 16 * 16
    assert rep.exact["slack"] == 8 * 42 - 256
    assert rep.holds and rep.guaranteed
    assert rep.condition_id == "lagarias(r=1,s=1)"


def test_lagarias_star_tight_at_2_1():
    for m in range(3, 11):
        rep = wp.check_lagarias(wp.star_undirected(m + 1), 2, 1)
        assert rep.exact["slack"] == 0
        assert not rep.guaranteed  # odd total order
        assert rep.holds


def test_lagarias_validation():
    with pytest.raises(GraphError, match="undirected"):
        wp.check_lagarias(wp.three_node(), 1, 1)
    with pytest.raises(ParameterError):
        wp.check_lagarias(wp.figure1(), 0, 2)


@given(graphs(max_n=6, directed=False))
@settings(max_examples=80)
def test_lagarias_even_totals_hold(g):
    for r, s in ((1, 1), (2, 2), (1, 3), (2, 4), (3, 3)):
        rep = wp.check_lagarias(g, r, s)
        assert rep.guaranteed and rep.holds
        assert rep.exact["slack"] >= 0


def test_mixed_walk_growth_values():
    g = wp.hub_cycle(5)
    # d_out . d_out = 16 + 1 + 1 + 1 + 4 = 23 on (4,1,1,1,2)
    rep = wp.check_mixed_walk_growth(g, 1)
    assert rep.lhs == 23
    assert rep.exact["rhs"] == Fraction(9 * 9, 5)
    assert rep.holds and rep.guaranteed  # k = 1 is Cauchy-Schwarz


@given(graphs(max_n=8, weighted=True))
@settings(max_examples=60)
def test_mixed_walk_growth_k1_always_holds(g):
    rep = wp.check_mixed_walk_growth(g, 1)
    assert rep.guaranteed
    assert rep.holds


def test_mixed_equals_plain_on_undirected():
    g = wp.figure1()
    for k in (1, 2, 3):
        mixed = wp.check_mixed_walk_growth(g, k)
        plain = wp.check_walk_growth(g, k)
        assert mixed.lhs == plain.lhs
        assert mixed.rhs == plain.rhs


def test_spectral_directed_three_node():
    g = wp.three_node()
    for side in ("left", "right"):
        rep = wp.check_spectral_directed(g, side=side)
        assert not rep.holds
        assert rep.lhs == pytest.approx(1.3247179572447460, abs=1e-9)
        assert rep.rhs == pytest.approx(4 / 3)
        assert rep.details["paradox_gap"] < 0
        assert rep.details["residual"] <= 1e-10


def test_spectral_directed_fails_on_hub_cycle():
    # the hub family pins lambda_1 at the golden ratio (the chain-closure
    # recurrence) while the mean degree (3n-1)/n keeps growing, so the
    # condition fails at every size, matching its negative cross-covariance
    g = wp.hub_cycle(10)
    for side in ("left", "right"):
        rep = wp.check_spectral_directed(g, side=side)
        assert not rep.holds
        assert rep.lhs == pytest.approx((1 + math.sqrt(5)) / 2, abs=1e-8)
        assert rep.rhs == 1.9
        assert rep.details["paradox_gap"] < 0


def test_spectral_directed_holds_on_dense_digraph():
    g = wp.erdos_renyi_directed(12, 0.5, seed=1)
    assert wp.is_strongly_connected(g)
    for side in ("left", "right"):
        rep = wp.check_spectral_directed(g, side=side)
        assert rep.holds
        assert rep.details["paradox_gap"] > 0


def test_spectral_directed_validation():
    with pytest.raises(GraphError, match="strong"):
        wp.check_spectral_directed(wp.star_out(4))
    with pytest.raises(ParameterError, match="side"):
        wp.check_spectral_directed(wp.three_node(), side="top")


def test_first_order_term():
    assert wp.first_order_in_degree_term(wp.hub_cycle(10)) == -7.1
    assert wp.first_order_in_degree_term(wp.figure1()) == 10.0
    assert wp.first_order_in_degree_term(wp.directed_cycle(6)) == 0.0


def test_lagarias_scan_shape():
    reps = wp.lagarias_scan(wp.figure1(), 4)
    ids = [r.condition_id for r in reps]
    assert ids == [
        "lagarias(r=1,s=1)",
        "lagarias(r=1,s=2)",
        "lagarias(r=1,s=3)",
        "lagarias(r=2,s=2)",
    ]
    with pytest.raises(ParameterError):
        wp.lagarias_scan(wp.figure1(), 1)
