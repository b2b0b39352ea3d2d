"""Quantum Bruhat graph, weights, Demazure products, greedy decompositions and z_gamma."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from localmodels.errors import NotNonnegative
from localmodels.finite_weyl import WeylGroup, bruhat_leq
from localmodels.qbg import (
    QBGraph, build_qbg, demazure, greedy_decomposition, max_wt_leq_oracle, wt, wt_by_recursion,
    z_gamma,
)
from localmodels.verify import qbg_properties
from oracles import datum, demazure_by_max, qbg_weight_by_bellman

RANK_LE_2 = [("A", 1), ("A", 2), ("B", 2), ("C", 2), ("G", 2)]
RANK_3 = [("A", 3), ("B", 3), ("C", 3)]


def test_a2_graph_matches_the_picture(a2):
    g = build_qbg(a2)
    assert g.count_edges() == (8, 7)
    W = g.W0
    quantum = {(e.source, e.target) for e in g.edges() if e.kind == "quantum"}
    assert (W.longest(), W.identity) in quantum


def test_a1_graph(a1):
    g = QBGraph.of(a1)
    W = g.W0
    edges = {(e.source, e.target, e.kind, e.weight) for e in g.edges()}
    assert edges == {(W.identity, W.s(1), "bruhat", (0,)), (W.s(1), W.identity, "quantum", (1,))}


@pytest.mark.parametrize("family,rank", RANK_LE_2 + RANK_3)
def test_edge_kinds_and_degrees(family, rank):
    g = QBGraph.of(datum(family, rank))
    for x in g.vertices:
        assert g.adjacency[x]
        for e in g.adjacency[x]:
            assert e.target == x * g.W0.reflection(e.root)
            height = sum(g.datum.root_coroot_coords[e.root])
            if e.kind == "bruhat":
                assert e.target.length == x.length + 1 and not any(e.weight)
            else:
                assert e.target.length == x.length + 1 - 2 * height


@pytest.mark.parametrize("family,rank", RANK_LE_2)
def test_wt_matches_relaxation_oracle(family, rank):
    rd = datum(family, rank)
    g = QBGraph.of(rd)
    for x, y in itertools.product(g.vertices, g.vertices):
        assert (g.distance(x, y), g.wt(x, y)) == qbg_weight_by_bellman(g.W0, x, y)


def test_wt_examples(a1, a2):
    W = WeylGroup.of(a2)
    assert wt(W.longest(), W.identity) == (1, 1)
    assert wt(W.identity, W.s(1)) == (0, 0)
    for x in W.elements():
        assert wt(x, x) == (0, 0)
    V = WeylGroup.of(a1)
    assert wt(V.s(1), V.identity) == (1,)


@pytest.mark.parametrize("family,rank", RANK_LE_2)
def test_graph_properties_exhaustive(family, rank):
    qbg_properties(datum(family, rank))


@pytest.mark.parametrize("family,rank", RANK_3)
def test_graph_properties_sampled(family, rank):
    qbg_properties(datum(family, rank), samples=500, seed=7)


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("C", 3)])
def test_recursion_exhaustive_rank_3(family, rank):
    g = QBGraph.of(datum(family, rank))
    for x, v in itertools.product(g.vertices, g.vertices):
        if not v.is_identity:
            assert wt_by_recursion(x, v) == g.wt(x, v)


def test_demazure_examples(a2):
    W = WeylGroup.of(a2)
    s1, s2 = W.s(1), W.s(2)
    assert demazure(W.identity, s1) == s1
    assert demazure(s1, s1) == s1
    assert demazure(s2, W.from_word([1, 2, 1])) == W.from_word([1, 2, 1])


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 2), ("G", 2)])
def test_demazure_is_the_bruhat_max_of_products(family, rank):
    W = WeylGroup.of(datum(family, rank))
    for u, v in itertools.product(W.elements(), W.elements()):
        assert demazure(u, v) == demazure_by_max(u, v)


@given(st.lists(st.integers(1, 4), max_size=10), st.lists(st.integers(1, 4), max_size=10),
       st.lists(st.integers(1, 4), max_size=10))
def test_demazure_associative_rank_4(a, b, c):
    W = WeylGroup.of(datum("F", 4))
    x, y, z = W.from_word(a), W.from_word(b), W.from_word(c)
    assert demazure(demazure(x, y), z) == demazure(x, demazure(y, z))
    assert bruhat_leq(x * y, demazure(x, y))


def test_greedy_examples(a2, c2):
    assert [a2.roots[b].coords for b in greedy_decomposition(a2, (1, 2))] == [(1, 1), (0, 1)]
    assert [c2.roots[b].coords for b in greedy_decomposition(c2, (1, 2))] == [(2, 1), (0, 1)]
    assert [a2.roots[b].coords for b in greedy_decomposition(a2, (1, 0))] == [(1, 0)]
    with pytest.raises(NotNonnegative):
        greedy_decomposition(a2, (1, -1))
    with pytest.raises(NotNonnegative):
        z_gamma(a2, (1,))


def test_z_gamma_examples(a2, c2):
    assert z_gamma(a2, (1, 2)) == WeylGroup.of(a2).from_word([1, 2, 1])
    assert z_gamma(c2, (1, 2)) == WeylGroup.of(c2).from_word([2, 1, 2, 1])
    assert z_gamma(a2, (0, 0)).is_identity


def test_oracle_examples(a1, a2):
    assert max_wt_leq_oracle(a1, (0,)).is_identity
    assert max_wt_leq_oracle(a2, (1, 2)) == WeylGroup.of(a2).from_word([1, 2, 1])
    assert max_wt_leq_oracle(a1, (1,)) == WeylGroup.of(a1).s(1)


@pytest.mark.parametrize("family,rank", [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 2),
                                         ("B", 3), ("C", 3), ("G", 2)])
def test_z_gamma_equals_oracle(family, rank):
    rd = datum(family, rank)
    for gamma in itertools.product(range(4), repeat=rank):
        z = z_gamma(rd, gamma)
        assert z == max_wt_leq_oracle(rd, gamma)
        assert z == z_gamma(rd, gamma, reverse=True)
        assert (z * z).is_identity


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("C", 3), ("G", 2)])
def test_greedy_roots_commute_under_demazure(family, rank):
    rd = datum(family, rank)
    W = WeylGroup.of(rd)
    for gamma in itertools.product(range(3), repeat=rank):
        refl = [W.reflection(b) for b in greedy_decomposition(rd, gamma)]
        for a, b in itertools.product(refl, refl):
            assert demazure(a, b) == demazure(b, a)


@given(st.lists(st.integers(0, 4), min_size=4, max_size=4))
def test_z_gamma_f4_matches_oracle(gamma):
    rd = datum("F", 4)
    assert z_gamma(rd, gamma) == max_wt_leq_oracle(rd, gamma)
