"""Root systems, lattices, pairings and the dominance order."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from localmodels.errors import DatumMismatch, InvalidSpec, NonIntegralLattice
from localmodels.root_datum import CartanSpec, build_root_datum
from oracles import C2_EPS, closed_root_set, datum

TYPES = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4), ("C", 2), ("C", 3),
         ("C", 4), ("D", 4), ("D", 5), ("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8)]


def expected_positive_count(family, n):
    return {"A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1),
            "G": 6, "F": 24}.get(family) or {6: 36, 7: 63, 8: 120}[n]


@pytest.mark.parametrize("family,rank", TYPES)
def test_positive_root_count_and_closure(family, rank):
    rd = datum(family, rank)
    assert rd.num_positive == expected_positive_count(family, rank)
    closed = closed_root_set(rd.cartan_matrix)
    assert closed == {r.coords for r in rd.roots}
    for r in rd.roots:
        assert all(c >= 0 for c in r.coords) or all(c <= 0 for c in r.coords)


@pytest.mark.parametrize("family,rank", TYPES)
def test_highest_root_is_unique_maximum(family, rank):
    rd = datum(family, rank)
    theta = rd.highest_root
    for r in rd.positive_roots:
        assert rd.root_leq(r.coords, theta)
    assert sum(1 for r in rd.positive_roots if all(
        not rd.root_leq(r.coords, s.coords) or s.coords == r.coords for s in rd.positive_roots)) == 1


def test_build_examples():
    a2 = datum("A", 2)
    assert a2.num_positive == 3 and a2.highest_root == (1, 1)
    a1 = datum("A", 1)
    assert a1.num_positive == 1 and a1.highest_root == (1,)
    assert datum("C", 2).short_simple_set == {1}
    assert datum("C", 2).highest_root == (2, 1)
    assert datum("G", 2).highest_root == (3, 2)
    assert datum("F", 4).highest_root == (2, 3, 4, 2)


@pytest.mark.parametrize("family,rank,short", [
    ("A", 3, set()), ("B", 3, {3}), ("C", 3, {1, 2}), ("D", 4, set()),
    ("G", 2, {1}), ("F", 4, {3, 4}), ("E", 6, set()),
])
def test_short_simple_set(family, rank, short):
    rd = datum(family, rank)
    assert rd.short_simple_set == short
    if short:
        lengths = [rd.root_sqlen[i] for i in range(rank)]
        assert {i + 1 for i in range(rank) if lengths[i] == min(lengths)} == short


def test_pair_examples(a2):
    a1 = datum("A", 1)
    assert a1.pair(a1.simple_coroot(1), a1.positive_roots[0]) == 2
    assert a2.pair(a2.simple_coroot(1), (0, 1)) == -1
    assert a2.pair((0, 0), (1, 1)) == 0
    with pytest.raises(DatumMismatch):
        a2.pair((1,), (1, 0))
    with pytest.raises(DatumMismatch):
        a2.pair((1, 0), (1, 2, 0))


@pytest.mark.parametrize("family,rank", TYPES[:12])
def test_cartan_diagonal_and_two_rho(family, rank):
    rd = datum(family, rank)
    for i in range(1, rank + 1):
        cor = rd.simple_coroot(i)
        assert rd.pair(cor, rd.positive_roots[i - 1]) == 2
        assert rd.pair(cor, rd.two_rho) == 2


def _reflect(rd, b, g):
    k = rd.coroot_pair(b, rd.root_index[g])
    return tuple(c - k * x for c, x in zip(g, rd.roots[b].coords))


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("B", 3), ("C", 3), ("G", 2), ("F", 4)])
def test_reflections_permute_roots(family, rank):
    rd = datum(family, rank)
    pos = {r.coords for r in rd.positive_roots}
    every = {r.coords for r in rd.roots}
    for b in range(rd.num_positive):
        assert {_reflect(rd, b, g) for g in every} == every
    # simple reflections permute the positive roots other than their own
    for i in range(rank):
        beta = rd.roots[i].coords
        assert {_reflect(rd, i, g) for g in pos - {beta}} == pos - {beta}


def test_dominance_examples(a2):
    assert a2.dominance_leq((0, 0), (1, 1))
    assert not a2.dominance_leq((1, 0), (0, 1))
    c2 = datum("C", 2)
    theta_v = c2.coroot(c2.highest_root)
    assert theta_v == (1, 1)
    assert c2.dominance_leq(theta_v, (1, 2))


@given(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), min_size=1, max_size=6))
def test_dominance_is_a_partial_order(points):
    rd = datum("B", 2)
    leq = rd.dominance_leq
    for x in points:
        assert leq(x, x)
    for x, y in itertools.product(points, points):
        if leq(x, y) and leq(y, x):
            assert x == y
    for x, y, z in itertools.product(points, points, points):
        if leq(x, y) and leq(y, z):
            assert leq(x, z)


def test_lattices():
    gl = datum("A", 2, "gl")
    assert gl.lattice_dim == 3
    assert gl.omega_class((1, 0, 0)) == gl.omega_class((0, 1, 0))
    assert gl.omega_class((1, 0, 0)) != gl.omega_class((0, 0, 0))
    assert gl.is_central((1, 1, 1))
    cw = datum("A", 2, "coweight")
    assert cw.coroot_matrix == ((2, -1), (-1, 2))
    assert cw.coroot_coords((1, 0)) is None
    c2 = build_root_datum(C2_EPS)
    assert c2.simple_pairings((1, 1)) == (0, 2)
    assert c2.coroot(c2.highest_root) == (1, 0)


def test_invalid_specs():
    with pytest.raises(InvalidSpec):
        build_root_datum(CartanSpec("D", 3))
    with pytest.raises(InvalidSpec):
        build_root_datum(CartanSpec("E", 9))
    with pytest.raises(InvalidSpec):
        build_root_datum(CartanSpec("B", 2, "gl"))
    with pytest.raises(InvalidSpec):
        build_root_datum(CartanSpec("Q", 2))
    with pytest.raises(NonIntegralLattice):
        # e_1 pairs with the short root (1/2)(1, -1, -1, -1) to 1/2
        build_root_datum(CartanSpec("F", 4, ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))))
    with pytest.raises(InvalidSpec):
        # 2(e_1 - e_2) spans a lattice missing the coroot e_1 - e_2
        build_root_datum(CartanSpec("A", 1, ((2, -2),)))
