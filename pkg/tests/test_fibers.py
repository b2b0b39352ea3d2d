"""Strata and fibers of level-changing maps, and the hyperspecial shortcut."""

import itertools

import pytest

from localmodels.admissible import admissible_set
from localmodels.errors import NotAdmissible, NotAStratum, NotNested, PreconditionViolated
from localmodels.fibers import (
    fiber, fibers, hyperspecial_max_fast, hyperspecial_max_slow, max_in_coset, schubert_sweep,
    strata,
)
from localmodels.irreducibility import spherical_subsets
from localmodels.iwahori_weyl import AffineWeylGroup, aff_bruhat_leq, acute_directions
from localmodels.verify import suite
from oracles import datum

SUITE = suite()
IDS = [label for label, _, _ in SUITE]


def word(w):
    return w.word_string()


def nested_pairs(rd):
    Ks = spherical_subsets(rd)
    return [(K1, K2) for K1, K2 in itertools.product(Ks, Ks) if K1 <= K2]


def test_a1_strata(a1):
    assert [word(w) for w in strata(a1, (1,), [], [1])] == ["e", "0", "10"]
    assert len(strata(a1, (1,), [], [])) == 5
    with pytest.raises(NotNested):
        strata(a1, (1,), [1], [])


def test_gl3_strata_count(gl3):
    G = AffineWeylGroup.of(gl3)
    adm = admissible_set(gl3, (1, 0, 0))
    cosets = {frozenset(w * u for u in G.parabolic([1, 2])) for w in adm.elements}
    assert len(strata(gl3, (1, 0, 0), [], [1, 2])) == len(cosets) == 3


def test_max_in_coset_examples(a1):
    G = AffineWeylGroup.of(a1)
    assert word(max_in_coset(a1, (1,), G.from_word([0]), [1])) == "1"
    assert max_in_coset(a1, (1,), G.from_word([1, 0]), [1]).is_identity
    assert word(max_in_coset(a1, (1,), G.identity, [1])) == "1"
    with pytest.raises(NotAdmissible):
        max_in_coset(a1, (1,), G.from_word([1, 0, 1]), [1])
    with pytest.raises(ValueError):
        max_in_coset(a1, (1,), G.identity, [1], side="middle")


def test_a1_fibers(a1):
    fs = fibers(a1, (1,), [], [1])
    assert [(word(f.stratum), word(f.x_max), f.dimension) for f in fs] == [
        ("e", "1", 1), ("0", "1", 1), ("10", "e", 0)]
    G = AffineWeylGroup.of(a1)
    with pytest.raises(NotAStratum):
        fiber(a1, (1,), [], [1], G.from_word([0, 1]))


@pytest.mark.parametrize("label,rd,mu", SUITE, ids=IDS)
def test_every_coset_has_a_unique_maximum(label, rd, mu):
    adm = admissible_set(rd, mu)
    G = AffineWeylGroup.of(rd)
    for K in spherical_subsets(rd):
        for w in adm.elements:
            for side in ("left", "right"):
                top = max_in_coset(rd, mu, w, K, side)
                members = [u for u in G.parabolic(K) if (w * u if side == "right" else u * w) in adm]
                assert all(aff_bruhat_leq(u, top) for u in members)


@pytest.mark.parametrize("label,rd,mu", SUITE, ids=IDS)
def test_fibers_are_single_schubert_varieties(label, rd, mu):
    G = AffineWeylGroup.of(rd)
    adm = admissible_set(rd, mu)
    for K1, K2 in nested_pairs(rd):
        WK1 = G.parabolic(K1)
        for f in fibers(rd, mu, K1, K2):
            assert f.member_set == {u for u in G.parabolic(K2) if f.stratum * u in adm}
            assert f.saturated == {u * v for u in f.member_set for v in WK1}
            assert f.saturated == {u for u in G.parabolic(K2) if aff_bruhat_leq(u, f.x_max)}
            assert {u * v for u in f.saturated for v in WK1} == f.saturated
            assert all(v.is_identity or (f.x_max * v).length < f.x_max.length for v in WK1)
            assert f.min_rep * G.longest(K1) == f.x_max
            assert f.dimension == f.min_rep.length
            if K1 == K2:
                assert f.dimension == 0 and f.x_max in WK1


@pytest.mark.parametrize("label,rd,mu", SUITE, ids=IDS)
def test_admissible_elements_lie_below_acute_translations(label, rd, mu):
    G = AffineWeylGroup.of(rd)
    for w in admissible_set(rd, mu).elements:
        for z in acute_directions(w):
            assert aff_bruhat_leq(w, G.translation(z.act_coweight(mu)))


@pytest.mark.parametrize("label,rd,mu", SUITE, ids=IDS)
def test_hyperspecial_fast_route(label, rd, mu):
    G = AffineWeylGroup.of(rd)
    S0 = range(1, rd.rank + 1)
    adm = admissible_set(rd, mu)
    checked = 0
    for w in adm.elements:
        if not G.is_min_left(w, S0):
            continue
        fast = hyperspecial_max_fast(rd, mu, w)
        assert fast == hyperspecial_max_slow(rd, mu, w)
        members = [x for x in G.W0.elements() if G.from_finite(x) * w in adm]
        assert fast in members and all(x.length <= fast.length for x in members)
        checked += 1
    assert checked


def test_hyperspecial_examples(a1):
    G = AffineWeylGroup.of(a1)
    assert hyperspecial_max_fast(a1, (1,), G.translation((1,))).is_identity
    assert hyperspecial_max_fast(a1, (1,), G.from_word([0])).word == (1,)
    with pytest.raises(PreconditionViolated):
        hyperspecial_max_fast(a1, (1,), G.translation((-1,)))
    with pytest.raises(PreconditionViolated):
        hyperspecial_max_fast(a1, (1,), G.translation((2,)))


def test_hyperspecial_top_stratum_is_y_inverse(c2eps):
    G = AffineWeylGroup.of(c2eps)
    mu = (1, 1)
    I = c2eps.stabilizer_indices(mu)
    for y in G.W0.elements():
        if any(y.has_left_descent(i) for i in I):
            continue
        w = G.translation(mu) * G.from_finite(y)
        assert hyperspecial_max_fast(c2eps, mu, w) == y.inverse()


@pytest.mark.parametrize("rd,mu", [
    (datum("A", 1), (1,)), (datum("A", 1), (2,)), (datum("A", 2, "gl"), (2, 1, 0)),
    (datum("C", 2, "coweight"), (1, 1)), (datum("G", 2, "coweight"), (1, 1)),
])
def test_schubert_sweep_regular(rd, mu):
    sweep = schubert_sweep(rd, mu)
    assert sweep.regular
    assert sweep.indices == set(AffineWeylGroup.of(rd).W0.elements())


def test_schubert_sweep_nonregular(gl3):
    sweep = schubert_sweep(gl3, (1, 0, 0))
    assert not sweep.regular
    assert len(sweep.indices) < 6
