"""
mu-admissible sets.

Adm(mu) is the set of w in W~ with w <= t^{x(mu)} for some x in W0.  It is
built as a downward closure: starting from the translations t^{x(mu)}, add
every cocover w s_a, where a runs over the affine inversions of w and the
length drops by exactly one.

>>> from localmodels.root_datum import CartanSpec, build_root_datum
>>> rd = build_root_datum(CartanSpec("A", 1))
>>> sorted(w.word_string() for w in admissible_set(rd, (1,)).elements)
['0', '01', '1', '10', 'e']
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InternalInvariantError, NotDominant
from .finite_weyl import WeylGroup
from .iwahori_weyl import (
    AffineElement, AffineWeylGroup, aff_bruhat_leq, is_translation_min_rep,
    spherical_subset,
)
from .qbg import coroot_leq, wt
from .root_datum import RootDatum

__all__ = [
    "AdmissibleSet", "AdmissibleK", "admissible_set", "admissible_K",
    "max_elements_min_reps", "max_elements_by_sweep", "stratum",
    "dominant_coweights_below", "cocovers", "orbit",
]


@dataclass(frozen=True)
class AdmissibleSet:
    mu: tuple[int, ...]
    elements: frozenset[AffineElement]
    maximal_translations: frozenset[AffineElement]

    def __len__(self):
        return len(self.elements)

    def __contains__(self, w):
        return w in self.elements

    def __iter__(self):
        return iter(self.sorted())

    def sorted(self) -> list[AffineElement]:
        return sorted(self.elements, key=lambda w: (w.length, w.word_string()))


@dataclass(frozen=True)
class AdmissibleK:
    """Adm(mu)_K = W_K Adm(mu) W_K together with its minimal-representative slices."""
    mu: tuple[int, ...]
    K: frozenset[int]
    elements: frozenset[AffineElement]
    min_reps: frozenset[AffineElement]  # Adm(mu)_K intersected with W~^K
    double_min_reps: frozenset[AffineElement]  # Adm(mu)_K intersected with ^K W~^K


def _dominant(rd: RootDatum, mu: Sequence[int]) -> tuple[int, ...]:
    mu = rd.check_coweight(mu)
    if not rd.is_dominant(mu):
        raise NotDominant(f"{mu} is not dominant: pairings {rd.simple_pairings(mu)}")
    return mu


def orbit(rd: RootDatum, mu: Sequence[int]) -> list[tuple[int, ...]]:
    """The W0-orbit of mu, in a deterministic order."""
    mu = rd.check_coweight(mu)
    return sorted({x.act_coweight(mu) for x in WeylGroup.of(rd).elements()})


def cocovers(w: AffineElement) -> list[AffineElement]:
    """Elements w s_a of length l(w) - 1, a an affine inversion of w."""
    G = w.group
    out = []
    for ar in w.inversions():
        u = w * G.affine_reflection(ar)
        if u.length == w.length - 1:
            out.append(u)
    return out


@lru_cache(maxsize=None)
def _admissible(rd: RootDatum, mu: tuple[int, ...]) -> AdmissibleSet:
    G = AffineWeylGroup.of(rd)
    tops = frozenset(G.translation(lam) for lam in orbit(rd, mu))
    seen = set(tops)
    frontier = list(tops)
    while frontier:
        nxt = []
        for w in frontier:
            for u in cocovers(w):
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return AdmissibleSet(mu, frozenset(seen), tops)


def admissible_set(rd: RootDatum, mu: Sequence[int]) -> AdmissibleSet:
    return _admissible(rd, _dominant(rd, mu))


def admissible_K(rd: RootDatum, mu: Sequence[int], K: Iterable[int]) -> AdmissibleK:
    """W_K Adm(mu) W_K.  Checks that its W~^K slice equals that of Adm(mu)."""
    K = spherical_subset(rd, K)
    adm = admissible_set(rd, mu)
    G = AffineWeylGroup.of(rd)
    WK = G.parabolic(K)
    left = {u * w for u in WK for w in adm.elements}
    full = frozenset(w * u for w in left for u in WK)
    mins = frozenset(w for w in full if G.is_min_right(w, K))
    if mins != frozenset(w for w in adm.elements if G.is_min_right(w, K)):
        raise InternalInvariantError(f"W~^K slices of Adm(mu)_K and Adm(mu) differ for K={sorted(K)}")
    double = frozenset(w for w in mins if G.is_min_left(w, K))
    return AdmissibleK(adm.mu, K, full, mins, double)


def max_elements_min_reps(rd: RootDatum, mu: Sequence[int], K: Iterable[int]) -> frozenset[AffineElement]:
    """Maximal elements of Adm(mu) in W~^K: the t^{x(mu)} with <x(mu), alpha_i> <= 0 on K."""
    mu = _dominant(rd, mu)
    K = spherical_subset(rd, K)
    G = AffineWeylGroup.of(rd)
    return frozenset(G.translation(lam) for lam in orbit(rd, mu) if is_translation_min_rep(rd, lam, K))


def max_elements_by_sweep(rd: RootDatum, mu: Sequence[int], K: Iterable[int]) -> frozenset[AffineElement]:
    """Same set as `max_elements_min_reps`, by a pairwise Bruhat sweep of Adm(mu) in W~^K."""
    K = spherical_subset(rd, K)
    G = AffineWeylGroup.of(rd)
    pool = [w for w in admissible_set(rd, mu).elements if G.is_min_right(w, K)]
    return frozenset(
        w for w in pool
        if not any(u != w and u.length > w.length and aff_bruhat_leq(w, u) for u in pool)
    )


def dominant_coweights_below(rd: RootDatum, mu: Sequence[int]) -> list[tuple[int, ...]]:
    """Dominant lam with lam <= mu, found by subtracting positive coroots."""
    mu = _dominant(rd, mu)
    seen = {mu}
    stack = [mu]
    while stack:
        lam = stack.pop()
        for cor in rd.coroot_x[: rd.num_positive]:
            nu = tuple(a - b for a, b in zip(lam, cor))
            if nu not in seen and rd.is_dominant(nu):
                seen.add(nu)
                stack.append(nu)
    return sorted(seen, reverse=True)


def stratum(rd: RootDatum, mu: Sequence[int], lam: Sequence[int]) -> frozenset[AffineElement]:
    """Adm(mu) intersected with W0 t^lam W0, as
    {x t^lam y : y in ^{I(lam)}W0, wt(x, y^-1) <= mu - lam}."""
    mu = _dominant(rd, mu)
    lam = _dominant(rd, lam)
    gamma = rd.coroot_coords(tuple(a - b for a, b in zip(mu, lam)))
    if gamma is None or any(c < 0 for c in gamma):
        return frozenset()
    W = WeylGroup.of(rd)
    G = AffineWeylGroup.of(rd)
    I = rd.stabilizer_indices(lam)
    t = G.translation(lam)
    out = set()
    for y in W.elements():
        if any(y.has_left_descent(i) for i in I):
            continue
        yinv = y.inverse()
        ty = t * G.from_finite(y)
        for x in W.elements():
            if coroot_leq(wt(x, yinv), gamma):
                out.add(G.from_finite(x) * ty)
    return frozenset(out)
