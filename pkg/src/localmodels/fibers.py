"""
Fibers of the level-changing maps from level K1 to level K2 (K1 inside K2).

The strata of the K2-level special fiber are indexed by the w in Adm(mu)
minimal in W_K1 w W_K2.  Over the stratum of w the fiber is the union of the
K1-level Schubert cells of the x in W_K2 with w x in Adm(mu).  That set has a
unique maximum, hence so does its right W_K1-saturation; calling the latter
x_max, the fiber is the single Schubert variety of x_max, of dimension
l(x_max) - l(w_K1).

For the hyperspecial level the maximum can be computed without building
Adm(mu) at all: writing w = t^lam y with lam dominant,

    max{x in W0 : x w in Adm(mu)} = y^-1 * z_{mu - lam}     (Demazure product).

>>> from localmodels.root_datum import CartanSpec, build_root_datum
>>> rd = build_root_datum(CartanSpec("A", 1))
>>> [f.dimension for f in fibers(rd, (1,), [], [1])]
[1, 1, 0]
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .admissible import admissible_K, admissible_set
from .errors import (
    InternalInvariantError, NotAdmissible, NotAStratum, NotDominant, NotNested,
    NotUnique, PreconditionViolated,
)
from .finite_weyl import WeylElement, WeylGroup
from .iwahori_weyl import AffineElement, AffineWeylGroup, aff_bruhat_leq, spherical_subset
from .qbg import demazure, z_gamma
from .root_datum import RootDatum

__all__ = [
    "FiberDescriptor", "SchubertSweep", "strata", "max_in_coset", "fiber", "fibers",
    "hyperspecial_max_fast", "hyperspecial_max_slow", "decompose_min_rep",
    "schubert_sweep",
]


@dataclass(frozen=True)
class FiberDescriptor:
    stratum: AffineElement
    member_set: frozenset[AffineElement]  # {x in W_K2 : w x in Adm(mu)}
    saturated: frozenset[AffineElement]  # member_set W_K1, the cells of the fiber
    x_max: AffineElement  # top of `saturated`
    min_rep: AffineElement  # x_max reduced modulo W_K1 on the right
    dimension: int


@dataclass(frozen=True)
class SchubertSweep:
    indices: frozenset[WeylElement]
    regular: bool


def _nested(rd: RootDatum, K1: Iterable[int], K2: Iterable[int]) -> tuple[frozenset[int], frozenset[int]]:
    K1, K2 = spherical_subset(rd, K1), spherical_subset(rd, K2)
    if not K1 <= K2:
        raise NotNested(f"K1={sorted(K1)} is not contained in K2={sorted(K2)}")
    return K1, K2


def strata(rd: RootDatum, mu: Sequence[int], K1: Iterable[int], K2: Iterable[int],
           check: bool = True) -> list[AffineElement]:
    """Adm(mu) intersected with ^{K1}W~^{K2}, sorted by (length, word).

    With ``check`` the same set is recomputed from W_K2 Adm(mu) W_K2.
    """
    K1, K2 = _nested(rd, K1, K2)
    G = AffineWeylGroup.of(rd)
    adm = admissible_set(rd, mu)

    def is_double_min(w):
        return G.is_min_left(w, K1) and G.is_min_right(w, K2)

    out = [w for w in adm.sorted() if is_double_min(w)]
    if check:
        other = {w for w in admissible_K(rd, mu, K2).min_reps if is_double_min(w)}
        if other != set(out):
            raise InternalInvariantError("strata differ between Adm(mu) and Adm(mu)_K2")
    return out


def _unique_max(members: Sequence[AffineElement], what: str) -> AffineElement:
    top = max(members, key=lambda u: u.length)
    if not all(aff_bruhat_leq(u, top) for u in members):
        raise NotUnique(f"{what} has no unique maximum")
    return top


def max_in_coset(rd: RootDatum, mu: Sequence[int], w: AffineElement, K: Iterable[int],
                 side: str = "right") -> AffineElement:
    """The maximum u of {u in W_K : w u in Adm(mu)} (or u w, for side='left'),
    certified against every member."""
    adm = admissible_set(rd, mu)
    if w not in adm:
        raise NotAdmissible(f"{w!r} is not in Adm({adm.mu})")
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    G = AffineWeylGroup.of(rd)
    if side == "right":
        members = [u for u in G.parabolic(K) if w * u in adm]
    else:
        members = [u for u in G.parabolic(K) if u * w in adm]
    return _unique_max(members, f"{side} coset of {w!r} in Adm")


def fiber(rd: RootDatum, mu: Sequence[int], K1: Iterable[int], K2: Iterable[int],
          w: AffineElement) -> FiberDescriptor:
    K1, K2 = _nested(rd, K1, K2)
    G = AffineWeylGroup.of(rd)
    adm = admissible_set(rd, mu)
    if w not in adm or not (G.is_min_left(w, K1) and G.is_min_right(w, K2)):
        raise NotAStratum(f"{w!r} does not index a stratum for K1={sorted(K1)}, K2={sorted(K2)}")
    members = frozenset(u for u in G.parabolic(K2) if w * u in adm)
    top = _unique_max(list(members), "fiber member set")
    WK1 = G.parabolic(K1)
    saturated = frozenset(u * v for u in members for v in WK1)
    x_max = _unique_max(list(saturated), "saturated fiber member set")
    if not aff_bruhat_leq(top, x_max) or x_max not in {top * v for v in WK1}:
        raise InternalInvariantError("top of the fiber is not in the coset of the top member")
    min_rep = G.coset_min(x_max, K1, "right")
    base = G.longest(K1).length
    if min_rep.length + base != x_max.length:
        raise InternalInvariantError("x_max is not the top of its W_K1-coset")
    return FiberDescriptor(w, members, saturated, x_max, min_rep, x_max.length - base)


def fibers(rd: RootDatum, mu: Sequence[int], K1: Iterable[int], K2: Iterable[int]) -> list[FiberDescriptor]:
    return [fiber(rd, mu, K1, K2, w) for w in strata(rd, mu, K1, K2)]


def decompose_min_rep(w: AffineElement) -> tuple[tuple[int, ...], WeylElement]:
    """(lam, y) with w = t^lam y, lam dominant and y in ^{I(lam)}W0.

    PreconditionViolated unless w is minimal in W0 w.
    """
    rd = w.group.datum
    lam, y = w.translation, w.finite
    if not rd.is_dominant(lam) or any(y.has_left_descent(i) for i in rd.stabilizer_indices(lam)):
        raise PreconditionViolated(f"{w!r} is not of the form t^lam y with lam dominant, y in ^I(lam)W0")
    return lam, y


def hyperspecial_max_fast(rd: RootDatum, mu: Sequence[int], w: AffineElement) -> WeylElement:
    """max{x in W0 : x w in Adm(mu)} without enumerating Adm(mu)."""
    mu = rd.check_coweight(mu)
    if not rd.is_dominant(mu):
        raise NotDominant(f"{mu} is not dominant")
    lam, y = decompose_min_rep(w)
    gamma = rd.coroot_coords(tuple(a - b for a, b in zip(mu, lam)))
    if gamma is None or any(c < 0 for c in gamma):
        raise PreconditionViolated(f"lam={lam} is not below mu={mu}")
    return demazure(y.inverse(), z_gamma(rd, gamma))


def hyperspecial_max_slow(rd: RootDatum, mu: Sequence[int], w: AffineElement) -> WeylElement:
    """Brute force for `hyperspecial_max_fast`, through the inversion symmetry:
    x w in Adm(mu) iff w^-1 x^-1 in Adm(-w0 mu)."""
    mu = rd.check_coweight(mu)
    W = WeylGroup.of(rd)
    dual = tuple(-c for c in W.longest().act_coweight(mu))
    u = max_in_coset(rd, dual, w.inverse(), range(1, rd.rank + 1))
    return u.finite.inverse()


def schubert_sweep(rd: RootDatum, mu: Sequence[int]) -> SchubertSweep:
    """The fiber indices (min_rep) of the map from Iwahori to hyperspecial level."""
    mu = rd.check_coweight(mu)
    if not rd.is_dominant(mu):
        raise NotDominant(f"{mu} is not dominant")
    S0 = range(1, rd.rank + 1)
    idx = frozenset(f.min_rep.finite for f in fibers(rd, mu, [], S0))
    return SchubertSweep(idx, not rd.stabilizer_indices(mu))
