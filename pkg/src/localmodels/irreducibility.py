"""
Irreducible components of the union of K-level Schubert cells indexed by Adm(mu).

The components correspond to the double cosets W_pr(K) \\ W0 / W_I(mu), where
W_pr(K) is the image of W_K in W0 and I(mu) = {i : <mu, alpha_i> = 0}; the
class of x goes to the K-level cell of t^{x(mu)}.  Irreducibility is decided
two ways: by counting double cosets, and by the short-root criterion (K
special, or W0 = W_pr(K) W_short with W_short fixing mu).

>>> from localmodels.root_datum import CartanSpec, build_root_datum
>>> c2 = build_root_datum(CartanSpec("C", 2, ((1, 0), (0, 1))))
>>> component_reps(c2, (1, 0), [0, 2]).count
2
>>> is_irreducible(c2, (1, 1), [0, 2]).irreducible
True
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InternalInvariantError, NotDominant, RouteDisagreement
from .finite_weyl import WeylElement, WeylGroup, double_coset_reps
from .iwahori_weyl import (
    AffineElement, AffineWeylGroup, pr_subgroup, spherical_subset,
    unique_conjugate_in_min_reps,
)
from .root_datum import RootDatum

__all__ = [
    "Component", "ComponentReport", "IrreducibilityResult", "component_reps",
    "is_irreducible", "is_special", "pr_group", "supp_min_reps", "min_reps_pr",
    "classify", "short_subgroup", "coxeter_type", "w_short_type",
    "double_coset_max", "factors_as_product", "spherical_subsets",
]


@dataclass(frozen=True)
class Component:
    rep: WeylElement
    translation: AffineElement  # t^{x(mu)} conjugated into W~^K
    dimension: int


@dataclass(frozen=True)
class ComponentReport:
    mu: tuple[int, ...]
    K: tuple[int, ...]
    components: tuple[Component, ...]
    central: bool = False

    @property
    def count(self) -> int:
        return len(self.components)

    @property
    def irreducible(self) -> bool:
        return self.count == 1


@dataclass(frozen=True)
class IrreducibilityResult:
    irreducible: bool
    by_count: bool
    by_short_roots: bool | None  # None when mu is central
    count: int
    notes: tuple[str, ...] = field(default=())


def spherical_subsets(rd: RootDatum) -> list[frozenset[int]]:
    """All proper subsets of the affine nodes {0, ..., rank}."""
    nodes = range(rd.rank + 1)
    return [frozenset(c) for k in range(rd.rank + 1) for c in itertools.combinations(nodes, k)]


def pr_group(rd: RootDatum, K: Iterable[int]) -> list[WeylElement]:
    """The elements of W_pr(K)."""
    return WeylGroup.of(rd).generate(pr_subgroup(rd, K))


def is_special(rd: RootDatum, K: Iterable[int]) -> bool:
    return len(pr_group(rd, K)) == WeylGroup.of(rd).order()


def double_coset_max(w: AffineElement, K: Iterable[int]) -> AffineElement:
    """The longest element of W_K w W_K, by climbing along ascents."""
    G = w.group
    K = sorted(K)
    cur = w
    grew = True
    while grew:
        grew = False
        for i in K:
            if not cur.has_right_descent(i):
                cur = cur * G.gens[i]
                grew = True
            if not cur.has_left_descent(i):
                cur = G.gens[i] * cur
                grew = True
    return cur


def component_reps(rd: RootDatum, mu: Sequence[int], K: Iterable[int]) -> ComponentReport:
    mu = rd.check_coweight(mu)
    if not rd.is_dominant(mu):
        raise NotDominant(f"{mu} is not dominant")
    K = spherical_subset(rd, K)
    W = WeylGroup.of(rd)
    G = AffineWeylGroup.of(rd)
    reps = double_coset_reps(W, pr_subgroup(rd, K), rd.stabilizer_indices(mu))
    base = G.longest(K).length
    comps = []
    for x in reps:
        t = unique_conjugate_in_min_reps(rd, x.act_coweight(mu), K)
        comps.append(Component(x, t, double_coset_max(t, K).length - base))
    return ComponentReport(mu, tuple(sorted(K)), tuple(comps), rd.is_central(mu))


def short_subgroup(rd: RootDatum) -> list[WeylElement]:
    """W_short: generated by the simple reflections at short simple roots."""
    W = WeylGroup.of(rd)
    return W.parabolic(rd.short_simple_set)


def factors_as_product(rd: RootDatum, H: Sequence[WeylElement], J: Iterable[int]) -> bool:
    """Is W0 = H W_J?  Decided by multiplying out."""
    W = WeylGroup.of(rd)
    WJ = W.parabolic(J)
    return len({h * u for h in H for u in WJ}) == W.order()


def is_irreducible(rd: RootDatum, mu: Sequence[int], K: Iterable[int]) -> IrreducibilityResult:
    """Both routes; RouteDisagreement if they differ.  For central mu only the
    double-coset count is used."""
    K = spherical_subset(rd, K)
    report = component_reps(rd, mu, K)
    by_count = report.count == 1
    if report.central:
        return IrreducibilityResult(by_count, by_count, None, report.count, ("central mu: count only",))
    H = pr_group(rd, K)
    W = WeylGroup.of(rd)
    if len(H) == W.order():
        by_short = True
    else:
        fixes = all(rd.reflect_coweight(i, report.mu) == report.mu for i in rd.short_simple_set)
        by_short = fixes and factors_as_product(rd, H, rd.short_simple_set)
    if by_short != by_count:
        raise RouteDisagreement(f"mu={report.mu}, K={sorted(K)}: count says {by_count}, short roots say {by_short}")
    return IrreducibilityResult(by_count, by_count, by_short, report.count)


def min_reps_pr(rd: RootDatum, K: Iterable[int]) -> list[WeylElement]:
    """The minimal-length representatives of the cosets W_pr(K) w."""
    H = pr_group(rd, K)
    W = WeylGroup.of(rd)
    seen: set[WeylElement] = set()
    reps = []
    for w in W.elements():
        if w in seen:
            continue
        coset = [h * w for h in H]
        seen.update(coset)
        m = min(u.length for u in coset)
        lows = [u for u in coset if u.length == m]
        if len(lows) != 1:
            raise InternalInvariantError(f"coset of {w!r} has {len(lows)} minimal elements")
        reps.append(lows[0])
    return reps


def supp_min_reps(rd: RootDatum, K: Iterable[int]) -> frozenset[int]:
    """Union of the supports of the minimal representatives of W_pr(K) \\ W0."""
    out: set[int] = set()
    for u in min_reps_pr(rd, K):
        out.update(u.word)
    return frozenset(out)


def classify(rd: RootDatum) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(K, supp) for every non-special spherical K whose support is a proper subset of S0."""
    S0 = frozenset(range(1, rd.rank + 1))
    out = []
    for K in spherical_subsets(rd):
        if is_special(rd, K):
            continue
        supp = supp_min_reps(rd, K)
        if supp != S0:
            out.append((tuple(sorted(K)), tuple(sorted(supp))))
    return sorted(out)


def coxeter_type(gens: Sequence[WeylElement]) -> str:
    """Cartan-Killing type of the Coxeter system (W, gens), e.g. 'A2' or 'A1xA1'.

    Read off the Coxeter graph (orders of pairwise products); an empty
    generating set gives 'trivial'.
    """
    n = len(gens)
    if n == 0:
        return "trivial"

    def order(w):
        k, p = 1, w
        while not p.is_identity:
            p, k = p * w, k + 1
        return k

    m = {(i, j): order(gens[i] * gens[j]) for i in range(n) for j in range(n) if i < j}
    adj = {i: [j for j in range(n) if j != i and m[min(i, j), max(i, j)] > 2] for i in range(n)}
    seen: set[int] = set()
    parts = []
    for start in range(n):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        parts.append(_component_type(comp, adj, m))
    return "x".join(sorted(parts))


def _component_type(comp: list[int], adj: dict, m: dict) -> str:
    k = len(comp)
    labels = sorted(m[min(i, j), max(i, j)] for i in comp for j in adj[i] if i < j)
    degrees = sorted(len(adj[i]) for i in comp)
    if k == 1:
        return "A1"
    if 6 in labels:
        return "G2"
    if 4 in labels:
        if k == 4 and labels.count(4) == 1:
            ends = [i for i in comp if len(adj[i]) == 1]
            if not any(m[min(e, adj[e][0]), max(e, adj[e][0])] == 4 for e in ends):
                return "F4"
        return f"B{k}"
    if degrees[-1] <= 2:
        return f"A{k}"
    if k >= 6:
        branch = next(i for i in comp if len(adj[i]) == 3)
        arms = sorted(_arm_length(branch, a, adj) for a in adj[branch])
        if arms[0] == 1 and arms[1] == 2:
            return f"E{k}"
    return f"D{k}"


def _arm_length(root: int, start: int, adj: dict) -> int:
    prev, cur, n = root, start, 1
    while True:
        nxt = [u for u in adj[cur] if u != prev]
        if not nxt:
            return n
        prev, cur, n = cur, nxt[0], n + 1


def w_short_type(rd: RootDatum) -> str:
    W = WeylGroup.of(rd)
    return coxeter_type([W.s(i) for i in sorted(rd.short_simple_set)])
