"""
The acceptance suite: eleven end-to-end checks, each returning a `CheckResult`.

The checks compare the library against brute-force oracles and the known
tables.  They back both `localmodels verify` and the acceptance tests.

The standard test cases are the pairs (root datum, mu) in `SUITE`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterable

from .admissible import admissible_K, admissible_set, max_elements_by_sweep, max_elements_min_reps
from .errors import DomainError, InternalInvariantError
from .fibers import fibers, max_in_coset, schubert_sweep
from .finite_weyl import WeylElement, WeylGroup, bruhat_leq
from .irreducibility import (
    classify, is_irreducible, spherical_subsets, w_short_type,
)
from .iwahori_weyl import AffineElement, AffineWeylGroup, acute_directions, aff_bruhat_leq
from .qbg import (
    QBGraph, coroot_leq, demazure, max_wt_leq_oracle, wt_by_recursion, z_gamma,
)
from .root_datum import CartanSpec, RootDatum, build_root_datum

__all__ = [
    "CheckResult", "SUITE", "suite", "CHECKS", "run_all", "lower_set_by_subwords",
    "path_weights", "qbg_properties",
]

C2_EPS = CartanSpec("C", 2, ((1, 0), (0, 1)))  # X = Z^2 in the usual e_1, e_2 coordinates


def _g2_quasi_minuscule() -> tuple[int, ...]:
    rd = build_root_datum(CartanSpec("G", 2))
    return rd.coroot(rd.highest_root)


SUITE: list[tuple[str, CartanSpec, tuple[int, ...] | None]] = [
    ("A1, mu=a^v", CartanSpec("A", 1), (1,)),
    ("A1, mu=2a^v", CartanSpec("A", 1), (2,)),
    ("gl3, mu=(1,0,0)", CartanSpec("A", 2, "gl"), (1, 0, 0)),
    ("gl3, mu=(2,1,0)", CartanSpec("A", 2, "gl"), (2, 1, 0)),
    ("C2, mu=(1,0)", C2_EPS, (1, 0)),
    ("C2, mu=(1,1)", C2_EPS, (1, 1)),
    ("G2, mu=theta^v", CartanSpec("G", 2), None),
]


def suite() -> list[tuple[str, RootDatum, tuple[int, ...]]]:
    out = []
    for label, spec, mu in SUITE:
        out.append((label, build_root_datum(spec), mu if mu is not None else _g2_quasi_minuscule()))
    return out


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d}. {self.name}: {self.detail}"


class _Fail(Exception):
    pass


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise _Fail(msg)


# ---------------------------------------------------------------------------
# oracles


def lower_set_by_subwords(y: AffineElement) -> frozenset[AffineElement]:
    """{x : x <= y} as the products of subwords of a reduced word of y."""
    G = y.group
    word, tau = y.reduced_word()
    out = set()
    for mask in itertools.product((0, 1), repeat=len(word)):
        out.add(G.from_word(i for i, keep in zip(word, mask) if keep) * tau)
    return frozenset(out)


def path_weights(g: QBGraph, x: WeylElement, max_len: int) -> list[dict[WeylElement, set]]:
    """layer[L][y] = set of weights of the QBG paths x -> y with exactly L edges."""
    layers = [{x: {(0,) * g.datum.rank}}]
    for _ in range(max_len):
        nxt: dict[WeylElement, set] = {}
        for u, ws in layers[-1].items():
            for e in g.adjacency[u]:
                bucket = nxt.setdefault(e.target, set())
                bucket.update(tuple(a + b for a, b in zip(w, e.weight)) for w in ws)
        layers.append(nxt)
    return layers


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def qbg_properties(rd: RootDatum, samples: int | None = None, seed: int = 0) -> None:
    """Check the shortest-path and Demazure-product facts for one root system.

    Exhaustive when ``samples`` is None; otherwise that many random pairs
    (or triples) are drawn for each property.
    """
    g = QBGraph.of(rd)
    W = g.W0
    V = g.vertices
    e = W.identity
    rng = random.Random(seed)

    def pairs():
        if samples is None:
            return itertools.product(V, V)
        return ((rng.choice(V), rng.choice(V)) for _ in range(samples))

    def triples():
        if samples is None:
            return itertools.product(V, V, V)
        return ((rng.choice(V), rng.choice(V), rng.choice(V)) for _ in range(samples))

    _expect(all(g.adjacency[x] for x in V), "a vertex without out-edges")
    _expect(all(g.distance(x, y) >= 0 for x in V for y in (e, W.longest())), "graph not connected")

    # shortest paths share one weight; every path weight dominates it
    sources = V if samples is None else [rng.choice(V) for _ in range(max(1, samples // len(V)))]
    for x in sources:
        far = max(g.distance(x, y) for y in V)
        layers = path_weights(g, x, far + 2)
        for y in V:
            d = g.distance(x, y)
            _expect(layers[d].get(y) == {g.wt(x, y)}, f"shortest paths {x!r}->{y!r} disagree")
            for L in range(d, far + 3):
                _expect(all(coroot_leq(g.wt(x, y), w) for w in layers[L].get(y, ())),
                        f"a path {x!r}->{y!r} has weight not above wt")

    for x, y in pairs():
        w = g.wt(x, y)
        _expect((not any(w)) == bruhat_leq(x, y), f"wt({x!r},{y!r})=0 disagrees with Bruhat order")
        if not y.is_identity:
            _expect(wt_by_recursion(x, y) == w, f"recursive wt({x!r},{y!r}) differs")

    for x, y, z in triples():
        _expect(coroot_leq(g.wt(x, z), _add(g.wt(x, y), g.wt(y, z))), "triangle inequality fails")
        _expect(demazure(demazure(x, y), z) == demazure(x, demazure(y, z)), "Demazure product not associative")

    for u, v in pairs():
        d = demazure(u, v)
        if (u * v).length == u.length + v.length:
            _expect(d == u * v, "u*v != uv for length-additive u, v")
        for i in range(1, rd.rank + 1):
            if v.has_left_descent(i):
                _expect(demazure(W.s(i), v) == v, "s_i * v != v although s_i v < v")
        if samples is None and W.order() <= 12:
            tops = [a * b for a in V if bruhat_leq(a, u) for b in V if bruhat_leq(b, v)]
            _expect(all(bruhat_leq(t, d) for t in tops) and d in tops, "Demazure product is not the max")

    zs = V if samples is None else [rng.choice(V) for _ in range(samples)]
    for z in zs:
        for b in range(rd.num_positive):
            sb = W.reflection(b)
            _expect(coroot_leq(g.wt(demazure(z, sb), z), rd.root_coroot_coords[b]),
                    f"wt(z * s_b, z) exceeds b^vee for z={z!r}")

    # a shortest path down to e can use quantum edges only
    quantum = {x: [ed.target for ed in g.adjacency[x] if ed.kind == "quantum"] for x in V}
    dist = {e: 0}
    frontier = [e]
    rev: dict = {}
    for x in V:
        for y in quantum[x]:
            rev.setdefault(y, []).append(x)
    while frontier:
        nxt = []
        for y in frontier:
            for x in rev.get(y, ()):
                if x not in dist:
                    dist[x] = dist[y] + 1
                    nxt.append(x)
        frontier = nxt
    _expect(all(dist.get(x) == g.distance(x, e) for x in V), "quantum-only distance to e is longer")

    for gamma in itertools.product(range(3), repeat=rd.rank):
        z = z_gamma(rd, gamma)
        _expect((z * z).is_identity, f"z_gamma not an involution for gamma={gamma}")


# ---------------------------------------------------------------------------
# the checks

EXPECTED_W_SHORT = {"B": lambda n: "A1", "C": lambda n: f"A{n - 1}", "F": lambda n: "A2",
                    "G": lambda n: "A1", "A": lambda n: "trivial", "D": lambda n: "trivial"}
TABLE_TYPES = [("B", 2), ("B", 3), ("C", 2), ("C", 3), ("C", 4), ("F", 4), ("G", 2), ("A", 2), ("A", 3), ("D", 4)]


def expected_classification(rd: RootDatum) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """The known table of non-special K with proper support."""
    fam, n = rd.spec.family, rd.rank
    nodes = set(range(n + 1))

    def drop(i):
        return tuple(sorted(nodes - {i}))

    if fam == "B":
        return [(drop(n), (n,))]
    if fam == "C":
        return sorted((drop(i), tuple(range(1, n))) for i in range(1, n))
    if fam == "F":
        return [(drop(4), (3, 4))]
    if fam == "G":
        (s,) = rd.short_simple_set
        return [(drop(s), (s,))]
    return []


def check_classification() -> str:
    for fam, n in TABLE_TYPES:
        rd = build_root_datum(CartanSpec(fam, n))
        got, want = classify(rd), expected_classification(rd)
        _expect(got == want, f"{fam}{n}: got {got}, expected {want}")
    return f"{len(TABLE_TYPES)} types match"


def check_w_short() -> str:
    for fam, n in TABLE_TYPES:
        rd = build_root_datum(CartanSpec(fam, n))
        got = w_short_type(rd)
        _expect(got == EXPECTED_W_SHORT[fam](n), f"{fam}{n}: W_short of type {got}")
    return "B->A1, C_n->A_(n-1), F4->A2, G2->A1, A/D trivial"


def check_z_gamma() -> str:
    a2 = build_root_datum(CartanSpec("A", 2))
    c2 = build_root_datum(CartanSpec("C", 2))
    W = WeylGroup.of(a2)
    _expect(z_gamma(a2, (1, 2)) == W.from_word([1, 2, 1]), "A2 example")
    _expect(z_gamma(c2, (1, 2)) == WeylGroup.of(c2).from_word([2, 1, 2, 1]), "C2 example")
    n = 0
    for fam, r in [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 2), ("B", 3), ("C", 3), ("G", 2)]:
        rd = build_root_datum(CartanSpec(fam, r))
        for gamma in itertools.product(range(4), repeat=r):
            _expect(z_gamma(rd, gamma) == max_wt_leq_oracle(rd, gamma), f"{fam}{r} gamma={gamma}")
            n += 1
    return f"both worked examples; {n} gammas agree with the oracle"


def check_unique_max() -> str:
    n = 0
    for label, rd, mu in suite():
        adm = admissible_set(rd, mu)
        for K in spherical_subsets(rd):
            for w in adm.elements:
                max_in_coset(rd, mu, w, K, "right")
                max_in_coset(rd, mu, w, K, "left")
                n += 2
    return f"{n} cosets, each with a certified unique maximum"


def check_adm_K() -> str:
    n = 0
    for label, rd, mu in suite():
        G = AffineWeylGroup.of(rd)
        adm = admissible_set(rd, mu)
        for K in spherical_subsets(rd):
            WK = G.parabolic(K)
            both = {u * w * v for u in WK for w in adm.elements for v in WK}
            lhs = {w for w in both if G.is_min_right(w, K)}
            rhs = {w for w in adm.elements if G.is_min_right(w, K)}
            _expect(lhs == rhs, f"{label}, K={sorted(K)}: W~^K slices differ")
            _expect(admissible_K(rd, mu, K).min_reps == frozenset(rhs), f"{label}, K={sorted(K)}")
            _expect(max_elements_min_reps(rd, mu, K) == max_elements_by_sweep(rd, mu, K),
                    f"{label}, K={sorted(K)}: maximal elements differ")
            n += 1
    return f"{n} (mu, K) pairs"


def check_fibers() -> str:
    n = 0
    for label, rd, mu in suite():
        G = AffineWeylGroup.of(rd)
        Ks = spherical_subsets(rd)
        for K1, K2 in itertools.product(Ks, Ks):
            if not K1 <= K2:
                continue
            for f in fibers(rd, mu, K1, K2):
                lower = {u for u in G.parabolic(K2) if aff_bruhat_leq(u, f.x_max)}
                _expect(lower == set(f.saturated), f"{label}, K1={sorted(K1)}, K2={sorted(K2)}, "
                        f"w={f.stratum!r}: not a single Schubert variety")
                n += 1
    a1 = build_root_datum(CartanSpec("A", 1))
    got = [(f.stratum.word_string(), f.dimension) for f in fibers(a1, (1,), [], [1])]
    _expect(got == [("e", 1), ("0", 1), ("10", 0)], f"A1 fibers {got}")
    return f"{n} fibers are single Schubert varieties; A1 dimensions 1,1,0"


def check_schubert_sweep() -> str:
    rd = build_root_datum(CartanSpec("A", 2, "gl"))
    sweep = schubert_sweep(rd, (2, 1, 0))
    _expect(sweep.regular, "(2,1,0) should be regular")
    _expect(sweep.indices == frozenset(WeylGroup.of(rd).elements()), f"only {len(sweep.indices)} indices")
    return "all 6 elements of W0 occur"


def check_qbg() -> str:
    a2 = build_root_datum(CartanSpec("A", 2))
    counts = QBGraph.of(a2).count_edges()
    _expect(counts == (8, 7), f"A2 edge counts {counts}")
    for fam, r in [("A", 1), ("A", 2), ("B", 2), ("G", 2)]:
        qbg_properties(build_root_datum(CartanSpec(fam, r)))
    for fam, r in [("A", 3), ("B", 3), ("C", 3)]:
        qbg_properties(build_root_datum(CartanSpec(fam, r)), samples=500, seed=r)
    return "A2 has 8+7 edges; exhaustive at rank <= 2, 500 samples at rank 3"


def check_adm_sizes() -> str:
    sizes = []
    for spec, mu, want in [(CartanSpec("A", 1), (1,), 5), (CartanSpec("A", 2, "gl"), (1, 0, 0), 7)]:
        rd = build_root_datum(spec)
        G = AffineWeylGroup.of(rd)
        oracle = frozenset().union(*(
            lower_set_by_subwords(G.translation(x.act_coweight(mu))) for x in WeylGroup.of(rd).elements()
        ))
        adm = admissible_set(rd, mu)
        _expect(len(oracle) == want, f"{spec.name}: oracle gives {len(oracle)}")
        _expect(adm.elements == oracle, f"{spec.name}: closure differs from the oracle")
        sizes.append(len(adm))
    return f"|Adm| = {sizes[0]} (A1), {sizes[1]} (gl3)"


def check_haines_he() -> str:
    n = 0
    for label, rd, mu in suite():
        G = AffineWeylGroup.of(rd)
        for w in admissible_set(rd, mu).elements:
            dirs = acute_directions(w)
            _expect(bool(dirs), f"{label}: {w!r} lies in no acute cone")
            for z in dirs:
                _expect(aff_bruhat_leq(w, G.translation(z.act_coweight(mu))), f"{label}: {w!r}, z={z!r}")
                n += 1
    return f"{n} (w, z) pairs"


def check_irreducibility() -> str:
    c2 = build_root_datum(C2_EPS)
    pos = is_irreducible(c2, (1, 1), [0, 2])
    neg = is_irreducible(c2, (1, 0), [0, 2])
    _expect(pos.irreducible, "C2, (1,1), K={0,2} should be irreducible")
    _expect(not neg.irreducible and neg.count == 2, "C2, (1,0), K={0,2} should have 2 components")
    n = 0
    for label, rd, mu in suite():
        if rd.is_central(mu):
            continue
        for K in spherical_subsets(rd):
            is_irreducible(rd, mu, K)
            n += 1
    return f"routes agree on {n} (mu, K) pairs; Siegel case irreducible, (1,0) case 2 components"


CHECKS: list[tuple[str, Callable[[], str]]] = [
    ("classification table", check_classification),
    ("W_short types", check_w_short),
    ("z_gamma examples and oracle", check_z_gamma),
    ("unique maxima in cosets", check_unique_max),
    ("Adm(mu)_K slices and maximal elements", check_adm_K),
    ("fibers are Schubert varieties", check_fibers),
    ("every Schubert variety is a fiber", check_schubert_sweep),
    ("quantum Bruhat graph", check_qbg),
    ("admissible set sizes", check_adm_sizes),
    ("acute cones bound Adm", check_haines_he),
    ("irreducibility routes agree", check_irreducibility),
]


def run_check(number: int) -> CheckResult:
    name, fn = CHECKS[number - 1]
    try:
        detail = fn()
        return CheckResult(number, name, True, detail)
    except (_Fail, DomainError, InternalInvariantError) as exc:
        return CheckResult(number, name, False, f"{type(exc).__name__}: {exc}")


def run_all(numbers: Iterable[int] | None = None) -> list[CheckResult]:
    numbers = range(1, len(CHECKS) + 1) if numbers is None else numbers
    return [run_check(i) for i in numbers]
