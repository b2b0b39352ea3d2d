"""
The quantum Bruhat graph of W0 and what is built on it.

Vertices are the elements of W0.  For x in W0 and a positive root b there is
an edge x -> x s_b when

* l(x s_b) = l(x) + 1                      (Bruhat edge, weight 0), or
* l(x s_b) = l(x) + 1 - <b^vee, 2 rho>     (quantum edge, weight b^vee).

Weights, and the gamma arguments of `z_gamma` and friends, are expressed in
the basis of simple coroots, so the dominance order on them is componentwise.
Shortest paths are counted in hops; all shortest paths between two vertices
carry the same weight, so one BFS tree per source determines `wt`.

>>> from localmodels.root_datum import CartanSpec, build_root_datum
>>> rd = build_root_datum(CartanSpec("A", 2))
>>> g = QBGraph.of(rd)
>>> g.count_edges()
(8, 7)
>>> g.wt(g.W0.longest(), g.W0.identity)
(1, 1)
>>> z_gamma(rd, (1, 2)).word
(1, 2, 1)
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import NotNonnegative, NotUnique
from .finite_weyl import WeylElement, WeylGroup, bruhat_leq
from .root_datum import RootDatum

__all__ = [
    "QBGEdge", "QBGraph", "build_qbg", "wt", "wt_by_recursion", "demazure",
    "greedy_decomposition", "z_gamma", "max_wt_leq_oracle", "coroot_leq",
]

BRUHAT = "bruhat"
QUANTUM = "quantum"


@dataclass(frozen=True)
class QBGEdge:
    source: WeylElement
    target: WeylElement
    kind: str
    root: int  # index of the positive root b
    weight: tuple[int, ...]  # simple-coroot coordinates; zero for Bruhat edges


def coroot_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Dominance order on simple-coroot coordinate vectors."""
    return all(x <= y for x, y in zip(a, b))


def _add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


class QBGraph:
    """The quantum Bruhat graph of a root datum; cached per datum via `QBGraph.of`."""

    _instances: dict = {}

    @classmethod
    def of(cls, rd: RootDatum) -> "QBGraph":
        if rd not in cls._instances:
            cls._instances[rd] = cls(rd)
        return cls._instances[rd]

    def __init__(self, rd: RootDatum):
        self.datum = rd
        self.W0 = WeylGroup.of(rd)
        self.vertices = self.W0.elements()
        zero = (0,) * rd.rank
        refl = [self.W0.reflection(b) for b in range(rd.num_positive)]
        self.adjacency: dict[WeylElement, list[QBGEdge]] = {}
        for x in self.vertices:
            out = []
            for b, sb in enumerate(refl):
                y = x * sb
                cor = rd.root_coroot_coords[b]
                if y.length == x.length + 1:
                    out.append(QBGEdge(x, y, BRUHAT, b, zero))
                elif y.length == x.length + 1 - 2 * sum(cor):
                    out.append(QBGEdge(x, y, QUANTUM, b, cor))
            self.adjacency[x] = out
        self._from: dict[WeylElement, dict[WeylElement, tuple[int, tuple[int, ...]]]] = {}

    def edges(self) -> list[QBGEdge]:
        return [e for x in self.vertices for e in self.adjacency[x]]

    def count_edges(self) -> tuple[int, int]:
        """(number of Bruhat edges, number of quantum edges)."""
        es = self.edges()
        q = sum(1 for e in es if e.kind == QUANTUM)
        return len(es) - q, q

    def _bfs(self, x: WeylElement) -> dict[WeylElement, tuple[int, tuple[int, ...]]]:
        table = self._from.get(x)
        if table is None:
            table = {x: (0, (0,) * self.datum.rank)}
            queue = deque([x])
            while queue:
                u = queue.popleft()
                d, w = table[u]
                for e in self.adjacency[u]:
                    if e.target not in table:
                        table[e.target] = (d + 1, _add(w, e.weight))
                        queue.append(e.target)
            self._from[x] = table
        return table

    def distance(self, x: WeylElement, y: WeylElement) -> int:
        return self._bfs(x)[y][0]

    def wt(self, x: WeylElement, y: WeylElement) -> tuple[int, ...]:
        """Weight of a shortest path x -> y, in simple-coroot coordinates."""
        return self._bfs(x)[y][1]


def build_qbg(rd: RootDatum) -> QBGraph:
    return QBGraph.of(rd)


def wt(x: WeylElement, y: WeylElement) -> tuple[int, ...]:
    return QBGraph.of(x.datum).wt(x, y)


def wt_by_recursion(x: WeylElement, v: WeylElement) -> tuple[int, ...]:
    """wt(x, v) via  wt(x, v) = wt(min{x, s_i x}, s_i v)  for s_i v < v,
    down to v = e, where wt(x, e) is read off the graph."""
    G = x.group
    while not v.is_identity:
        i = min(v.left_descents())
        s = G.s(i)
        sx = s * x
        if sx.length < x.length:
            x = sx
        v = s * v
    return wt(x, G.identity)


def demazure(u: WeylElement, v: WeylElement) -> WeylElement:
    """The Demazure product u * v, folding s_i * v over a reduced word of u."""
    G = u.group
    res = v
    for i in reversed(u.word):
        if not res.has_left_descent(i):
            res = G.s(i) * res
    return res


def _check_gamma(rd: RootDatum, gamma: Sequence[int]) -> tuple[int, ...]:
    gamma = tuple(int(c) for c in gamma)
    if len(gamma) != rd.rank:
        raise NotNonnegative(f"gamma {gamma} needs {rd.rank} simple-coroot coordinates")
    if any(c < 0 for c in gamma):
        raise NotNonnegative(f"gamma {gamma} is not a nonnegative combination of simple coroots")
    return gamma


def greedy_decomposition(rd: RootDatum, gamma: Sequence[int], reverse: bool = False) -> list[int]:
    """Positive-root indices (b_1, ..., b_m) of a greedy decomposition of gamma.

    At each step b is a maximal root (in the root poset) among those with
    b^vee <= the remaining part.  Ties between incomparable maximal roots go
    to the lexicographically largest simple-root coordinates, or the smallest
    when ``reverse`` is set.
    """
    rest = _check_gamma(rd, gamma)
    out = []
    roots = rd.positive_roots
    while any(rest):
        cands = [b for b in range(rd.num_positive) if coroot_leq(rd.root_coroot_coords[b], rest)]
        maximal = [
            b for b in cands
            if not any(c != b and rd.root_leq(roots[b].coords, roots[c].coords) for c in cands)
        ]
        pick = (min if reverse else max)(maximal, key=lambda b: roots[b].coords)
        out.append(pick)
        rest = tuple(r - c for r, c in zip(rest, rd.root_coroot_coords[pick]))
    return out


def z_gamma(rd: RootDatum, gamma: Sequence[int], reverse: bool = False) -> WeylElement:
    """z_gamma = z_{gamma - b^vee} * s_b along the greedy decomposition."""
    W = WeylGroup.of(rd)
    z = W.identity
    for b in reversed(greedy_decomposition(rd, gamma, reverse)):
        z = demazure(z, W.reflection(b))
    return z


def max_wt_leq_oracle(rd: RootDatum, gamma: Sequence[int], v: WeylElement | None = None) -> WeylElement:
    """Brute force: the maximum of {x in W0 : wt(x, v) <= gamma}.

    Raises NotUnique unless the maximum dominates every member.
    """
    gamma = _check_gamma(rd, gamma)
    g = QBGraph.of(rd)
    v = g.W0.identity if v is None else v
    members = [x for x in g.vertices if coroot_leq(g.wt(x, v), gamma)]
    top = max(members, key=lambda x: x.length)
    if not all(bruhat_leq(x, top) for x in members):
        raise NotUnique(f"{{x : wt(x, {v!r}) <= {gamma}}} has no unique maximum")
    return top
