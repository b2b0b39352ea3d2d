"""
The finite Weyl group W0 of a root datum.

An element is stored as the permutation it induces on the set of roots
(roots are indexed as in `RootDatum.roots`: positives first, then their
negatives in the same order).  Equality and hashing are O(#roots), the action
on roots is a table lookup, and length/descents are sign counts.  Reduced
words are derived on demand; the canonical word is the lexicographically
smallest reduced word, built greedily from the smallest left descent.

>>> from localmodels.root_datum import CartanSpec, build_root_datum
>>> W = WeylGroup.of(build_root_datum(CartanSpec("A", 2)))
>>> w = W.from_word([1, 2, 1])
>>> w.length, w.word, w == W.longest()
(3, (1, 2, 1), True)
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import DatumMismatch
from .root_datum import RootDatum

__all__ = [
    "WeylElement", "WeylGroup", "bruhat_leq", "coset_min",
    "double_coset_reps", "support", "word_str",
]


def word_str(word: Sequence[int]) -> str:
    """Digits of a word joined together; the empty word is 'e'."""
    return "".join(str(i) for i in word) if word else "e"


class WeylElement:
    __slots__ = ("group", "perm", "_length", "_word", "_inverse", "_matrix", "_hash")

    def __init__(self, group: "WeylGroup", perm: tuple[int, ...]):
        self.group = group
        self.perm = perm
        self._length = None
        self._word = None
        self._inverse = None
        self._matrix = None
        self._hash = None

    @property
    def datum(self) -> RootDatum:
        return self.group.datum

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.perm == other.perm and self.group is other.group

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.perm)
        return self._hash

    def __repr__(self):
        return f"W0[{word_str(self.word)}]"

    def _check(self, other: "WeylElement") -> None:
        if not isinstance(other, WeylElement) or other.group is not self.group:
            raise DatumMismatch("Weyl elements belong to different root data")

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        self._check(other)
        p = self.perm
        return WeylElement(self.group, tuple([p[j] for j in other.perm]))

    def inverse(self) -> "WeylElement":
        if self._inverse is None:
            inv = [0] * len(self.perm)
            for i, j in enumerate(self.perm):
                inv[j] = i
            self._inverse = WeylElement(self.group, tuple(inv))
            self._inverse._inverse = self
        return self._inverse

    @property
    def length(self) -> int:
        if self._length is None:
            N = self.group.num_positive
            self._length = sum(1 for j in self.perm[:N] if j >= N)
        return self._length

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    def sends_positive(self, root_idx: int) -> bool:
        """True iff w(root) is a positive root."""
        return self.perm[root_idx] < self.group.num_positive

    def right_descents(self) -> frozenset[int]:
        N = self.group.num_positive
        return frozenset(i + 1 for i in range(self.group.rank) if self.perm[i] >= N)

    def left_descents(self) -> frozenset[int]:
        return self.inverse().right_descents()

    def descents(self, side: str = "right") -> frozenset[int]:
        if side == "right":
            return self.right_descents()
        if side == "left":
            return self.left_descents()
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")

    def has_left_descent(self, i: int) -> bool:
        return self.inverse().perm[i - 1] >= self.group.num_positive

    def has_right_descent(self, i: int) -> bool:
        return self.perm[i - 1] >= self.group.num_positive

    @property
    def word(self) -> tuple[int, ...]:
        """Lexicographically smallest reduced word."""
        if self._word is None:
            word = []
            cur = self
            gens = self.group.gens
            while cur.length:
                i = min(cur.left_descents())
                word.append(i)
                cur = gens[i - 1] * cur
            self._word = tuple(word)
        return self._word

    def act_root(self, root_idx: int) -> int:
        return self.perm[root_idx]

    def act_coweight(self, cw: Sequence[int]) -> tuple[int, ...]:
        """w(cw), exactly, in lattice coordinates."""
        m = self.matrix
        return tuple(sum(r * c for r, c in zip(row, cw)) for row in m)

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Integer matrix of w acting on X (rows index output coordinates)."""
        if self._matrix is None:
            rd = self.group.datum
            d = rd.lattice_dim
            cols = []
            for k in range(d):
                v = tuple(int(j == k) for j in range(d))
                for i in reversed(self.word):
                    v = rd.reflect_coweight(i, v)
                cols.append(v)
            self._matrix = tuple(tuple(cols[k][r] for k in range(d)) for r in range(d))
        return self._matrix


class WeylGroup:
    """W0 for a root datum; one cached instance per datum (`WeylGroup.of`)."""

    _instances: dict = {}

    @classmethod
    def of(cls, rd: RootDatum) -> "WeylGroup":
        if rd not in cls._instances:
            cls._instances[rd] = cls(rd)
        return cls._instances[rd]

    def __init__(self, rd: RootDatum):
        self.datum = rd
        self.rank = rd.rank
        self.num_positive = rd.num_positive
        self.identity = WeylElement(self, tuple(range(2 * rd.num_positive)))
        self._reflections: dict[int, WeylElement] = {}
        self.gens = [self.reflection(i) for i in range(rd.rank)]
        self._bruhat: dict = {}
        self._elements: list[WeylElement] | None = None

    def __repr__(self):
        return f"WeylGroup({self.datum.spec.name})"

    def reflection(self, root_idx: int) -> WeylElement:
        """s_beta for the root with the given index (either sign)."""
        rd = self.datum
        idx = root_idx % rd.num_positive
        if idx not in self._reflections:
            beta = rd.roots[idx].coords
            perm = []
            for g, root in enumerate(rd.roots):
                k = rd.coroot_pair(idx, g)
                img = tuple(c - k * b for c, b in zip(root.coords, beta))
                perm.append(rd.root_index[img])
            self._reflections[idx] = WeylElement(self, tuple(perm))
        return self._reflections[idx]

    def s(self, i: int) -> WeylElement:
        """The simple reflection s_i, i in 1..rank."""
        return self.gens[i - 1]

    def from_word(self, word: Iterable[int]) -> WeylElement:
        w = self.identity
        for i in word:
            w = w * self.gens[i - 1]
        return w

    def from_string(self, text: str) -> WeylElement:
        text = text.strip()
        if text in ("", "e"):
            return self.identity
        return self.from_word(int(ch) for ch in text)

    def elements(self) -> list[WeylElement]:
        """All of W0, sorted by (length, canonical word)."""
        if self._elements is None:
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for w in frontier:
                    for g in self.gens:
                        u = w * g
                        if u not in seen:
                            seen.add(u)
                            nxt.append(u)
                frontier = nxt
            self._elements = sorted(seen, key=lambda w: (w.length, w.word))
        return self._elements

    def enumerate(self) -> Iterator[WeylElement]:
        return iter(self.elements())

    def order(self) -> int:
        return len(self.elements())

    def longest(self, J: Iterable[int] | None = None) -> WeylElement:
        """Longest element of W_J (of W0 when J is None)."""
        J = range(1, self.rank + 1) if J is None else sorted(J)
        w = self.identity
        grew = True
        while grew:
            grew = False
            for j in J:
                if not w.has_right_descent(j):
                    w = w * self.gens[j - 1]
                    grew = True
        return w

    def parabolic(self, J: Iterable[int]) -> list[WeylElement]:
        return self.generate([self.gens[j - 1] for j in sorted(J)])

    def generate(self, gens: Sequence[WeylElement]) -> list[WeylElement]:
        """The subgroup generated by gens, sorted by (length, word)."""
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            w = queue.popleft()
            for g in gens:
                u = w * g
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return sorted(seen, key=lambda w: (w.length, w.word))


def _check_pair(x: WeylElement, y: WeylElement) -> None:
    if not isinstance(x, WeylElement) or not isinstance(y, WeylElement) or x.group is not y.group:
        raise DatumMismatch("Weyl elements belong to different root data")


def bruhat_leq(x: WeylElement, y: WeylElement) -> bool:
    """Bruhat order by the left-descent recursion.

    Pick s with sy < y.  Then x <= y iff sx <= sy (when sx < x) or
    x <= sy (when sx > x).
    """
    _check_pair(x, y)
    return _bruhat(x, y)


def _bruhat(x: WeylElement, y: WeylElement) -> bool:
    lx, ly = x.length, y.length
    if lx > ly:
        return False
    if lx == ly:
        return x == y
    if lx == 0:
        return True
    memo = x.group._bruhat
    key = (x.perm, y.perm)
    res = memo.get(key)
    if res is None:
        yi = y.inverse()
        N = x.group.num_positive
        i = next(k for k in range(x.group.rank) if yi.perm[k] >= N)
        s = x.group.gens[i]
        sy = s * y
        sx = s * x
        res = _bruhat(sx, sy) if sx.length < lx else _bruhat(x, sy)
        memo[key] = res
    return res


def coset_min(w: WeylElement, J: Iterable[int], side: str = "left") -> WeylElement:
    """Minimal element of W_J w (side='left') or w W_J (side='right')."""
    J = sorted(J)
    gens = w.group.gens
    cur = w
    changed = True
    while changed:
        changed = False
        for j in J:
            if side == "left" and cur.has_left_descent(j):
                cur = gens[j - 1] * cur
                changed = True
            elif side == "right" and cur.has_right_descent(j):
                cur = cur * gens[j - 1]
                changed = True
            elif side not in ("left", "right"):
                raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return cur


def support(w: WeylElement) -> frozenset[int]:
    return frozenset(w.word)


def _as_generators(group: WeylGroup, J) -> list[WeylElement]:
    J = list(J)
    if all(isinstance(g, WeylElement) for g in J):
        for g in J:
            if g.group is not group:
                raise DatumMismatch("generator from a different root datum")
        return J
    return [group.gens[j - 1] for j in sorted(J)]


def double_coset_reps(group: WeylGroup, left, right) -> list[WeylElement]:
    """One minimal representative per double coset H \\ W0 / W_right.

    ``left`` is either a subset of 1..rank or a list of generating elements
    (so reflection subgroups such as W_pr(K) are allowed); ``right`` is a
    subset of 1..rank.  Representatives are minimal in (length, word).
    """
    lgens = _as_generators(group, left)
    rgens = _as_generators(group, right)
    assigned: set[WeylElement] = set()
    reps = []
    for w in group.elements():
        if w in assigned:
            continue
        orbit = {w}
        queue = deque([w])
        while queue:
            u = queue.popleft()
            for g in lgens:
                v = g * u
                if v not in orbit:
                    orbit.add(v)
                    queue.append(v)
            for g in rgens:
                v = u * g
                if v not in orbit:
                    orbit.add(v)
                    queue.append(v)
        assigned |= orbit
        reps.append(min(orbit, key=lambda u: (u.length, u.word)))
    return sorted(reps, key=lambda u: (u.length, u.word))
