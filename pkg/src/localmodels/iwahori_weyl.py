"""
The Iwahori-Weyl group  W~ = X x| W0  of a split root datum.

Elements are pairs (lambda, w) standing for t^lambda w, acting on V by
v -> lambda + w(v).  Affine roots are pairs (root index, k) and represent the
affine function v -> <v, alpha> + k; the positive ones are those with
k >= 0 (alpha > 0) or k >= 1 (alpha < 0), so the base alcove is
{v dominant : <v, theta> < 1}.  With these conventions

    (t^lambda y)(alpha, k) = (y(alpha), k - <lambda, y(alpha)>),

the affine simple roots are (alpha_i, 0) for i in 1..rank and (-theta, 1) for
the affine node 0, and  s_0 = t^{theta^vee} s_theta.

The affine node is labelled 0; subsets K of {0, 1, ..., rank} index the
standard parahoric levels.

>>> from localmodels.root_datum import CartanSpec, build_root_datum
>>> G = AffineWeylGroup.of(build_root_datum(CartanSpec("A", 1)))
>>> t = G.translation((1,))
>>> t.length, t == G.from_word([0, 1])
(2, True)
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import DatumMismatch, NotSpherical, NotUnique
from .finite_weyl import WeylElement, WeylGroup, word_str
from .root_datum import RootDatum

__all__ = [
    "AffineElement", "AffineWeylGroup", "aff_bruhat_leq", "act_affine",
    "aff_length", "is_translation_min_rep", "unique_conjugate_in_min_reps",
    "pr", "pr_subgroup", "in_acute_cone", "acute_directions",
    "simple_affine_root", "is_positive_affine_root", "spherical_subset",
]

AffineRoot = tuple[int, int]  # (root index, level k)


class AffineElement:
    __slots__ = ("group", "translation", "finite", "_length", "_key", "_word", "_inverse")

    def __init__(self, group: "AffineWeylGroup", translation: tuple[int, ...], finite: WeylElement):
        self.group = group
        self.translation = translation
        self.finite = finite
        self._length = None
        self._key = None
        self._word = None
        self._inverse = None

    @property
    def datum(self) -> RootDatum:
        return self.group.datum

    @property
    def key(self) -> tuple:
        if self._key is None:
            self._key = (self.translation, self.finite.perm)
        return self._key

    def __eq__(self, other):
        return isinstance(other, AffineElement) and self.group is other.group and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"W~[{self.word_string()}]"

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        if not isinstance(other, AffineElement) or other.group is not self.group:
            raise DatumMismatch("affine elements belong to different root data")
        moved = self.finite.act_coweight(other.translation)
        lam = tuple(a + b for a, b in zip(self.translation, moved))
        return AffineElement(self.group, lam, self.finite * other.finite)

    def inverse(self) -> "AffineElement":
        if self._inverse is None:
            winv = self.finite.inverse()
            lam = tuple(-x for x in winv.act_coweight(self.translation))
            self._inverse = AffineElement(self.group, lam, winv)
            self._inverse._inverse = self
        return self._inverse

    @property
    def length(self) -> int:
        """sum_{a>0, y^-1 a>0} |<l,a>| + sum_{a>0, y^-1 a<0} |<l,a> - 1|."""
        if self._length is None:
            rd = self.group.datum
            N = rd.num_positive
            yinv = self.finite.inverse()
            lam = self.translation
            total = 0
            for a in range(N):
                p = rd.pair_index(lam, a)
                total += abs(p) if yinv.perm[a] < N else abs(p - 1)
            self._length = total
        return self._length

    @property
    def omega_class(self) -> tuple:
        return self.group.datum.omega_class(self.translation)

    def act(self, ar: AffineRoot) -> AffineRoot:
        idx, k = ar
        img = self.finite.perm[idx]
        return img, k - self.group.datum.pair_index(self.translation, img)

    def has_right_descent(self, i: int) -> bool:
        return not is_positive_affine_root(self.group.datum, self.act(self.group.simple_roots[i]))

    def has_left_descent(self, i: int) -> bool:
        return self.inverse().has_right_descent(i)

    def right_descents(self) -> frozenset[int]:
        return frozenset(i for i in self.group.nodes if self.has_right_descent(i))

    def left_descents(self) -> frozenset[int]:
        return self.inverse().right_descents()

    def reduced_word(self) -> tuple[tuple[int, ...], "AffineElement"]:
        """(lex-smallest reduced word in the affine simple reflections, length-zero part tau).

        The element equals s_{i1} ... s_{ik} tau.
        """
        if self._word is None:
            word = []
            cur = self
            gens = self.group.gens
            while cur.length:
                i = min(cur.left_descents())
                word.append(i)
                cur = gens[i] * cur
            self._word = (tuple(word), cur)
        return self._word

    @property
    def word(self) -> tuple[int, ...]:
        return self.reduced_word()[0]

    def word_string(self) -> str:
        word, tau = self.reduced_word()
        if tau.is_identity:
            return word_str(word)
        lam = ",".join(str(x) for x in tau.translation)
        head = "".join(str(i) for i in word)
        return f"{head}tau({lam};{word_str(tau.finite.word)})"

    @property
    def is_identity(self) -> bool:
        return self.finite.is_identity and not any(self.translation)

    def inversions(self) -> list[AffineRoot]:
        """Positive affine roots sent to negative ones, by direct range enumeration."""
        rd = self.group.datum
        N = rd.num_positive
        out = []
        for idx in range(2 * N):
            img = self.finite.perm[idx]
            lo = 0 if idx < N else 1
            hi = rd.pair_index(self.translation, img) + (0 if img < N else 1) - 1
            out.extend((idx, k) for k in range(lo, hi + 1))
        return out


def is_positive_affine_root(rd: RootDatum, ar: AffineRoot) -> bool:
    idx, k = ar
    return k >= (0 if idx < rd.num_positive else 1)


def spherical_subset(rd: RootDatum, K: Iterable[int]) -> frozenset[int]:
    """Validate K as a spherical subset of {0, ..., rank}."""
    K = frozenset(int(i) for i in K)
    if any(i < 0 or i > rd.rank for i in K):
        raise NotSpherical(f"{sorted(K)} is not a subset of the affine nodes 0..{rd.rank}")
    if len(K) == rd.rank + 1:
        raise NotSpherical("K contains every affine node, so W_K is infinite")
    return K


class AffineWeylGroup:
    """W~ for a root datum; one cached instance per datum (`AffineWeylGroup.of`)."""

    _instances: dict = {}

    @classmethod
    def of(cls, rd: RootDatum) -> "AffineWeylGroup":
        if rd not in cls._instances:
            cls._instances[rd] = cls(rd)
        return cls._instances[rd]

    def __init__(self, rd: RootDatum):
        self.datum = rd
        self.W0 = WeylGroup.of(rd)
        self.nodes = tuple(range(rd.rank + 1))
        self.identity = AffineElement(self, rd.zero(), self.W0.identity)
        theta = rd.root_index[rd.highest_root]
        self.simple_roots = {0: (rd.negate_index(theta), 1)}
        for i in range(1, rd.rank + 1):
            self.simple_roots[i] = (i - 1, 0)
        self.gens = {0: self.affine_reflection(self.simple_roots[0])}
        for i in range(1, rd.rank + 1):
            self.gens[i] = AffineElement(self, rd.zero(), self.W0.s(i))
        self._bruhat: dict = {}
        self._parabolic: dict = {}

    def __repr__(self):
        return f"AffineWeylGroup({self.datum.spec.name})"

    def element(self, translation: Sequence[int], finite: WeylElement | None = None) -> AffineElement:
        lam = self.datum.check_coweight(translation)
        return AffineElement(self, lam, self.W0.identity if finite is None else finite)

    def translation(self, lam: Sequence[int]) -> AffineElement:
        return self.element(lam)

    def from_finite(self, w: WeylElement) -> AffineElement:
        return AffineElement(self, self.datum.zero(), w)

    def from_word(self, word: Iterable[int]) -> AffineElement:
        w = self.identity
        for i in word:
            w = w * self.gens[i]
        return w

    def affine_reflection(self, ar: AffineRoot) -> AffineElement:
        """Reflection in the hyperplane of (beta, k):  t^{-k beta^vee} s_beta."""
        idx, k = ar
        rd = self.datum
        cor = rd.coroot_x[idx]
        return AffineElement(self, tuple(-k * c for c in cor), self.W0.reflection(idx))

    def parabolic(self, K: Iterable[int]) -> list[AffineElement]:
        """All elements of W_K, sorted by (length, word)."""
        K = spherical_subset(self.datum, K)
        if K not in self._parabolic:
            gens = [self.gens[i] for i in sorted(K)]
            seen = {self.identity}
            queue = deque([self.identity])
            while queue:
                w = queue.popleft()
                for g in gens:
                    u = w * g
                    if u not in seen:
                        seen.add(u)
                        queue.append(u)
            self._parabolic[K] = sorted(seen, key=lambda u: (u.length, u.word))
        return self._parabolic[K]

    def longest(self, K: Iterable[int]) -> AffineElement:
        K = sorted(spherical_subset(self.datum, K))
        w = self.identity
        grew = True
        while grew:
            grew = False
            for i in K:
                if not w.has_right_descent(i):
                    w = w * self.gens[i]
                    grew = True
        return w

    def coset_min(self, w: AffineElement, K: Iterable[int], side: str = "right") -> AffineElement:
        """Minimal element of w W_K (side='right') or W_K w (side='left')."""
        K = sorted(spherical_subset(self.datum, K))
        cur = w
        changed = True
        while changed:
            changed = False
            for i in K:
                if side == "right" and cur.has_right_descent(i):
                    cur = cur * self.gens[i]
                    changed = True
                elif side == "left" and cur.has_left_descent(i):
                    cur = self.gens[i] * cur
                    changed = True
        return cur

    def is_min_right(self, w: AffineElement, K: Iterable[int]) -> bool:
        """w in W~^K."""
        return not any(w.has_right_descent(i) for i in K)

    def is_min_left(self, w: AffineElement, K: Iterable[int]) -> bool:
        """w in ^K W~."""
        return not any(w.has_left_descent(i) for i in K)

    def elements_up_to(self, max_length: int) -> list[AffineElement]:
        """Elements of the affine Weyl group W_af of length <= max_length."""
        seen = {self.identity}
        frontier = [self.identity]
        for _ in range(max_length):
            nxt = []
            for w in frontier:
                for i in self.nodes:
                    u = w * self.gens[i]
                    if u not in seen and u.length > w.length:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        return sorted(seen, key=lambda u: (u.length, u.word))


def act_affine(w: AffineElement, ar: AffineRoot) -> AffineRoot:
    return w.act(ar)


def aff_length(w: AffineElement) -> int:
    return w.length


def simple_affine_root(rd: RootDatum, i: int) -> AffineRoot:
    return AffineWeylGroup.of(rd).simple_roots[i]


def aff_bruhat_leq(x: AffineElement, y: AffineElement) -> bool:
    """Bruhat order on W~; elements in different Omega-classes are incomparable.

    Right-descent recursion: pick s with ys < y; then x <= y iff xs <= ys
    (when xs < x) or x <= ys (when xs > x).
    """
    if not isinstance(x, AffineElement) or not isinstance(y, AffineElement) or x.group is not y.group:
        raise DatumMismatch("affine elements belong to different root data")
    if x.length > y.length:
        return False
    if x.omega_class != y.omega_class:
        return False
    return _aff_bruhat(x, y)


def _aff_bruhat(x: AffineElement, y: AffineElement) -> bool:
    lx, ly = x.length, y.length
    if lx > ly:
        return False
    if lx == ly:
        return x == y
    if lx == 0:
        return True
    G = x.group
    key = (x.key, y.key)
    res = G._bruhat.get(key)
    if res is None:
        i = next(j for j in G.nodes if y.has_right_descent(j))
        s = G.gens[i]
        ys = y * s
        xs = x * s
        res = _aff_bruhat(xs, ys) if xs.length < lx else _aff_bruhat(x, ys)
        G._bruhat[key] = res
    return res


def _node_root_pairing(rd: RootDatum, lam: Sequence[int], i: int) -> int:
    """<lam, alpha_i> with alpha_0 = -theta."""
    if i == 0:
        return -rd.pair_index(lam, rd.root_index[rd.highest_root])
    return rd.pair_index(lam, i - 1)


def is_translation_min_rep(rd: RootDatum, lam: Sequence[int], K: Iterable[int]) -> bool:
    """t^lam in W~^K  <=>  <lam, alpha_i> <= 0 for all i in K."""
    lam = rd.check_coweight(lam)
    return all(_node_root_pairing(rd, lam, i) <= 0 for i in K)


def unique_conjugate_in_min_reps(rd: RootDatum, lam: Sequence[int], K: Iterable[int]) -> AffineElement:
    """The unique W_K-conjugate of t^lam lying in W~^K (found by sweeping W_K)."""
    G = AffineWeylGroup.of(rd)
    lam = rd.check_coweight(lam)
    found = set()
    for u in G.parabolic(K):
        mu = u.finite.act_coweight(lam)
        if is_translation_min_rep(rd, mu, K):
            found.add(mu)
    if len(found) != 1:
        raise NotUnique(f"{len(found)} W_K-conjugates of t^{lam} lie in W~^K")
    return G.translation(found.pop())


def pr(w: AffineElement) -> WeylElement:
    return w.finite


def pr_subgroup(rd: RootDatum, K: Iterable[int]) -> list[WeylElement]:
    """Generators {pr(s_i) : i in K} of W_pr(K); pr(s_0) = s_theta."""
    G = AffineWeylGroup.of(rd)
    return [G.gens[i].finite for i in sorted(spherical_subset(rd, K))]


def _height(rd: RootDatum, idx: int) -> int:
    return sum(rd.roots[idx].coords)


def _crossed_walls(w: AffineElement) -> Iterator[tuple[int, bool]]:
    """Yield (alpha, moved_up) for every positive root alpha such that some
    hyperplane parallel to ker(alpha) separates the base alcove from w(a).

    The sample point is p0 = rho^vee / h; all values are scaled by h so that
    h<p0, alpha> = ht(alpha) and h<w p0, alpha> = h<lam, alpha> + ht(y^-1 alpha).
    """
    rd = w.group.datum
    h = rd.coxeter_number
    N = rd.num_positive
    yinv = w.finite.inverse()
    for a in range(N):
        before = _height(rd, a)
        after = h * rd.pair_index(w.translation, a) + _height(rd, yinv.perm[a])
        if after < 0 or after > h:
            yield a, after > before


def in_acute_cone(w: AffineElement, z: WeylElement) -> bool:
    """Is w(a) in the acute cone C(a, z)?  Checked hyperplane by hyperplane:
    each separating wall must be crossed towards z(C+)."""
    if z.group is not w.group.W0:
        raise DatumMismatch("direction from a different root datum")
    zinv = z.inverse()
    for a, up in _crossed_walls(w):
        if zinv.sends_positive(a) != up:
            return False
    return True


def acute_directions(w: AffineElement) -> list[WeylElement]:
    walls = list(_crossed_walls(w))
    out = []
    for z in w.group.W0.elements():
        zinv = z.inverse()
        if all(zinv.sends_positive(a) == up for a, up in walls):
            out.append(z)
    return out
