"""
Split root data of types A-G together with a lattice X of coweights.

Everything is derived from the Bourbaki realization of the simple roots in an
ambient Euclidean space, using exact rationals, and then frozen into integer
tables:

* roots are integer vectors in the basis of simple roots;
* coweights are integer vectors in a chosen Z-basis of X;
* ``pairing_matrix[k][j] = <b_k, alpha_j>`` for the basis vectors b_k of X;
* ``coroot_matrix[i]`` is the simple coroot alpha_i^vee written in X.

Simple roots are numbered 1..rank as in Bourbaki's plates.

>>> rd = build_root_datum(CartanSpec("A", 2))
>>> len(rd.positive_roots), rd.highest_root
(3, (1, 1))
>>> rd.pair(rd.simple_coroot(1), (0, 1))
-1
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .errors import DatumMismatch, InvalidSpec, NonIntegralLattice

__all__ = [
    "CartanSpec", "Root", "RootDatum", "build_root_datum", "solve_exact",
]

Coweight = tuple[int, ...]
Lattice = Union[str, tuple[tuple[int, ...], ...]]

_NAMED_LATTICES = ("adjoint", "coweight", "gl")

_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True)
class CartanSpec:
    """Family, rank and lattice choice.

    ``lattice`` is one of ``"adjoint"`` (X = coroot lattice), ``"coweight"``
    (X = coweight lattice), ``"gl"`` (X = Z^n for type A_{n-1}) or a tuple of
    integer basis vectors written in the Bourbaki ambient coordinates.
    """
    family: str
    rank: int
    lattice: Lattice = "adjoint"

    def __post_init__(self):
        if not isinstance(self.lattice, str):
            basis = tuple(tuple(int(c) for c in v) for v in self.lattice)
            object.__setattr__(self, "lattice", basis)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Root:
    index: int
    coords: tuple[int, ...]  # in the basis of simple roots

    @property
    def positive(self) -> bool:
        return any(c > 0 for c in self.coords)

    @property
    def height(self) -> int:
        return sum(self.coords)


def _unit(m: int, i: int, scale=1) -> list[Fraction]:
    v = [Fraction(0)] * m
    v[i] = Fraction(scale)
    return v


def _ambient_simple_roots(family: str, n: int) -> list[list[Fraction]]:
    """Bourbaki's simple roots, as vectors in R^m."""
    half = Fraction(1, 2)
    if family == "A":
        m = n + 1
        return [[Fraction(int(k == i) - int(k == i + 1)) for k in range(m)] for i in range(n)]
    if family in "BCD":
        roots = [[Fraction(int(k == i) - int(k == i + 1)) for k in range(n)] for i in range(n - 1)]
        if family == "B":
            roots.append(_unit(n, n - 1))
        elif family == "C":
            roots.append(_unit(n, n - 1, 2))
        else:
            last = [Fraction(0)] * n
            last[n - 2] = last[n - 1] = Fraction(1)
            roots.append(last)
        return roots
    if family == "G":
        return [[Fraction(1), Fraction(-1), Fraction(0)],
                [Fraction(-2), Fraction(1), Fraction(1)]]
    if family == "F":
        return [
            [Fraction(0), Fraction(1), Fraction(-1), Fraction(0)],
            [Fraction(0), Fraction(0), Fraction(1), Fraction(-1)],
            [Fraction(0), Fraction(0), Fraction(0), Fraction(1)],
            [half, -half, -half, -half],
        ]
    if family == "E":
        roots = [[half] + [-half] * 6 + [half]]
        roots.append([Fraction(1), Fraction(1)] + [Fraction(0)] * 6)
        for k in range(3, 9):
            v = [Fraction(0)] * 8
            v[k - 2] = Fraction(1)
            v[k - 3] = Fraction(-1)
            roots.append(v)
        return roots[:n]
    raise InvalidSpec(f"unknown family {family!r}")


def _check_rank(family: str, n: int) -> None:
    ok = {
        "A": n >= 1, "B": n >= 2, "C": n >= 2, "D": n >= 4,
        "E": 6 <= n <= 8, "F": n == 4, "G": n == 2,
    }
    if family not in ok:
        raise InvalidSpec(f"unknown family {family!r}")
    if not ok[family]:
        raise InvalidSpec(f"rank {n} is not admissible for family {family}")


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def solve_exact(columns: Sequence[Sequence], target: Sequence) -> list[Fraction] | None:
    """Solve ``sum_k c_k columns[k] = target`` over Q.

    Returns None when there is no solution.  The columns are assumed to be
    linearly independent, so a solution is unique when it exists.
    """
    d = len(columns)
    m = len(target)
    rows = [[Fraction(columns[k][r]) for k in range(d)] + [Fraction(target[r])] for r in range(m)]
    pivots = []
    row = 0
    for col in range(d):
        piv = next((r for r in range(row, m) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[row], rows[piv] = rows[piv], rows[row]
        p = rows[row][col]
        rows[row] = [x / p for x in rows[row]]
        for r in range(m):
            if r != row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[row])]
        pivots.append(col)
        row += 1
    if any(rows[r][d] != 0 for r in range(row, m)):
        return None
    sol = [Fraction(0)] * d
    for r, col in enumerate(pivots):
        sol[col] = rows[r][d]
    return sol


def _rank_of(vectors: Sequence[Sequence[Fraction]]) -> int:
    rows = [list(map(Fraction, v)) for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(rank + 1, len(rows)):
            f = rows[r][col] / rows[rank][col]
            rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


class RootDatum:
    """An irreducible reduced root system with a coweight lattice X.

    Instances are immutable after construction; build them with
    `build_root_datum`, which caches one instance per spec.
    """

    def __init__(self, spec: CartanSpec):
        family, n = spec.family, spec.rank
        _check_rank(family, n)
        self.spec = spec
        self.rank = n
        ambient = _ambient_simple_roots(family, n)
        self.ambient_dim = len(ambient[0])
        self._ambient_simple = ambient
        sq = [_dot(a, a) for a in ambient]
        self.cartan_matrix = tuple(
            tuple(int(2 * _dot(ambient[i], ambient[j]) / sq[i]) for j in range(n))
            for i in range(n)
        )
        self._enumerate_roots(sq)
        self._build_lattice()

        expected = _POSITIVE_ROOT_COUNT[family](n)
        if len(self.positive_roots) != expected:
            raise AssertionError(f"{spec.name}: {len(self.positive_roots)} positive roots, expected {expected}")

    # ------------------------------------------------------------------
    # roots

    def _enumerate_roots(self, sq: list[Fraction]) -> None:
        n, A = self.rank, self.cartan_matrix
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(n):
                    pairing = sum(A[i][j] * beta[j] for j in range(n))
                    img = list(beta)
                    img[i] -= pairing
                    img = tuple(img)
                    if img not in seen and all(c >= 0 for c in img):
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        positive = sorted(seen, key=lambda c: (sum(c), tuple(-x for x in c)))
        N = len(positive)
        self.num_positive = N
        coords = positive + [tuple(-x for x in c) for c in positive]
        self.roots = tuple(Root(i, c) for i, c in enumerate(coords))
        self.positive_roots = self.roots[:N]
        self.root_index = {c: i for i, c in enumerate(coords)}

        # squared lengths and coroots (in the basis of simple coroots)
        amb = self._ambient_simple
        self.root_ambient = tuple(
            tuple(sum((c[j] * amb[j][k] for j in range(n)), Fraction(0)) for k in range(self.ambient_dim))
            for c in coords
        )
        self.root_sqlen = tuple(_dot(v, v) for v in self.root_ambient)
        self.root_coroot_coords = tuple(
            tuple(int(c[j] * sq[j] / self.root_sqlen[i]) for j in range(n))
            for i, c in enumerate(coords)
        )

        theta = max(positive, key=sum)
        for beta in positive:
            if not all(t >= b for t, b in zip(theta, beta)):
                raise AssertionError("highest root is not maximal in dominance order")
        self.highest_root = theta
        self.two_rho = tuple(sum(c[j] for c in positive) for j in range(n))
        self.coxeter_number = sum(theta) + 1

        min_sq = min(sq)
        if len(set(sq)) == 1:
            self.short_simple_set = frozenset()
        else:
            self.short_simple_set = frozenset(i + 1 for i in range(n) if sq[i] == min_sq)

    # ------------------------------------------------------------------
    # lattice

    def _lattice_basis(self) -> list[list[Fraction]]:
        spec, n, amb = self.spec, self.rank, self._ambient_simple
        coroots = [[2 * x / _dot(a, a) for x in a] for a in amb]
        lat = spec.lattice
        if lat == "adjoint":
            return coroots
        if lat == "coweight":
            # fundamental coweights: dual to the simple roots inside span(coroots)
            basis = []
            for i in range(n):
                target = [Fraction(int(i == j)) for j in range(n)]
                # write omega_i = sum_k c_k coroot_k; <omega_i, alpha_j> = sum_k c_k A[k][j]
                cols = [[Fraction(self.cartan_matrix[k][j]) for j in range(n)] for k in range(n)]
                c = solve_exact(cols, target)
                basis.append([sum((c[k] * coroots[k][t] for k in range(n)), Fraction(0))
                              for t in range(self.ambient_dim)])
            return basis
        if lat == "gl":
            if spec.family != "A":
                raise InvalidSpec("the gl lattice is only available for family A")
            return [_unit(self.ambient_dim, k) for k in range(self.ambient_dim)]
        if isinstance(lat, str):
            raise InvalidSpec(f"unknown lattice {lat!r}")
        basis = [[Fraction(x) for x in v] for v in lat]
        if not basis or any(len(v) != self.ambient_dim for v in basis):
            raise InvalidSpec(f"custom basis vectors must have length {self.ambient_dim}")
        return basis

    def _build_lattice(self) -> None:
        n = self.rank
        basis = self._lattice_basis()
        if _rank_of(basis) != len(basis):
            raise InvalidSpec("lattice basis is linearly dependent")
        d = len(basis)
        self.lattice_dim = d
        self._lattice_basis_ambient = basis
        pairing = []
        for b in basis:
            row = []
            for a in self._ambient_simple:
                p = _dot(b, a)
                if p.denominator != 1:
                    raise NonIntegralLattice(f"basis vector {b} pairs to {p} with a simple root")
                row.append(int(p))
            pairing.append(tuple(row))
        self.pairing_matrix = tuple(pairing)

        coroot_rows = []
        for a in self._ambient_simple:
            cor = [2 * x / _dot(a, a) for x in a]
            c = solve_exact(basis, cor)
            if c is None or any(x.denominator != 1 for x in c):
                raise InvalidSpec("lattice does not contain the coroot lattice")
            coroot_rows.append(tuple(int(x) for x in c))
        self.coroot_matrix = tuple(coroot_rows)
        for i in range(n):
            for j in range(n):
                got = sum(self.coroot_matrix[i][k] * pairing[k][j] for k in range(d))
                if got != self.cartan_matrix[i][j]:
                    raise AssertionError("coroot/pairing tables disagree with the Cartan matrix")

        # <lambda, beta> = lambda . root_pairing[beta]
        self.root_pairing = tuple(
            tuple(sum(pairing[k][j] * r.coords[j] for j in range(n)) for k in range(d))
            for r in self.roots
        )
        # beta^vee in X coordinates
        self.coroot_x = tuple(
            tuple(sum(cc[i] * self.coroot_matrix[i][k] for i in range(n)) for k in range(d))
            for cc in self.root_coroot_coords
        )
        # integer inverse of the Cartan matrix: adj / det
        A = [[Fraction(x) for x in row] for row in self.cartan_matrix]
        inv = []
        for i in range(n):
            e = [Fraction(int(i == j)) for j in range(n)]
            # columns of A^T are the rows of A; solve c A = e  <=>  A^T c^T = e
            inv.append(solve_exact([A[k] for k in range(n)], e))
        # inv[i] = row i of A^{-1}
        self._cartan_inv = inv

    # ------------------------------------------------------------------
    # pairings and coweight arithmetic

    def __repr__(self):
        lat = self.spec.lattice if isinstance(self.spec.lattice, str) else "custom"
        return f"RootDatum({self.spec.name}, {lat})"

    def __eq__(self, other):
        return isinstance(other, RootDatum) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def check_coweight(self, cw: Sequence[int]) -> Coweight:
        if len(cw) != self.lattice_dim:
            raise DatumMismatch(f"coweight {tuple(cw)} has {len(cw)} coordinates; X has rank {self.lattice_dim}")
        return tuple(int(x) for x in cw)

    def _root_idx(self, r) -> int:
        if isinstance(r, Root):
            if r.index >= len(self.roots) or self.roots[r.index] != r:
                raise DatumMismatch(f"{r} is not a root of {self}")
            return r.index
        key = tuple(r)
        if key not in self.root_index:
            raise DatumMismatch(f"{key} is not a root of {self}")
        return self.root_index[key]

    def pair(self, cw: Sequence[int], r) -> int:
        """Exact pairing <cw, r>; r is a Root, a root index-free coordinate
        tuple, or any integer vector in the simple-root basis."""
        cw = self.check_coweight(cw)
        if isinstance(r, Root):
            pv = self.root_pairing[self._root_idx(r)]
            return sum(a * b for a, b in zip(cw, pv))
        coords = tuple(r)
        if len(coords) != self.rank:
            raise DatumMismatch(f"root vector {coords} has wrong length")
        return sum(
            cw[k] * sum(self.pairing_matrix[k][j] * coords[j] for j in range(self.rank))
            for k in range(self.lattice_dim)
        )

    def pair_index(self, cw: Coweight, idx: int) -> int:
        pv = self.root_pairing[idx]
        return sum(a * b for a, b in zip(cw, pv))

    def simple_pairings(self, cw: Sequence[int]) -> tuple[int, ...]:
        """(<cw, alpha_1>, ..., <cw, alpha_r>)."""
        cw = self.check_coweight(cw)
        return tuple(self.pair_index(cw, i) for i in range(self.rank))

    def zero(self) -> Coweight:
        return (0,) * self.lattice_dim

    def simple_coroot(self, i: int) -> Coweight:
        return self.coroot_matrix[i - 1]

    def coroot(self, r) -> Coweight:
        """beta^vee in X coordinates."""
        return self.coroot_x[self._root_idx(r)]

    def from_coroot_coords(self, c: Sequence[int]) -> Coweight:
        if len(c) != self.rank:
            raise DatumMismatch(f"{tuple(c)} is not a vector of {self.rank} coroot coordinates")
        return tuple(
            sum(c[i] * self.coroot_matrix[i][k] for i in range(self.rank))
            for k in range(self.lattice_dim)
        )

    def coroot_coords_rational(self, cw: Sequence[int]) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        """Split cw into (coroot coordinates of its semisimple part, central residual)."""
        cw = self.check_coweight(cw)
        n = self.rank
        p = [self.pair_index(cw, j) for j in range(n)]
        # p = c A  =>  c = p A^{-1}
        c = tuple(sum((p[j] * self._cartan_inv[j][i] for j in range(n)), Fraction(0)) for i in range(n))
        residual = tuple(
            cw[k] - sum((c[i] * self.coroot_matrix[i][k] for i in range(n)), Fraction(0))
            for k in range(self.lattice_dim)
        )
        return c, residual

    def coroot_coords(self, cw: Sequence[int]) -> tuple[int, ...] | None:
        """Coordinates of cw in the simple coroot basis, or None if cw is not in Q^vee."""
        c, residual = self.coroot_coords_rational(cw)
        if any(x != 0 for x in residual) or any(x.denominator != 1 for x in c):
            return None
        return tuple(int(x) for x in c)

    def omega_class(self, cw: Sequence[int]) -> tuple:
        """A hashable label of cw modulo the coroot lattice."""
        c, residual = self.coroot_coords_rational(cw)
        return tuple(x - (x.numerator // x.denominator) for x in c), residual

    def dominance_leq(self, g1: Sequence[int], g2: Sequence[int]) -> bool:
        """True iff g2 - g1 is a nonnegative integer combination of simple coroots."""
        g1, g2 = self.check_coweight(g1), self.check_coweight(g2)
        c = self.coroot_coords(tuple(b - a for a, b in zip(g1, g2)))
        return c is not None and all(x >= 0 for x in c)

    def is_dominant(self, cw: Sequence[int]) -> bool:
        return all(p >= 0 for p in self.simple_pairings(cw))

    def stabilizer_indices(self, cw: Sequence[int]) -> frozenset[int]:
        """I(cw) = {i : <cw, alpha_i> = 0}."""
        return frozenset(i + 1 for i, p in enumerate(self.simple_pairings(cw)) if p == 0)

    def is_central(self, cw: Sequence[int]) -> bool:
        return all(p == 0 for p in self.simple_pairings(cw))

    def reflect_coweight(self, i: int, cw: Coweight) -> Coweight:
        """s_i(cw) = cw - <cw, alpha_i> alpha_i^vee."""
        p = self.pair_index(cw, i - 1)
        if p == 0:
            return cw
        cor = self.coroot_matrix[i - 1]
        return tuple(a - p * b for a, b in zip(cw, cor))

    def coroot_pair(self, coroot_idx: int, root_idx: int) -> int:
        """<beta^vee, gamma> for two roots given by index."""
        cc = self.root_coroot_coords[coroot_idx]
        g = self.roots[root_idx].coords
        A = self.cartan_matrix
        return sum(cc[i] * A[i][j] * g[j] for i in range(self.rank) for j in range(self.rank) if cc[i] and g[j])

    def root_leq(self, b1: Sequence[int], b2: Sequence[int]) -> bool:
        """Root-poset order: b2 - b1 is a nonnegative combination of simple roots."""
        return all(y >= x for x, y in zip(b1, b2))

    def negate_index(self, idx: int) -> int:
        N = self.num_positive
        return idx + N if idx < N else idx - N


@lru_cache(maxsize=None)
def build_root_datum(spec: CartanSpec) -> RootDatum:
    """Build (and cache) the root datum for a spec."""
    if not isinstance(spec.rank, int) or spec.rank < 1:
        raise InvalidSpec(f"rank must be a positive integer, got {spec.rank!r}")
    if isinstance(spec.lattice, str) and spec.lattice not in _NAMED_LATTICES:
        raise InvalidSpec(f"unknown lattice {spec.lattice!r}")
    return RootDatum(spec)
