"""Brute-force reference implementations used only by the tests.

Each one recomputes a library quantity from its definition, by a route that
shares no code with the library beyond group multiplication.
"""

import itertools
from collections import deque

from localmodels.root_datum import CartanSpec, build_root_datum

C2_EPS = CartanSpec("C", 2, ((1, 0), (0, 1)))  # X = Z^2 in e_1, e_2 coordinates


def datum(family, rank, lattice="adjoint"):
    return build_root_datum(CartanSpec(family, rank, lattice))


def closed_root_set(cartan):
    """All roots, as simple-root coordinate tuples, by closing the simple roots under reflections."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        v = queue.popleft()
        for i in range(n):
            p = sum(cartan[i][j] * v[j] for j in range(n))
            u = tuple(v[j] - (p if j == i else 0) for j in range(n))
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return seen


def subword_products(group, word, tail=None):
    """Products of all subwords of ``word`` (optionally times ``tail``)."""
    out = set()
    for mask in itertools.product((0, 1), repeat=len(word)):
        w = group.from_word([i for i, keep in zip(word, mask) if keep])
        out.add(w if tail is None else w * tail)
    return out


def finite_bruhat_leq(x, y):
    return x in subword_products(x.group, y.word)


def affine_lower_set(y):
    word, tau = y.reduced_word()
    return subword_products(y.group, word, tau)


def affine_length_by_window(w):
    """#positive affine roots made negative, over |k| <= max|<lam, a>| + 1."""
    rd = w.group.datum
    N = rd.num_positive
    bound = max([abs(rd.pair_index(w.translation, a)) for a in range(2 * N)] + [0]) + 1
    count = 0
    for idx in range(2 * N):
        for k in range(-bound, bound + 1):
            if k < (0 if idx < N else 1):
                continue
            img, k2 = w.act((idx, k))
            if k2 < (0 if img < N else 1):
                count += 1
    return count


def qbg_edges(W):
    """Edges (x, y, weight) of the quantum Bruhat graph, weights as coroot-coordinate tuples."""
    rd = W.datum
    zero = (0,) * rd.rank
    edges = []
    for x in W.elements():
        for b in range(rd.num_positive):
            y = x * W.reflection(b)
            cor = rd.root_coroot_coords[b]
            height = sum(cor)
            if y.length == x.length + 1:
                edges.append((x, y, zero))
            elif y.length == x.length + 1 - 2 * height:
                edges.append((x, y, cor))
    return edges


def qbg_weight_by_bellman(W, x, y):
    """(distance, weight) of a shortest x -> y path, computed by layered relaxation."""
    edges = qbg_edges(W)
    best = {x: (0, (0,) * W.rank)}
    changed = True
    while changed:
        changed = False
        for a, b, wt in edges:
            if a in best:
                d = best[a][0] + 1
                if b not in best or d < best[b][0]:
                    best[b] = (d, tuple(p + q for p, q in zip(best[a][1], wt)))
                    changed = True
    return best[y]


def demazure_by_max(u, v):
    W = u.group
    below_u = [a for a in W.elements() if finite_bruhat_leq(a, u)]
    below_v = [b for b in W.elements() if finite_bruhat_leq(b, v)]
    prods = {a * b for a in below_u for b in below_v}
    return max(prods, key=lambda w: w.length)


def in_acute_cone_by_inversions(w, z):
    """The walls between the base alcove and w(a) are the H_(b,k) for (b,k) an
    inversion of w^-1; w(a) lies on their negative side, which must face z(C+)."""
    zinv = z.inverse()
    N = w.group.datum.num_positive
    return all(zinv.perm[idx] >= N for idx, _ in w.inverse().inversions())
