"""Face lattices as graded posets over vertex bitsets.

A face is identified with its vertex set, stored as a Python ``int`` used
as a bitset (bit ``i`` set iff vertex ``i`` belongs to the face).  Lattices
are built by closing the facet list under intersection; every order-theoretic
query afterwards works on element indices.

Ranks follow the dimension convention: the empty face has rank -1, vertices
rank 0 and the polytope itself rank ``d``.
"""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from ordpoly.errors import (
    DuplicateFacet,
    NotAntiIso,
    NotComparable,
    NotEulerian,
    NotGraded,
)


# --------------------------------------------------------------------------
# vertex sets

def to_mask(vertices):
    """Return the bitset for an iterable of vertex indices (ints pass through)."""
    if isinstance(vertices, (int, np.integer)):
        return int(vertices)
    mask = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"negative vertex index {v}")
        mask |= 1 << v
    return mask


def members(mask):
    """Sorted tuple of the vertex indices in ``mask``."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _face_key(mask):
    return members(mask)


# --------------------------------------------------------------------------
# graded posets

class GradedPoset:
    """A finite poset with unique bottom and top, given by its Hasse diagram.

    Elements are ``0 .. N-1``, sorted by rank, so ``0`` is the bottom and
    ``N-1`` the top.  ``rank[i]`` is the longest-chain length from the bottom
    minus one.  ``labels`` carries whatever identifies an element outside the
    poset (vertex bitsets for face lattices).
    """

    def __init__(self, rank, lower, labels=None):
        self.rank = list(rank)
        self.lower = [tuple(c) for c in lower]
        n = len(self.rank)
        upper = [[] for _ in range(n)]
        for i, cs in enumerate(self.lower):
            for c in cs:
                upper[c].append(i)
        self.upper = [tuple(u) for u in upper]
        self.labels = list(labels) if labels is not None else list(range(n))
        self._below = None
        self._above = None

    def __len__(self):
        return len(self.rank)

    @property
    def bottom(self):
        return 0

    @property
    def top(self):
        return len(self.rank) - 1

    @property
    def length(self):
        """Rank of the top element (the polytope dimension for a face lattice)."""
        return self.rank[-1]

    def rank_sizes(self):
        return Counter(self.rank)

    def below(self, i):
        """Bitset over element indices of everything strictly below ``i``."""
        if self._below is None:
            below = [0] * len(self)
            for j in range(len(self)):
                m = 0
                for c in self.lower[j]:
                    m |= below[c] | (1 << c)
                below[j] = m
            self._below = below
        return self._below[i]

    def above(self, i):
        if self._above is None:
            above = [0] * len(self)
            for j in reversed(range(len(self))):
                m = 0
                for c in self.upper[j]:
                    m |= above[c] | (1 << c)
                above[j] = m
            self._above = above
        return self._above[i]

    def le(self, a, b):
        return a == b or bool(self.below(b) >> a & 1)

    def is_graded(self):
        """True iff every cover relation raises the rank by exactly one."""
        return all(self.rank[c] == self.rank[i] - 1
                   for i in range(len(self)) for c in self.lower[i])

    def subposet(self, keep):
        """Induced subposet on the element indices in ``keep``.

        Ranks are recomputed by longest chains; the result need not be graded.
        The kept set must contain the bottom and the top.
        """
        keep = sorted(set(keep))
        if keep[0] != self.bottom or keep[-1] != self.top:
            raise ValueError("subposet must keep the bottom and the top")
        keep_mask = 0
        for k in keep:
            keep_mask |= 1 << k
        lower = {}
        for k in keep:
            strictly = self.below(k) & keep_mask
            covers = []
            for c in iter_bits(strictly):
                # c is a cover iff nothing kept lies strictly between c and k
                if not (strictly & self.above(c)):
                    covers.append(c)
            lower[k] = covers
        rank = {}
        for k in keep:
            rank[k] = max((rank[c] + 1 for c in lower[k]), default=-1)
        order = sorted(keep, key=lambda k: (rank[k], k))
        new = {old: i for i, old in enumerate(order)}
        return GradedPoset(
            [rank[k] for k in order],
            [[new[c] for c in lower[k]] for k in order],
            [self.labels[k] for k in order],
        )

    def interval_indices(self, a, b):
        """Closed interval [a, b] as a poset with the bottom re-ranked to -1."""
        if not self.le(a, b):
            raise NotComparable(f"{self.labels[a]!r} is not below {self.labels[b]!r}")
        inside = (self.above(a) | (1 << a)) & (self.below(b) | (1 << b))
        idx = list(iter_bits(inside))
        idx.sort(key=lambda i: (self.rank[i], i))
        new = {old: i for i, old in enumerate(idx)}
        shift = self.rank[a] + 1
        return GradedPoset(
            [self.rank[i] - shift for i in idx],
            [[new[c] for c in self.lower[i] if c in new] for i in idx],
            [self.labels[i] for i in idx],
        )


class FaceLattice(GradedPoset):
    """Face lattice of a polytope with vertices ``0 .. n_vertices-1``.

    ``faces[i]`` is the vertex bitset of element ``i``.  Instances are
    immutable after construction.
    """

    def __init__(self, faces, rank, lower, n_vertices):
        super().__init__(rank, lower, labels=faces)
        self.faces = self.labels
        self.n_vertices = n_vertices
        self.index = {f: i for i, f in enumerate(self.faces)}

    @property
    def dim(self):
        return self.length

    def faces_of_dim(self, k):
        return [f for f, r in zip(self.faces, self.rank) if r == k]

    @property
    def facets(self):
        return self.faces_of_dim(self.dim - 1)

    def is_face(self, vertices):
        return to_mask(vertices) in self.index

    def closure(self, vertices):
        """Smallest face containing ``vertices`` (the top if no facet does)."""
        x = to_mask(vertices)
        out = self.faces[-1]
        for f in self.facets:
            if x & ~f == 0:
                out &= f
        return out

    def vertex_sets(self, k=None):
        faces = self.faces if k is None else self.faces_of_dim(k)
        return [members(f) for f in faces]

    def __repr__(self):
        return f"FaceLattice(dim={self.dim}, n_vertices={self.n_vertices}, f={f_vector(self)})"


def build_face_lattice(facets, n_vertices):
    """Close ``facets`` under intersection and grade the result.

    ``facets`` is a list of vertex sets (bitsets or iterables) over vertices
    ``0 .. n_vertices-1``.  Raises :class:`DuplicateFacet` on repeated facets
    and :class:`NotGraded` when the closure is not the face lattice of a
    polytope (unequal chain lengths or missing vertices).
    """
    masks = [to_mask(f) for f in facets]
    if not masks:
        raise ValueError("need at least one facet")
    full = (1 << n_vertices) - 1
    seen = set()
    for m in masks:
        if m in seen:
            raise DuplicateFacet(f"facet {members(m)} listed twice")
        seen.add(m)
        if m & ~full:
            raise ValueError(f"facet {members(m)} uses a vertex >= {n_vertices}")
        if m == full:
            raise ValueError("a facet cannot contain every vertex")
    for a, b in combinations(masks, 2):
        if a & b in (a, b):
            raise ValueError(f"facet {members(a & b)} is contained in another facet")

    faces = set(masks)
    faces.add(full)
    work = list(masks)
    while work:
        f = work.pop()
        for g in masks:
            h = f & g
            if h not in faces:
                faces.add(h)
                work.append(h)
    faces.add(0)

    # Maximal proper faces of F are the maximal sets among F & G, G a facet.
    lower = {0: ()}
    for f in faces:
        if f == 0:
            continue
        if f == full:
            cands = set(masks)
        else:
            cands = {f & g for g in masks if f & g != f}
        cands = sorted(cands, key=int.bit_count, reverse=True)
        covers = []
        for c in cands:
            if not any(c & ~k == 0 for k in covers):
                covers.append(c)
        lower[f] = covers

    rank = {}
    for f in sorted(faces, key=int.bit_count):
        rank[f] = max((rank[c] + 1 for c in lower[f]), default=-1)
    for f, cs in lower.items():
        for c in cs:
            if rank[c] != rank[f] - 1:
                raise NotGraded(
                    f"cover {members(c)} < {members(f)} skips a rank "
                    f"({rank[c]} -> {rank[f]})")
    points = [f for f in faces if rank[f] == 0]
    if sorted(points) != [1 << v for v in range(n_vertices)]:
        raise NotGraded("rank-0 faces are not exactly the singletons")

    order = sorted(faces, key=lambda f: (rank[f], _face_key(f)))
    pos = {f: i for i, f in enumerate(order)}
    return FaceLattice(
        order,
        [rank[f] for f in order],
        [sorted(pos[c] for c in lower[f]) for f in order],
        n_vertices,
    )


def lattice_from_faces(faces, n_vertices):
    """Rebuild a lattice from a complete list of proper faces (any order)."""
    masks = {to_mask(f) for f in faces}
    full = (1 << n_vertices) - 1
    masks.discard(full)
    masks.discard(0)
    if not masks:
        raise ValueError("no proper faces given")
    facets = [m for m in masks if not any(m != o and m & ~o == 0 for o in masks)]
    lat = build_face_lattice(facets, n_vertices)
    got = set(lat.faces) - {0, full}
    if got != masks:
        raise NotGraded("face list is not closed under intersection")
    return lat


# --------------------------------------------------------------------------
# counting

def f_vector(L):
    """Numbers of faces of dimension ``0 .. d-1``."""
    sizes = L.rank_sizes()
    return tuple(sizes.get(i, 0) for i in range(L.length))


@dataclass(frozen=True)
class FlagVector:
    """Counts ``f_S`` of chains of faces with dimension set ``S``."""

    d: int
    counts: dict

    def __getitem__(self, S):
        return self.counts[frozenset(S)]

    def __eq__(self, other):
        if not isinstance(other, FlagVector):
            return NotImplemented
        return self.d == other.d and self.counts == other.counts

    def __hash__(self):
        return hash((self.d, frozenset(self.counts.items())))

    def items(self):
        """(sorted rank tuple, count) pairs in a fixed order."""
        return sorted(((tuple(sorted(s)), c) for s, c in self.counts.items()),
                      key=lambda t: (len(t[0]), t[0]))


def rank_subsets(d):
    """All subsets of ``{0, .., d-1}`` as sorted tuples."""
    return [s for r in range(d + 1) for s in combinations(range(d), r)]


def flag_vector(L):
    """Full flag vector of a graded poset, all ``2**d`` entries.

    Chains are counted by dynamic programming: ``chains[G, S]`` is the number
    of chains of proper nonempty elements ending at ``G`` whose rank set is
    the bitmask ``S``.
    """
    d = L.length
    width = 1 << d
    chains = np.zeros((len(L), width), dtype=np.int64)
    proper = [i for i in range(len(L)) if 0 <= L.rank[i] < d]
    for g in proper:
        bit = 1 << L.rank[g]
        below = [i for i in iter_bits(L.below(g)) if L.rank[i] >= 0]
        base = chains[below, :bit].sum(axis=0) if below else np.zeros(bit, np.int64)
        base[0] += 1
        chains[g, bit:2 * bit] = base
    total = chains.sum(axis=0)
    total[0] = 1
    counts = {}
    for S in range(width):
        key = frozenset(i for i in range(d) if S >> i & 1)
        counts[key] = int(total[S])
    return FlagVector(d, counts)


def count_flags(L, S):
    """Direct count of chains with rank set ``S`` using rank-to-rank containment."""
    S = sorted(S)
    if not S:
        return 1
    ways = {i: 1 for i in range(len(L)) if L.rank[i] == S[0]}
    for s in S[1:]:
        nxt = {}
        for g in range(len(L)):
            if L.rank[g] != s:
                continue
            below = L.below(g)
            total = sum(w for f, w in ways.items() if below >> f & 1)
            if total:
                nxt[g] = total
        ways = nxt
    return sum(ways.values())


# --------------------------------------------------------------------------
# Eulerian posets and toric h

def eulerian_violation(L):
    """First interval ``(F, G)``, ``F < G``, with unbalanced rank parities, or ``None``."""
    if not L.is_graded():
        return (L.bottom, L.top)
    even = 0
    for i, r in enumerate(L.rank):
        if r % 2 == 0:
            even |= 1 << i
    for g in range(len(L)):
        down = L.below(g) | (1 << g)
        for f in iter_bits(L.below(g)):
            inside = down & (L.above(f) | (1 << f))
            n_even = (inside & even).bit_count()
            if 2 * n_even != inside.bit_count():
                return (f, g)
    return None


def is_eulerian(L):
    return eulerian_violation(L) is None


def _poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _x_minus_one_pow(k):
    return [comb(k, i) * (-1) ** (k - i) for i in range(k + 1)]


def _g_from_h(h, degree):
    g = [h[0]]
    for i in range(1, degree // 2 + 1):
        g.append(h[i] - h[i - 1])
    return g


def toric_h(L, check=True):
    """Toric h-vector ``(h_0, .., h_d)`` of an Eulerian poset via the g/h recursion.

    ``h([0,G])(x) = sum_{H < G} g([0,H])(x) * (x-1)**(rank G - 1 - rank H)``
    with ``g`` of the one-element poset equal to 1.  Index ``i`` of the result
    is the coefficient of ``x**i``; the simplex gives all ones.
    """
    if check and not is_eulerian(L):
        raise NotEulerian("toric h needs an Eulerian poset")
    pows = {}

    def xm1(k):
        if k not in pows:
            pows[k] = _x_minus_one_pow(k)
        return pows[k]

    g = [None] * len(L)
    g[L.bottom] = [1]
    h = None
    for el in range(1, len(L)):
        r = L.rank[el]
        acc = [0]
        for sub in iter_bits(L.below(el)):
            term = xm1(r - 1 - L.rank[sub])
            gs = g[sub]
            prod = [0] * (len(gs) + len(term) - 1)
            for i, a in enumerate(gs):
                if a:
                    for j, b in enumerate(term):
                        prod[i + j] += a * b
            acc = _poly_add(acc, prod)
        acc = acc + [0] * (r + 1 - len(acc))
        if el == L.top:
            h = acc[: r + 1]
        else:
            g[el] = _g_from_h(acc, r)
    return tuple(h)


def elementary_beta_of(L, fl=None):
    """``f02 - 3 f2 + f1 - d f0 + C(d+1, 2)`` read off the flag vector."""
    d = L.length
    fl = fl or flag_vector(L)
    return (fl[{0, 2}] - 3 * fl[{2}] + fl[{1}] - d * fl[{0}] + comb(d + 1, 2))


def is_elementary(L, fl=None):
    """True iff the flag-vector expression for ``h_1 == h_2`` vanishes (needs d >= 3)."""
    if L.length < 3:
        raise ValueError("elementariness is defined here for d >= 3")
    return elementary_beta_of(L, fl) == 0


# --------------------------------------------------------------------------
# intervals, isomorphism, duality

def interval(L, bottom, top):
    """Closed interval ``[bottom, top]`` of a face lattice, bottom at rank -1."""
    try:
        a = L.index[to_mask(bottom)]
        b = L.index[to_mask(top)]
    except KeyError as exc:
        raise NotComparable(f"not a face: {members(exc.args[0])}") from None
    return L.interval_indices(a, b)


def _refine_colors(posets):
    """Colour refinement on the Hasse diagrams of several posets at once."""
    colors = [[(r,) for r in P.rank] for P in posets]
    n_classes = len({c for cs in colors for c in cs})
    while True:
        sigs = []
        for P, cs in zip(posets, colors):
            sigs.append([
                (cs[i],
                 tuple(sorted(cs[c] for c in P.lower[i])),
                 tuple(sorted(cs[c] for c in P.upper[i])))
                for i in range(len(P))
            ])
        table = {s: k for k, s in enumerate(sorted({s for ss in sigs for s in ss}))}
        colors = [[(table[s],) for s in ss] for ss in sigs]
        new_classes = len(table)
        if new_classes == n_classes:
            return [[c[0] for c in cs] for cs in colors]
        n_classes = new_classes


def _search_order(P, color_size):
    """Elements ordered so each one follows all its lower covers, constrained ones first."""
    placed = [False] * len(P)
    missing = [len(P.lower[i]) for i in range(len(P))]
    ready = {i for i in range(len(P)) if missing[i] == 0}
    order = []
    while ready:
        nxt = max(ready, key=lambda i: (len(P.lower[i]), -color_size[i], -i))
        ready.discard(nxt)
        placed[nxt] = True
        order.append(nxt)
        for u in P.upper[nxt]:
            missing[u] -= 1
            if missing[u] == 0:
                ready.add(u)
    return order


def find_isomorphism(A, B):
    """Rank-preserving order isomorphism ``A -> B`` as a dict, or ``None``.

    Exact: colour refinement prunes, backtracking over cover-compatible
    assignments decides.
    """
    if len(A) != len(B) or sorted(A.rank) != sorted(B.rank):
        return None
    ca, cb = _refine_colors([A, B])
    if Counter(ca) != Counter(cb):
        return None
    class_size = Counter(ca)
    order = _search_order(A, [class_size[c] for c in ca])
    by_color = {}
    for j, c in enumerate(cb):
        by_color.setdefault(c, []).append(j)

    fwd = {}
    used = set()

    def candidates(a):
        lows = A.lower[a]
        if not lows:
            pool = [j for j in by_color.get(ca[a], ()) if not B.lower[j]]
        else:
            imgs = [fwd[c] for c in lows]
            pool = [j for j in B.upper[imgs[0]] if cb[j] == ca[a]]
            want = set(imgs)
            pool = [j for j in pool if set(B.lower[j]) == want]
        return [j for j in pool if j not in used]

    stack = [iter(candidates(order[0]))]
    while stack:
        depth = len(stack) - 1
        a = order[depth]
        if a in fwd:
            used.discard(fwd.pop(a))
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            continue
        fwd[a] = nxt
        used.add(nxt)
        if depth + 1 == len(order):
            return dict(fwd)
        stack.append(iter(candidates(order[depth + 1])))
    return None


def poset_isomorphic(A, B):
    """``(True, mapping)`` if ``A`` and ``B`` are isomorphic graded posets, else ``(False, None)``."""
    m = find_isomorphism(A, B)
    return (m is not None, m)


def self_duality_witness(L, facets=None):
    """Inclusion-reversing bijection ``G -> intersection of F_i over vertices i of G``.

    ``facets[i]`` is the facet paired with vertex ``i``; by default the
    multiplex facets for ``L.dim`` and ``L.n_vertices - 1``.  Returns
    ``(True, {face: dual face})``; raises :class:`NotAntiIso` if the map is
    not an anti-automorphism.
    """
    if facets is None:
        from ordpoly.constructions import multiplex_facets
        facets = multiplex_facets(L.dim, L.n_vertices - 1)
    facets = [to_mask(f) for f in facets]
    if len(facets) != L.n_vertices:
        raise NotAntiIso("need one facet per vertex")
    full = L.faces[-1]
    phi = {}
    for f in L.faces:
        img = full
        for v in iter_bits(f):
            img &= facets[v]
        if img not in L.index:
            raise NotAntiIso(f"image of {members(f)} is not a face")
        phi[f] = img
    if len(set(phi.values())) != len(L):
        raise NotAntiIso("map is not injective")
    d = L.dim
    for i, f in enumerate(L.faces):
        if L.rank[L.index[phi[f]]] != d - 1 - L.rank[i]:
            raise NotAntiIso(f"{members(f)} maps to the wrong rank")
        for c in L.lower[i]:
            lo, hi = phi[f], phi[L.faces[c]]
            # a cover F' < F must map to a cover phi(F) < phi(F')
            if L.index[lo] not in L.lower[L.index[hi]]:
                raise NotAntiIso(f"cover {members(L.faces[c])} < {members(f)} not reversed")
    return True, phi
