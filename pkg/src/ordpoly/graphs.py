"""Graphs (1-skeleta) of multiplexes and ordinary polytopes.

Adjacency is stored as one bitset per vertex.  Besides the closed-form edge
lists there are small exact routines (colouring, Hamiltonian cycles, BFS,
clique enumeration) used to check the family-specific certificates.
"""

from collections import deque
from itertools import combinations

from ordpoly.errors import BadParams, CyclicCase, Disconnected, NotEdge
from ordpoly.lattice import iter_bits, members, to_mask


class PolytopeGraph:
    """Simple undirected graph on vertices ``0 .. n_vertices-1``."""

    def __init__(self, n_vertices, edges=()):
        self.n_vertices = n_vertices
        self.adj = [0] * n_vertices
        for i, j in edges:
            self.add_edge(i, j)

    def add_edge(self, i, j):
        if i == j:
            raise ValueError(f"loop at {i}")
        self.adj[i] |= 1 << j
        self.adj[j] |= 1 << i

    def has_edge(self, i, j):
        return bool(self.adj[i] >> j & 1)

    def edges(self):
        return sorted((i, j) for i in range(self.n_vertices)
                      for j in iter_bits(self.adj[i]) if i < j)

    def edge_masks(self):
        return {(1 << i) | (1 << j) for i, j in self.edges()}

    def __eq__(self, other):
        return (isinstance(other, PolytopeGraph) and self.n_vertices == other.n_vertices
                and self.adj == other.adj)

    def __len__(self):
        return self.n_vertices

    def __repr__(self):
        return f"PolytopeGraph({self.n_vertices} vertices, {len(self.edges())} edges)"


def graph_of(L):
    """Graph formed by the rank-1 faces of a face lattice."""
    G = PolytopeGraph(L.n_vertices)
    for e in L.faces_of_dim(1):
        i, j = members(e)
        G.add_edge(i, j)
    return G


def _banded_edges(n, k):
    # pairs at distance <= k-2 or exactly k, plus {0, k-1} and {n-k+1, n}
    edges = {(i, j) for i in range(n + 1) for j in range(i + 1, min(n, i + k - 2) + 1)}
    edges |= {(i, i + k) for i in range(n - k + 1)}
    edges.add((0, k - 1))
    edges.add((n - k + 1, n))
    return PolytopeGraph(n + 1, edges)


def multiplex_edges(d, n):
    if not n >= d >= 2:
        raise BadParams(f"multiplex needs n >= d >= 2, got d={d} n={n}")
    return _banded_edges(n, d)


def ordinary_edges(k, n):
    """Graph of ``P^{d,k,n}``; it does not depend on ``d``."""
    if not n >= k >= 5:
        raise BadParams(f"need n >= k >= 5, got k={k} n={n}")
    return _banded_edges(n, k)


# --------------------------------------------------------------------------
# colouring

def is_proper(G, coloring):
    return all(coloring[i] != coloring[j] for i, j in G.edges())


def proper_coloring(k, n):
    """The ``k``-colouring ``x_0, x_n -> k-1`` and ``x_i -> i mod (k-1)`` otherwise."""
    if n == k:
        raise CyclicCase("n == k: the graph is complete and needs k+1 colours")
    if not n > k >= 2:
        raise BadParams(f"need n > k, got k={k} n={n}")
    return [k - 1 if i in (0, n) else i % (k - 1) for i in range(n + 1)]


def exact_coloring(G, n_colors):
    """A proper colouring with at most ``n_colors`` colours, or ``None``."""
    nv = G.n_vertices
    order = sorted(range(nv), key=lambda v: -G.adj[v].bit_count())
    color = [-1] * nv

    def rec(pos):
        if pos == nv:
            return True
        v = order[pos]
        taken = {color[u] for u in iter_bits(G.adj[v]) if color[u] >= 0}
        # first use of a new colour is symmetric: try only the smallest unused one
        highest = max(color) if pos else -1
        for c in range(min(n_colors, highest + 2)):
            if c not in taken:
                color[v] = c
                if rec(pos + 1):
                    return True
                color[v] = -1
        return False

    return list(color) if rec(0) else None


def exact_chromatic_number(G):
    """Chromatic number by exhaustive search; meant for small graphs."""
    for c in range(1, G.n_vertices + 1):
        col = exact_coloring(G, c)
        if col is not None:
            return c, col
    return 0, []


def chromatic_number(G, spec):
    """``(chi, colouring, clique)`` for a multiplex or ordinary graph.

    For ``n > k`` (``k = d`` for multiplexes) the modular colouring and the
    clique ``{0, .., k-1}`` pin ``chi = k``; for ``n == k`` the graph is
    complete.  When the modular colouring is not proper (2-dimensional
    multiplexes: polygons) the answer comes from exhaustive search and the
    clique is a largest clique found.
    """
    k = spec.k if spec.kind == "ordinary" else spec.d
    n = spec.n
    if n == k:
        clique = tuple(range(n + 1))
        return n + 1, list(range(n + 1)), clique
    coloring = proper_coloring(k, n)
    clique = tuple(range(k))
    if is_proper(G, coloring) and all(G.has_edge(i, j) for i, j in combinations(clique, 2)):
        return k, coloring, clique
    chi, coloring = exact_chromatic_number(G)
    best = max(enumerate_cliques(G, chi), key=len)
    return chi, coloring, best


# --------------------------------------------------------------------------
# Hamiltonian cycles

def zigzag_sequence(n):
    """``0, 2, 4, .., n or n-1, then back down the other parity, .., 3, 1, 0``."""
    if n < 2:
        raise BadParams("need n >= 2")
    evens = list(range(0, n + 1, 2))
    odds = list(range(1, n + 1, 2))
    return evens + odds[::-1] + [0]


def check_cycle(G, seq):
    if seq[0] != seq[-1] or sorted(seq[:-1]) != list(range(G.n_vertices)):
        raise NotEdge(f"{seq} does not visit every vertex exactly once")
    for a, b in zip(seq, seq[1:]):
        if not G.has_edge(a, b):
            raise NotEdge(f"{a}-{b} is not an edge")
    return seq


def hamiltonian_cycle(n, G=None):
    """The zigzag vertex sequence; validated against ``G`` when given."""
    seq = zigzag_sequence(n)
    if G is not None:
        check_cycle(G, seq)
    return seq


def find_hamiltonian_cycle(G):
    """Hamiltonian cycle by backtracking from vertex 0, or ``None``."""
    nv = G.n_vertices
    if nv < 3:
        return None
    path = [0]
    seen = 1

    def rec():
        nonlocal seen
        v = path[-1]
        if len(path) == nv:
            return G.has_edge(v, 0)
        for u in iter_bits(G.adj[v] & ~seen):
            path.append(u)
            seen |= 1 << u
            if rec():
                return True
            path.pop()
            seen &= ~(1 << u)
        return False

    return path + [0] if rec() else None


def polytope_hamiltonian_cycle(G, n):
    """Zigzag cycle when it fits the graph, otherwise a searched one."""
    try:
        return hamiltonian_cycle(n, G)
    except NotEdge:
        seq = find_hamiltonian_cycle(G)
        if seq is None:
            raise
        return seq


# --------------------------------------------------------------------------
# distances

def bfs_distances(G, source):
    dist = [-1] * G.n_vertices
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in iter_bits(G.adj[v]):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def diameter(G):
    best = 0
    for s in range(G.n_vertices):
        dist = bfs_distances(G, s)
        if min(dist) < 0:
            raise Disconnected(f"vertex {dist.index(-1)} unreachable from {s}")
        best = max(best, max(dist))
    return best


# --------------------------------------------------------------------------
# cliques

def maximal_cliques(G):
    """Maximal cliques by Bron-Kerbosch with pivoting, as sorted tuples."""
    out = []

    def bk(R, P, X):
        if not P and not X:
            out.append(members(R))
            return
        pivot = max(iter_bits(P | X), key=lambda u: (G.adj[u] & P).bit_count())
        for v in iter_bits(P & ~G.adj[pivot]):
            bk(R | (1 << v), P & G.adj[v], X & G.adj[v])
            P &= ~(1 << v)
            X |= 1 << v

    bk(0, (1 << G.n_vertices) - 1, 0)
    return sorted(out, key=lambda c: (len(c), c))


def enumerate_cliques(G, max_size=None):
    """All cliques with ``1 .. max_size`` vertices, ordered by size then lexicographically."""
    if max_size is None:
        max_size = G.n_vertices
    out = []

    def extend(clique, cands):
        out.append(tuple(clique))
        if len(clique) == max_size:
            return
        for v in iter_bits(cands):
            extend(clique + [v], cands & G.adj[v] & ~((2 << v) - 1))

    for v in range(G.n_vertices):
        if max_size >= 1:
            extend([v], G.adj[v] & ~((2 << v) - 1))
    return sorted(out, key=lambda c: (len(c), c))


def cliques_are_faces(L, G=None, max_size=None):
    """``(True, None)`` if every clique of the graph is a face of ``L``, else ``(False, clique)``."""
    if G is None:
        G = graph_of(L)
    if max_size is None:
        max_size = L.dim + 2
    for c in enumerate_cliques(G, max_size):
        if to_mask(c) not in L.index:
            return False, c
    return True, None


# --------------------------------------------------------------------------
# two-faces and neighbourliness

def nontriangular_two_faces(L):
    return [f for f in L.faces_of_dim(2) if f.bit_count() >= 4]


def predicted_quadrilaterals(k, n):
    return [to_mask((i, i + 1, i + k, i + k + 1)) for i in range(n - k)]


def quadrilateral_diagonals(quad):
    """The two diagonals ``{a, d}``, ``{b, c}`` of ``{a < b < c < d}`` in the family's vertex order."""
    a, b, c, d = members(quad)
    return (a, d), (b, c)


def is_weakly_neighborly(L):
    """``(True, None)`` or ``(False, S)`` with ``S`` a set of ``j+1`` vertices on no face of dimension ``<= 2j``.

    Sets are tried by size, then lexicographically.
    """
    d = L.dim
    j = 1
    while 2 * j < d:
        for S in combinations(range(L.n_vertices), j + 1):
            c = L.closure(S)
            if L.rank[L.index[c]] > 2 * j:
                return False, S
        j += 1
    return True, None


def violates_weak_neighborliness(L, S):
    """Whether the vertex set ``S`` alone witnesses failure of weak neighbourliness."""
    j = len(S) - 1
    return L.rank[L.index[L.closure(S)]] > 2 * j


# --------------------------------------------------------------------------
# export

def to_dot(G, name="G"):
    """Undirected DOT text, one edge per line in sorted order."""
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(G.n_vertices)]
    lines += [f"  {i} -- {j};" for i, j in G.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
