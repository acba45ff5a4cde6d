from itertools import combinations
from math import ceil

import numpy as np
import pytest
from scipy.spatial import ConvexHull

from ordpoly import constructions as C
from ordpoly import formulas as F
from ordpoly import graphs as G
from ordpoly import lattice as LC
from ordpoly.errors import CyclicCase, Disconnected, NotEdge


def spec(kind, d, n, k=None):
    return C.PolytopeSpec(kind, d, n, k)


def test_multiplex_edges():
    K = G.multiplex_edges(5, 5)
    assert len(K.edges()) == 15
    assert len(G.multiplex_edges(5, 9).edges()) == 31
    g = G.multiplex_edges(3, 4)
    assert len(g.edges()) == 8
    assert g.has_edge(1, 4) and g.has_edge(0, 2) and not g.has_edge(1, 3)


def test_ordinary_edges():
    g = G.ordinary_edges(7, 9)
    assert len(g.edges()) == 40
    assert g.has_edge(2, 9) and not g.has_edge(1, 7)
    assert len(G.ordinary_edges(8, 8).edges()) == 36


@pytest.mark.parametrize("d,k,n", [(5, 5, 8), (5, 6, 9), (5, 7, 9), (7, 8, 11), (7, 7, 7)])
def test_edge_generator_matches_lattice(d, k, n):
    assert G.ordinary_edges(k, n) == G.graph_of(C.ordinary(d, k, n))


def test_proper_coloring():
    g = G.ordinary_edges(7, 9)
    col = G.proper_coloring(7, 9)
    assert col == [6, 1, 2, 3, 4, 5, 0, 1, 2, 6]
    assert G.is_proper(g, col)
    assert G.proper_coloring(5, 6) == [4, 1, 2, 3, 0, 1, 4]
    assert G.is_proper(G.multiplex_edges(5, 6), G.proper_coloring(5, 6))
    for d in (4, 6):
        for n in range(d + 1, d + 6):
            assert G.is_proper(G.multiplex_edges(d, n), G.proper_coloring(d, n))
    with pytest.raises(CyclicCase):
        G.proper_coloring(7, 7)


def test_chromatic_number():
    s = spec("ordinary", 5, 9, 7)
    chi, col, clique = G.chromatic_number(G.ordinary_edges(7, 9), s)
    assert chi == 7 and len(clique) == 7
    assert G.chromatic_number(G.multiplex_edges(5, 5), spec("multiplex", 5, 5))[0] == 6
    assert G.chromatic_number(G.multiplex_edges(5, 9), spec("multiplex", 5, 9))[0] == 5
    # pentagon: the polygon case needs three colours
    assert G.chromatic_number(G.multiplex_edges(2, 4), spec("multiplex", 2, 4))[0] == 3
    assert G.exact_chromatic_number(G.multiplex_edges(5, 9))[0] == 5


def test_hamiltonian_cycles():
    assert G.hamiltonian_cycle(9, G.ordinary_edges(7, 9)) == [0, 2, 4, 6, 8, 9, 7, 5, 3, 1, 0]
    assert G.hamiltonian_cycle(8, G.multiplex_edges(5, 8)) == [0, 2, 4, 6, 8, 7, 5, 3, 1, 0]
    G.check_cycle(G.multiplex_edges(5, 5), G.hamiltonian_cycle(5))
    g = G.multiplex_edges(3, 6)
    with pytest.raises(NotEdge):
        G.hamiltonian_cycle(6, g)
    seq = G.polytope_hamiltonian_cycle(g, 6)
    assert G.check_cycle(g, seq) == seq


def test_diameter():
    assert G.diameter(G.ordinary_edges(7, 9)) == 2
    assert G.diameter(G.multiplex_edges(5, 9)) == 2
    assert G.diameter(G.multiplex_edges(4, 4)) == 1
    for k in (5, 6, 7):
        for n in range(k, 4 * k + 2):
            assert G.diameter(G.ordinary_edges(k, n)) == ceil(n / k), (k, n)
    with pytest.raises(Disconnected):
        G.diameter(G.PolytopeGraph(3, [(0, 1)]))


def test_cliques():
    K3 = G.PolytopeGraph(3, [(0, 1), (1, 2), (0, 2)])
    cl = G.enumerate_cliques(K3)
    assert [len(c) for c in cl] == [1, 1, 1, 2, 2, 2, 3]
    assert G.maximal_cliques(K3) == [(0, 1, 2)]
    g = G.multiplex_edges(4, 6)
    assert (1, 3, 5) in G.enumerate_cliques(g, 3)
    assert C.multiplex(4, 6).is_face((1, 3, 5))


def test_maximal_cliques_against_brute_force():
    g = G.ordinary_edges(6, 10)
    brute = []
    for r in range(1, 11):
        for S in combinations(range(11), r):
            if all(g.has_edge(a, b) for a, b in combinations(S, 2)):
                brute.append(S)
    maximal = [S for S in brute if not any(set(S) < set(T) for T in brute)]
    assert sorted(G.maximal_cliques(g)) == sorted(maximal)
    assert G.enumerate_cliques(g) == sorted(brute, key=lambda c: (len(c), c))


def test_cliques_are_faces():
    assert G.cliques_are_faces(C.multiplex(5, 9)) == (True, None)
    ok, witness = G.cliques_are_faces(C.ordinary(5, 6, 8))
    assert not ok and witness is not None
    assert not C.ordinary(5, 6, 8).is_face(witness)


def test_two_faces():
    L = C.ordinary(5, 7, 9)
    quads = sorted(LC.members(q) for q in G.nontriangular_two_faces(L))
    assert quads == [(0, 1, 7, 8), (1, 2, 8, 9)]
    assert G.nontriangular_two_faces(C.multiplex(5, 5)) == []
    got = sorted(G.nontriangular_two_faces(C.multiplex(5, 9)))
    assert got == sorted(G.predicted_quadrilaterals(5, 9))
    assert G.quadrilateral_diagonals(LC.to_mask((0, 1, 7, 8))) == ((0, 8), (1, 7))


def test_weak_neighborliness():
    for d in range(2, 7):
        assert G.is_weakly_neighborly(C.multiplex(d, d + 1)) == (True, None)
    assert G.is_weakly_neighborly(C.ordinary(5, 6, 7)) == (False, (1, 3, 5))
    L = C.ordinary(5, 7, 9)
    assert G.violates_weak_neighborliness(L, (0, 9))
    assert not G.is_weakly_neighborly(L)[0]


def moment_curve_hull_facets(d, nv):
    pts = np.array([[t ** j for j in range(1, d + 1)] for t in range(nv)], dtype=float)
    hull = ConvexHull(pts)
    return {frozenset(int(v) for v in s) for s in hull.simplices}


@pytest.mark.parametrize("d,nv", [(5, 7), (5, 8), (7, 9)])
def test_odd_cyclic_polytopes_are_not_weakly_neighborly(d, nv):
    """Independent geometric check: {1,3,..,2m+1} lies in no facet of the realised polytope."""
    m = (d - 1) // 2
    facets = moment_curve_hull_facets(d, nv)
    witness = frozenset(range(1, 2 * m + 2, 2))
    assert not any(witness <= f for f in facets)
    L = C.ordinary(d, nv - 1, nv - 1)
    assert {frozenset(LC.members(f)) for f in L.facets} == facets
    assert not G.is_weakly_neighborly(L)[0]


def test_to_dot():
    text = G.to_dot(G.multiplex_edges(2, 2), "tri")
    assert text.splitlines() == ["graph tri {", "  0;", "  1;", "  2;",
                                 "  0 -- 1;", "  0 -- 2;", "  1 -- 2;", "}"]


def test_clique_counts_match_simplex_faces():
    for d in range(3, 6):
        for n in range(d + 1, d + 4):
            cl = G.enumerate_cliques(G.multiplex_edges(d, n), d)
            for i in range(d):
                assert sum(len(c) == i + 1 for c in cl) == F.simplex_face_count(d, n, i)
