from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from ordpoly import constructions as C
from ordpoly import lattice as LC
from ordpoly.errors import DuplicateFacet, NotComparable, NotGraded

TRIANGLE = [(0, 1), (1, 2), (0, 2)]


def brute_flags(L, S):
    """Count chains by brute force over all tuples of faces with the right ranks."""
    by_rank = [[f for f, r in zip(L.faces, L.rank) if r == s] for s in S]

    def rec(i, prev):
        if i == len(S):
            return 1
        return sum(rec(i + 1, f) for f in by_rank[i] if prev & ~f == 0 and prev != f)

    return rec(0, 0)


def test_triangle():
    L = LC.build_face_lattice(TRIANGLE, 3)
    assert L.dim == 2
    assert LC.f_vector(L) == (3, 3)
    assert LC.is_eulerian(L)


def test_multiplex_3_4():
    L = LC.build_face_lattice([(0, 1, 2), (0, 2, 3), (0, 1, 3, 4), (1, 2, 4), (2, 3, 4)], 5)
    assert LC.f_vector(L) == (5, 8, 5)
    assert len(L) == 20


def test_duplicate_and_ungraded_inputs():
    with pytest.raises(DuplicateFacet):
        LC.build_face_lattice([(0, 1), (1, 0), (1, 2), (0, 2)], 3)
    # a triangle plus a dangling edge is not a polytope boundary
    with pytest.raises((NotGraded, ValueError)):
        LC.build_face_lattice([(0, 1), (1, 2), (0, 2), (2, 3), (0, 1, 2)], 4)


def test_known_f_vectors():
    assert LC.f_vector(C.multiplex(5, 9)) == (10, 31, 44, 31, 10)
    assert LC.f_vector(C.ordinary(5, 7, 9)) == (10, 40, 76, 70, 26)


def test_flag_vector_matches_direct_count_on_small_lattices():
    for L in (C.multiplex(3, 4), C.multiplex(4, 6), C.ordinary(5, 6, 7)):
        fl = LC.flag_vector(L)
        for S in LC.rank_subsets(L.dim):
            assert fl[S] == LC.count_flags(L, S)
        for S in [(0,), (0, 2), (1, 2), (0, 1, 2)]:
            assert fl[S] == brute_flags(L, S)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 5).flatmap(lambda d: st.tuples(st.just(d), st.integers(d, d + 4))))
def test_flag_vector_properties(dn):
    d, n = dn
    L = C.multiplex(d, n)
    fl = LC.flag_vector(L)
    f = LC.f_vector(L)
    assert fl[()] == 1
    for i in range(d):
        assert fl[(i,)] == f[i]
    # Euler relation on the f-vector
    assert sum((-1) ** i * x for i, x in enumerate(f)) == 1 - (-1) ** d
    # each edge has two vertices, each facet-ridge pair is counted from both facets
    assert fl[(0, 1)] == 2 * f[1]
    assert fl[(d - 2, d - 1)] == 2 * f[d - 2]


def test_eulerian_detects_deleted_edge():
    square = C.construct(C.PolytopeSpec("polygon", 2, 3))
    edge = next(i for i, r in enumerate(square.rank) if r == 1)
    P = square.subposet([i for i in range(len(square)) if i != edge])
    assert not LC.is_eulerian(P)


def test_all_small_multiplexes_are_eulerian():
    for d in range(2, 6):
        for n in range(d, d + 4):
            assert LC.is_eulerian(C.multiplex(d, n)), (d, n)


def test_toric_h_values():
    for d in range(2, 7):
        assert LC.toric_h(C.construct(C.PolytopeSpec("simplex", d, d))) == (1,) * (d + 1)
    assert LC.toric_h(C.multiplex(5, 9)) == (1, 5, 5, 5, 5, 1)
    assert LC.toric_h(C.ordinary(5, 7, 9)) == (1, 5, 12, 12, 5, 1)
    # the square: h = (1, 2, 1)
    assert LC.toric_h(C.construct(C.PolytopeSpec("polygon", 2, 3))) == (1, 2, 1)


def test_elementary():
    assert LC.is_elementary(C.multiplex(5, 9))
    assert not LC.is_elementary(C.ordinary(5, 7, 9))
    assert LC.is_elementary(C.construct(C.PolytopeSpec("simplex", 5, 5)))
    assert LC.elementary_beta_of(C.ordinary(5, 7, 9)) == 7


def test_interval_whole_and_vertex_figure():
    L = C.multiplex(3, 4)
    whole = LC.interval(L, (), range(5))
    assert LC.poset_isomorphic(whole, L)[0]
    fig = LC.interval(L, (0,), range(5))
    # bottom sits at rank -1, so a polygon lattice has length 2
    assert fig.length == 2
    assert LC.poset_isomorphic(fig, C.multiplex(2, 2))[0]
    with pytest.raises(NotComparable):
        LC.interval(L, (1, 3), range(5))


def test_isomorphism():
    L = C.multiplex(4, 6)
    ok, phi = LC.poset_isomorphic(L, L)
    assert ok and sorted(phi) == list(range(len(L)))
    Q, nv = C.pyramid_over_polygon(5, 1)
    assert LC.poset_isomorphic(C.multiplex(5, 6), LC.build_face_lattice(Q, nv))[0]
    tri = LC.build_face_lattice(TRIANGLE, 3)
    sq = C.construct(C.PolytopeSpec("polygon", 2, 3))
    assert not LC.poset_isomorphic(tri, sq)[0]
    assert not LC.poset_isomorphic(C.ordinary(5, 6, 8), C.ordinary(5, 7, 8))[0]


def test_isomorphism_map_preserves_covers():
    A = C.multiplex(4, 5)
    B = C.construct(C.PolytopeSpec("pyramid", 4, 5))
    ok, phi = LC.poset_isomorphic(A, B)
    assert ok
    for i, cs in enumerate(A.lower):
        assert sorted(phi[c] for c in cs) == sorted(B.lower[phi[i]])


def test_same_flag_vector_different_lattice():
    A = C.multiplex(4, 7)
    B = C.construct(C.PolytopeSpec("pyramid", 4, 7))
    assert LC.flag_vector(A) == LC.flag_vector(B)
    assert not LC.poset_isomorphic(A, B)[0]


def test_self_duality():
    for d in range(2, 6):
        ok, phi = LC.self_duality_witness(C.multiplex(d, d))
        assert ok
    ok, phi = LC.self_duality_witness(C.multiplex(3, 4))
    assert ok and len(phi) == 20
    assert LC.self_duality_witness(C.multiplex(5, 9))[0]


def test_closure_and_face_membership():
    L = C.ordinary(5, 7, 9)
    assert L.is_face((0, 1, 7, 8))
    assert not L.is_face((0, 1, 7))
    # x_0 and x_9 share no two-face
    assert L.rank[L.index[L.closure((0, 9))]] >= 3
    for f in L.faces:
        assert L.closure(LC.members(f)) == f


def test_bit_helpers():
    assert LC.to_mask((0, 3)) == 9
    assert LC.members(9) == (0, 3)
    assert list(LC.iter_bits(0b1010)) == [1, 3]
    for s in combinations(range(6), 3):
        assert LC.members(LC.to_mask(s)) == s
