from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from ordpoly import constructions as C
from ordpoly import formulas as F
from ordpoly import lattice as LC
from ordpoly.document import appendix_text, parse_appendix
from ordpoly.errors import BadParams, NotSubset, OddSize


def sets(masks):
    return sorted(LC.members(m) for m in masks)


def words(masks):
    return sorted("".join(map(str, LC.members(m))) for m in masks)


def test_multiplex_facets_small():
    assert words(C.multiplex_facets(3, 3)) == ["012", "013", "023", "123"]
    assert words(C.multiplex_facets(3, 4)) == ["012", "0134", "023", "124", "234"]


def test_multiplex_facets_indexed_by_vertex():
    fs = C.multiplex_facets(5, 9)
    assert len(fs) == 10 == len(set(fs))
    for i, f in enumerate(fs):
        # clamping only reaches x_i when i is within d-1 of an end
        if 4 <= i <= 5:
            assert not f >> i & 1
        assert f.bit_count() <= 8


def test_paired_subsets():
    assert C.paired_subsets(range(3, 6), 2) == [(3, 4), (4, 5)]
    assert C.paired_subsets(range(2, 7), 4) == [(2, 3, 4, 5), (2, 3, 5, 6), (3, 4, 5, 6)]
    assert C.paired_subsets(range(0, 9), 0) == [()]
    assert C.paired_subsets(range(0, 1), 2) == []
    with pytest.raises(OddSize):
        C.paired_subsets(range(5), 3)


@given(st.integers(0, 9), st.integers(0, 8).map(lambda x: 2 * (x // 2)))
def test_paired_subsets_are_unions_of_adjacent_pairs(length, size):
    for Y in C.paired_subsets(range(length), size):
        assert len(Y) == size
        rest = list(Y)
        while rest:
            assert rest[1] == rest[0] + 1
            rest = rest[2:]


def test_ordinary_facets_reproduce_listing():
    listed = parse_appendix(appendix_text())
    got = sets(C.ordinary_facets(5, 7, 9))
    assert got == sorted(listed.faces_by_dim[4])
    assert len(got) == 26
    assert (0, 1, 2, 3, 7, 8, 9) in got
    assert (0, 1, 2, 6, 7, 8, 9) in got
    assert (0, 1, 3, 4, 7, 8) in got


def test_ordinary_with_k_equal_d_is_multiplex():
    for n in range(5, 10):
        assert sets(C.ordinary_facets(5, 5, n)) == sets(C.multiplex_facets(5, n))


def gale_evenness(facet, n):
    """Gale's evenness condition for a d-subset of 0..n, checked directly."""
    outside = [v for v in range(n + 1) if v not in facet]
    for a, b in combinations(outside, 2):
        if sum(1 for v in facet if a < v < b) % 2:
            return False
    return True


@pytest.mark.parametrize("d,n", [(5, 5), (5, 6), (5, 8), (7, 7), (7, 9)])
def test_cyclic_facets_satisfy_gale_evenness(d, n):
    fs = C.ordinary_facets(d, n, n)
    # cyclic: facets are exactly the Gale-even d-subsets
    expected = [S for S in combinations(range(n + 1), d) if gale_evenness(S, n)]
    assert sets(fs) == sorted(expected)


@pytest.mark.parametrize("d,k,n", [(5, 6, 9), (5, 7, 9), (5, 8, 11), (7, 8, 10), (7, 9, 11)])
def test_ordinary_facet_count(d, k, n):
    assert len(C.ordinary_facets(d, k, n)) == F.dinh_f(d, k, n, d - 1)


def test_polygons_and_pyramids():
    assert words(C.polygon_lattice_facets(3)) == ["01", "02", "12"]
    assert words(C.polygon_lattice_facets(4)) == ["01", "03", "12", "23"]
    hexagon = LC.build_face_lattice(C.polygon_lattice_facets(6), 6)
    assert LC.f_vector(hexagon) == (6, 6)
    tri = LC.build_face_lattice(C.polygon_lattice_facets(3), 3)
    tet = C.pyramid(tri)
    assert LC.f_vector(tet) == (4, 6, 4)
    sq = LC.build_face_lattice(C.polygon_lattice_facets(4), 4)
    P = C.pyramid(sq)
    assert LC.f_vector(P) == (5, 8, 5)
    assert LC.poset_isomorphic(P, C.multiplex(3, 4))[0]


def test_gale_subsets():
    assert C.is_gale_subset((), 5)
    assert C.is_gale_subset((2, 3), 5)
    assert not C.is_gale_subset((2,), 5)
    assert C.is_gale_subset((1, 2), [0, 1, 2, 5, 7])
    with pytest.raises(NotSubset):
        C.is_gale_subset((9,), 5)


def test_gale_polytopes():
    assert C.is_gale_polytope(C.construct(C.PolytopeSpec("simplex", 4, 4)))
    assert C.is_gale_polytope(C.ordinary(5, 7, 9))
    # odd dimension: always Gale; even dimension: only the simplex
    assert C.is_gale_polytope(C.multiplex(5, 9))
    assert not C.is_gale_polytope(C.multiplex(4, 7))
    assert C.is_gale_polytope(C.multiplex(4, 4))


def test_facets_of_ordinary_polytopes_are_multiplexes():
    L = C.ordinary(5, 7, 9)
    for f in L.facets:
        assert C.face_is_induced_multiplex(L, f)
        assert 5 <= f.bit_count() <= 8


def test_spec_validation():
    with pytest.raises(BadParams):
        C.PolytopeSpec("ordinary", 4, 9, 7)
    with pytest.raises(BadParams):
        C.PolytopeSpec("ordinary", 5, 9)
    with pytest.raises(BadParams):
        C.PolytopeSpec("multiplex", 5, 4)
    with pytest.raises(BadParams):
        C.PolytopeSpec("cube", 3, 7)
    with pytest.raises(BadParams):
        C.ordinary_facets(5, 8, 7)
    assert str(C.PolytopeSpec("ordinary", 5, 9, 7)) == "P^{5,7,9}"
    assert C.PolytopeSpec("pyramid", 5, 9).m == 4


def test_constructed_lattices_match_f_formulas():
    for d in range(2, 6):
        for n in range(d, d + 4):
            assert LC.f_vector(C.multiplex(d, n)) == F.multiplex_f_vector(d, n)
