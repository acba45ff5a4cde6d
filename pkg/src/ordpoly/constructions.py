"""Facet lists for multiplexes, ordinary polytopes, polygons and pyramids.

Facets come back as vertex bitsets sorted lexicographically by their
vertex tuples, so output is reproducible.
"""

from dataclasses import dataclass

from ordpoly import formulas
from ordpoly.errors import BadParams, FacetCountMismatch, NotSubset, OddSize
from ordpoly.lattice import build_face_lattice, members, to_mask


KINDS = ("multiplex", "ordinary", "polygon", "pyramid", "simplex")


@dataclass(frozen=True)
class PolytopeSpec:
    """Names one member of a family.

    ``n`` is the largest vertex index (so there are ``n + 1`` vertices), except
    for ``polygon`` where the polygon has ``n + 1`` vertices as well.  For
    ``pyramid``, ``m`` selects the ``(m+3)``-gon base and ``d - 2`` apexes
    are added; ``n`` is then ``m + d``.
    """

    kind: str
    d: int
    n: int
    k: int | None = None

    def __post_init__(self):
        kind, d, n, k = self.kind, self.d, self.n, self.k
        if kind not in KINDS:
            raise BadParams(f"unknown kind {kind!r}")
        if kind == "multiplex" and not n >= d >= 2:
            raise BadParams(f"multiplex needs n >= d >= 2, got d={d} n={n}")
        if kind == "ordinary":
            if k is None:
                raise BadParams("ordinary polytope needs k")
            _check_ordinary(d, k, n)
        if kind == "polygon" and (d != 2 or n < 2):
            raise BadParams("polygon needs d=2 and at least 3 vertices")
        if kind == "pyramid" and not (d >= 2 and n >= d):
            raise BadParams("pyramid over polygon needs d >= 2 and m = n - d >= 0")
        if kind == "simplex" and (d < 2 or n != d):
            raise BadParams("simplex needs n == d >= 2")

    @property
    def m(self):
        """Base parameter of the pyramid family: the base is an (m+3)-gon."""
        return self.n - self.d

    def as_dict(self):
        out = {"kind": self.kind, "d": self.d, "n": self.n}
        if self.k is not None:
            out["k"] = self.k
        return out

    def key(self):
        return (self.kind, self.d, self.k or 0, self.n)

    def __str__(self):
        if self.kind == "ordinary":
            return f"P^{{{self.d},{self.k},{self.n}}}"
        if self.kind == "multiplex":
            return f"M^{{{self.d},{self.n}}}"
        if self.kind == "pyramid":
            return f"Q^{{{self.d},{self.m}}}"
        if self.kind == "polygon":
            return f"{self.n + 1}-gon"
        return f"T^{self.d}"


def _check_ordinary(d, k, n):
    if not (n >= k >= d >= 5 and d % 2 == 1):
        raise BadParams(f"ordinary polytope needs n >= k >= d = 2m+1 >= 5, got d={d} k={k} n={n}")


def _sorted_masks(masks):
    return sorted(set(masks), key=members)


def _clamp(i, n):
    return 0 if i < 0 else n if i > n else i


def multiplex_facets(d, n):
    """The ``n + 1`` facets of ``M^{d,n}``; facet ``i`` is returned at position ``i``.

    Facet ``i`` holds the vertices with index in ``[i-d+1, i+d-1]``, ``i``
    excluded, after clamping indices into ``[0, n]``.
    """
    if not (n >= d >= 2):
        raise BadParams(f"multiplex needs n >= d >= 2, got d={d} n={n}")
    out = []
    for i in range(n + 1):
        m = 0
        for j in range(i - d + 1, i + d):
            if j != i:
                m |= 1 << _clamp(j, n)
        out.append(m)
    return out


def simplex_facets(d):
    full = (1 << (d + 1)) - 1
    return _sorted_masks(full & ~(1 << i) for i in range(d + 1))


def polygon_lattice_facets(v):
    """Edges of the ``v``-gon with vertices ``0 .. v-1`` in cyclic order."""
    if v < 3:
        raise BadParams(f"a polygon needs at least 3 vertices, got {v}")
    return _sorted_masks((1 << i) | (1 << ((i + 1) % v)) for i in range(v))


def paired_subsets(indices, size):
    """Subsets of ``indices`` of the given even size that split into pairs ``{j, j+1}``.

    ``indices`` is a contiguous range (any iterable of consecutive ints).
    Returned as sorted tuples in lexicographic order.
    """
    if size % 2:
        raise OddSize(f"paired subsets have even size, got {size}")
    if size < 0:
        raise BadParams("size must be non-negative")
    idx = sorted(indices)
    out = []

    def rec(start, need, acc):
        if need == 0:
            out.append(tuple(acc))
            return
        for p in range(start, len(idx) - 1):
            if idx[p + 1] == idx[p] + 1:
                rec(p + 2, need - 2, acc + [idx[p], idx[p + 1]])

    rec(0, size, [])
    return sorted(out)


def ordinary_candidate(i, r, Y, k, n):
    """Clamped vertex set ``{i..i+2r-1} | Y | {i+k..i+k+2r-1}``."""
    idx = list(range(i, i + 2 * r)) + list(Y) + list(range(i + k, i + k + 2 * r))
    return to_mask(_clamp(j, n) for j in idx)


def ordinary_facets(d, k, n, check=True):
    """Facets of the ordinary polytope ``P^{d,k,n}``.

    Every window ``{i..i+2r-1}``, paired ``Y`` inside the gap and the window
    shifted by ``k`` is clamped to ``[0, n]``; sets with at least ``d``
    vertices are kept and those strictly inside another are dropped.  With
    ``check`` the count is compared against the closed-form facet number.
    """
    _check_ordinary(d, k, n)
    m = (d - 1) // 2
    cands = set()
    for i in range(-k - 2 * m, n + 1):
        for r in range(1, m + 1):
            gap = range(i + 2 * r + 1, i + k - 1)
            for Y in paired_subsets(gap, d - 2 * r - 1):
                x = ordinary_candidate(i, r, Y, k, n)
                if x.bit_count() >= d:
                    cands.add(x)
    facets = [x for x in cands if not any(x != y and x & ~y == 0 for y in cands)]
    if check:
        want = formulas.dinh_f(d, k, n, d - 1)
        if len(facets) != want:
            raise FacetCountMismatch(f"P^{{{d},{k},{n}}}: generated {len(facets)} facets, expected {want}")
    return _sorted_masks(facets)


def pyramid_facets(facets, n_vertices):
    """Facets of the pyramid over a polytope: the base plus each facet joined with the apex."""
    apex = 1 << n_vertices
    base = (1 << n_vertices) - 1
    return _sorted_masks([base] + [to_mask(f) | apex for f in facets])


def pyramid(L):
    """Face lattice of the pyramid over ``L``; the apex gets index ``L.n_vertices``."""
    return build_face_lattice(pyramid_facets(L.facets, L.n_vertices), L.n_vertices + 1)


def pyramid_over_polygon(d, m):
    """``Q^{d,m}``: the ``(d-2)``-fold pyramid over the ``(m+3)``-gon."""
    if d < 2 or m < 0:
        raise BadParams(f"need d >= 2 and m >= 0, got d={d} m={m}")
    facets = polygon_lattice_facets(m + 3)
    nv = m + 3
    for _ in range(d - 2):
        facets = pyramid_facets(facets, nv)
        nv += 1
    return facets, nv


def facets_for(spec):
    """``(facets, n_vertices)`` for a :class:`PolytopeSpec`."""
    if spec.kind == "multiplex":
        return _sorted_masks(multiplex_facets(spec.d, spec.n)), spec.n + 1
    if spec.kind == "ordinary":
        return ordinary_facets(spec.d, spec.k, spec.n), spec.n + 1
    if spec.kind == "polygon":
        return polygon_lattice_facets(spec.n + 1), spec.n + 1
    if spec.kind == "pyramid":
        return pyramid_over_polygon(spec.d, spec.m)
    return simplex_facets(spec.d), spec.d + 1


def construct(spec):
    """Build the face lattice named by ``spec``."""
    facets, nv = facets_for(spec)
    return build_face_lattice(facets, nv)


def multiplex(d, n):
    return build_face_lattice(multiplex_facets(d, n), n + 1)


def ordinary(d, k, n):
    return build_face_lattice(ordinary_facets(d, k, n), n + 1)


# --------------------------------------------------------------------------
# Gale evenness

def is_gale_subset(Y, V):
    """Whether every two elements of ``V - Y`` have an even number of ``Y``-elements between them.

    ``V`` is the ordered vertex list (an int ``n`` means ``0 .. n``).
    """
    if isinstance(V, int):
        V = range(V + 1)
    V = list(V)
    Y = set(members(Y) if isinstance(Y, int) else Y)
    if not Y <= set(V):
        raise NotSubset(f"{sorted(Y - set(V))} not in the vertex list")
    between = None
    for v in V:
        if v in Y:
            if between is not None:
                between += 1
        else:
            if between is not None and between % 2:
                return False
            between = 0
    return True


def is_gale_polytope(L):
    """Every facet of ``L`` is a Gale subset of ``0 .. n``."""
    V = range(L.n_vertices)
    return all(is_gale_subset(f, V) for f in L.facets)


def facets_through(L, v):
    """Facets of ``L`` containing vertex ``v``."""
    return [f for f in L.facets if f >> v & 1]


def relabel(face, support):
    """Renumber ``face`` (a subset of ``support``) by positions in sorted ``support``."""
    pos = {v: i for i, v in enumerate(members(support))}
    return to_mask(pos[v] for v in members(face))


def face_is_induced_multiplex(L, face):
    """True iff the faces inside ``face``, renumbered in induced order, are exactly those of a multiplex.

    Checks the lattice below ``face`` against ``M^{dim, |face|-1}`` as
    labelled vertex sets, so the vertex order matters.
    """
    i = L.index[to_mask(face)]
    dim = L.rank[i]
    nv = face.bit_count()
    if dim < 2:
        # points and segments are simplices
        return nv == dim + 1
    if nv - 1 < dim:
        return False
    sub = {relabel(L.faces[j], face) for j in range(len(L)) if L.le(j, i)}
    ref = set(build_face_lattice(multiplex_facets(dim, nv - 1), nv).faces)
    return sub == ref
