"""Named checks comparing enumerated lattices with closed forms and structure results.

Each check takes a :class:`Context` (one polytope, with its lattice, graph and
flag vector built lazily) and returns :class:`CheckResult` rows.  Checks that
do not apply to a family return no rows.
"""

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import cached_property
from math import ceil

from ordpoly import constructions as C
from ordpoly import formulas as F
from ordpoly import graphs as G
from ordpoly import lattice as LC
from ordpoly.errors import NotAntiIso, NotEdge, RankDeficient

BUDGET_ENV = "ORDPOLY_FACE_BUDGET"
DEFAULT_BUDGET = 5000

CHECK_NAMES = (
    "fvector", "flag", "toric", "elementary", "gale", "duality", "quotients",
    "edges", "cliques", "twofaces", "coloring", "hamiltonian", "diameter",
    "weakly-neighborly", "dual-facet-bound", "flag-duality",
)

EXHAUSTIVE_COLORING_LIMIT = 12


@dataclass
class CheckResult:
    name: str
    params: dict
    expected: object
    actual: object
    passed: bool | None
    counterexample: object = None
    note: str = ""

    @property
    def status(self):
        return {True: "PASS", False: "FAIL", None: "SKIP"}[self.passed]

    def line(self):
        p = " ".join(f"{k}={v}" for k, v in self.params.items())
        out = f"{self.status} {self.name:<22} {p:<28} expected={self.expected} actual={self.actual}"
        if self.counterexample is not None:
            out += f" counterexample={self.counterexample}"
        if self.note:
            out += f" ({self.note})"
        return out


@dataclass
class VerificationReport:
    results: list = field(default_factory=list)

    @property
    def ok(self):
        return all(r.passed is not False for r in self.results)

    @property
    def failures(self):
        return [r for r in self.results if r.passed is False]

    def lines(self):
        out = [r.line() for r in self.results]
        n_pass = sum(r.passed is True for r in self.results)
        n_skip = sum(r.passed is None for r in self.results)
        out.append(f"{'OK' if self.ok else 'FAILED'}: {n_pass} passed, "
                   f"{len(self.failures)} failed, {n_skip} skipped")
        return out

    def to_json(self):
        rows = [asdict(r) for r in self.results]
        return json.dumps({"ok": self.ok, "results": rows}, default=_jsonable, indent=1) + "\n"


def _jsonable(x):
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    if isinstance(x, tuple):
        return list(x)
    return str(x)


class Context:
    """One polytope and its lazily built derived objects."""

    def __init__(self, spec):
        self.spec = spec

    @cached_property
    def lattice(self):
        return C.construct(self.spec)

    @cached_property
    def graph(self):
        return G.graph_of(self.lattice)

    @cached_property
    def flags(self):
        return LC.flag_vector(self.lattice)

    @cached_property
    def toric(self):
        return LC.toric_h(self.lattice, check=False)

    @cached_property
    def eulerian(self):
        return LC.is_eulerian(self.lattice)

    @property
    def params(self):
        return self.spec.as_dict()

    @property
    def kind(self):
        return self.spec.kind

    @property
    def char(self):
        """The parameter playing the role of the characteristic (``d`` for multiplexes)."""
        return self.spec.k if self.kind == "ordinary" else self.spec.d

    def result(self, name, expected, actual, passed=None, counterexample=None, note=""):
        if passed is None:
            passed = expected == actual
        return CheckResult(name, self.params, expected, actual, bool(passed), counterexample, note)


def _is_multiplex_like(ctx):
    s = ctx.spec
    return s.kind == "multiplex" or (s.kind == "ordinary" and s.k == s.d)


# --------------------------------------------------------------------------
# checks

def check_fvector(ctx):
    s, L = ctx.spec, ctx.lattice
    if s.kind in ("multiplex", "pyramid", "polygon"):
        want = F.multiplex_f_vector(s.d, s.n)
    elif s.kind == "ordinary":
        want = F.dinh_f_vector(s.d, s.k, s.n)
    else:
        want = tuple(F.binom(s.d + 1, i + 1) for i in range(s.d))
    got = LC.f_vector(L)
    euler = sum((-1) ** i * f for i, f in enumerate(got))
    return [ctx.result("fvector", want, got),
            ctx.result("euler", 1 - (-1) ** s.d, euler)]


def check_flag(ctx):
    s, fl = ctx.spec, ctx.flags
    out = []
    if s.kind in ("multiplex", "pyramid", "polygon", "simplex"):
        bad = [S for S in LC.rank_subsets(s.d) if fl[S] != F.multiplex_flag(s.d, s.n, S)]
        out.append(ctx.result("flag-formula", 0, len(bad), counterexample=bad[0] if bad else None,
                              note="entries differing from the closed form"))
    if s.kind == "multiplex":
        facets, nv = C.pyramid_over_polygon(s.d, s.n - s.d)
        q = LC.flag_vector(LC.build_face_lattice(facets, nv))
        bad = [S for S in LC.rank_subsets(s.d) if q[S] != fl[S]]
        out.append(ctx.result("flag-pyramid", 0, len(bad), counterexample=bad[0] if bad else None,
                              note="entries differing from the pyramid over the polygon"))
    if s.kind == "ordinary":
        out.append(ctx.result("flag-f02", 3 * fl[{2}] + (s.n - s.k), fl[{0, 2}]))
    return out


def check_toric(ctx):
    s = ctx.spec
    out = [ctx.result("eulerian", True, ctx.eulerian)]
    if not ctx.eulerian:
        return out
    h = ctx.toric
    if s.kind in ("multiplex", "pyramid", "polygon", "simplex"):
        out.append(ctx.result("toric", F.multiplex_h(s.d, s.n), h))
    elif s.d == 5:
        out.append(ctx.result("toric", F.toric_h5_ordinary(s.k, s.n), h))
    else:
        out.append(ctx.result("toric-h2", F.h2_ordinary(s.d, s.k, s.n), h[2]))
        out.append(ctx.result("toric-symmetric", True, h == h[::-1] and h[0] == 1))
    return out


def check_elementary(ctx):
    s = ctx.spec
    if s.d < 3:
        return []
    beta = LC.elementary_beta_of(ctx.lattice, ctx.flags)
    want = s.kind != "ordinary" or s.k == s.d
    out = [ctx.result("elementary", want, beta == 0, note=f"beta={beta}")]
    if ctx.eulerian:
        h = ctx.toric
        out.append(ctx.result("elementary-h", beta == 0, h[1] == h[2]))
    return out


def check_gale(ctx):
    s = ctx.spec
    if s.kind not in ("ordinary", "multiplex"):
        return []
    # even-dimensional Gale multiplexes would be ordinary, hence cyclic, hence simplices
    want = s.kind == "ordinary" or s.d % 2 == 1 or s.n == s.d
    bad = [LC.members(f) for f in ctx.lattice.facets if not C.is_gale_subset(f, s.n)]
    return [ctx.result("gale", want, not bad, counterexample=bad[0] if bad and want else None)]


def check_duality(ctx):
    if ctx.kind not in ("multiplex", "simplex"):
        return []
    try:
        ok, _ = LC.self_duality_witness(ctx.lattice)
        return [ctx.result("duality", True, ok)]
    except NotAntiIso as exc:
        return [ctx.result("duality", True, False, counterexample=str(exc))]


def check_quotients(ctx):
    s, L = ctx.spec, ctx.lattice
    out = []
    if s.kind == "multiplex":
        if s.d >= 3:
            bad = None
            for v in range(L.n_vertices):
                Q = LC.interval(L, 1 << v, L.faces[-1])
                nv = Q.rank_sizes()[0]
                if nv - 1 < s.d - 1 or not LC.poset_isomorphic(Q, C.multiplex(s.d - 1, nv - 1))[0]:
                    bad = v
                    break
            out.append(ctx.result("quotients", True, bad is None, counterexample=bad,
                                  note="vertex figures are (d-1)-multiplexes"))
        bad = next((LC.members(f) for f, r in zip(L.faces, L.rank)
                    if 2 <= r < s.d and not C.face_is_induced_multiplex(L, f)), None)
        out.append(ctx.result("faces-multiplex", True, bad is None, counterexample=bad))
    if s.kind == "ordinary":
        bad = next((LC.members(f) for f in L.facets
                    if not (s.d <= f.bit_count() <= 2 * s.d - 2
                            and C.face_is_induced_multiplex(L, f))), None)
        out.append(ctx.result("facets-multiplex", True, bad is None, counterexample=bad,
                              note="facets are multiplexes with d..2d-2 vertices"))
    return out


def check_edges(ctx):
    s = ctx.spec
    if s.kind == "multiplex":
        want = G.multiplex_edges(s.d, s.n)
    elif s.kind == "ordinary":
        want = G.ordinary_edges(s.k, s.n)
    else:
        return []
    got = ctx.graph
    diff = sorted(want.edge_masks() ^ got.edge_masks())
    out = [ctx.result("edges", len(want.edges()), len(got.edges()), passed=not diff,
                      counterexample=LC.members(diff[0]) if diff else None)]
    if s.kind == "ordinary":
        out.append(ctx.result("edges-f1", F.ordinary_f1(s.k, s.n), len(got.edges())))
    return out


def check_cliques(ctx):
    s = ctx.spec
    if not _is_multiplex_like(ctx):
        return []
    L, Gr = ctx.lattice, ctx.graph
    ok, witness = G.cliques_are_faces(L, Gr)
    out = [ctx.result("cliques", True, ok, counterexample=witness)]
    if s.n > s.d:
        cliques = G.enumerate_cliques(Gr, s.d)
        got = tuple(sum(1 for c in cliques if len(c) == i + 1) for i in range(s.d))
        want = tuple(F.simplex_face_count(s.d, s.n, i) for i in range(s.d))
        out.append(ctx.result("clique-count", want, got))
    return out


def check_twofaces(ctx):
    s = ctx.spec
    if s.kind not in ("ordinary", "multiplex") or s.d < 3:
        return []
    L, Gr, k = ctx.lattice, ctx.graph, ctx.char
    got = sorted(G.nontriangular_two_faces(L))
    want = sorted(G.predicted_quadrilaterals(k, s.n))
    out = [ctx.result("twofaces", [LC.members(q) for q in want], [LC.members(q) for q in got])]
    others = [f for f in L.faces_of_dim(2) if f not in want]
    out.append(ctx.result("twofaces-sizes", True,
                          all(q.bit_count() == 4 for q in got) and all(f.bit_count() == 3 for f in others)))
    diag = [dg for q in want for dg in G.quadrilateral_diagonals(q) if Gr.has_edge(*dg)]
    out.append(ctx.result("twofaces-diagonals", True, not diag,
                          counterexample=diag[0] if diag else None))
    return out


def check_coloring(ctx):
    s = ctx.spec
    if s.kind not in ("ordinary", "multiplex"):
        return []
    Gr, k = ctx.graph, ctx.char
    note = ""
    if s.kind == "multiplex" and s.d == 2:
        # polygons: the modular colouring degenerates; odd cycles need 3 colours
        want = 3 if (s.n + 1) % 2 else 2
        note = "polygon"
    else:
        want = k + 1 if s.n == k else k
    chi, coloring, clique = G.chromatic_number(Gr, s)
    cert = (G.is_proper(Gr, coloring) and len(set(coloring)) <= chi
            and all(Gr.has_edge(a, b) for i, a in enumerate(clique) for b in clique[i + 1:]))
    out = [ctx.result("coloring", want, chi, passed=(chi == want and cert), note=note)]
    if Gr.n_vertices <= EXHAUSTIVE_COLORING_LIMIT:
        exact, _ = G.exact_chromatic_number(Gr)
        out.append(ctx.result("coloring-exhaustive", want, exact))
    return out


def check_hamiltonian(ctx):
    s = ctx.spec
    if s.kind not in ("ordinary", "multiplex"):
        return []
    Gr = ctx.graph
    note = "zigzag"
    try:
        seq = G.hamiltonian_cycle(s.n, Gr)
    except NotEdge:
        seq = G.find_hamiltonian_cycle(Gr)
        note = "searched"
    try:
        ok = seq is not None and G.check_cycle(Gr, seq) is not None
    except NotEdge:
        ok = False
    return [ctx.result("hamiltonian", True, ok, counterexample=None if ok else seq, note=note)]


def check_diameter(ctx):
    s = ctx.spec
    if s.kind not in ("ordinary", "multiplex"):
        return []
    return [ctx.result("diameter", ceil(s.n / ctx.char), G.diameter(ctx.graph))]


def predicted_weakly_neighborly(spec):
    if spec.kind == "multiplex":
        return spec.d == 2 or spec.n <= spec.d + 1
    if spec.kind == "ordinary":
        return spec.n == spec.k or (spec.k == spec.d and spec.n <= spec.d + 1)
    return None


def check_weakly_neighborly(ctx):
    s = ctx.spec
    want = predicted_weakly_neighborly(s)
    if want is None:
        return []
    L = ctx.lattice
    ok, witness = G.is_weakly_neighborly(L)
    note = None
    if s.kind == "ordinary" and s.n == s.k > s.d:
        # cyclic: predicted neighborly, but {1,3,..,2m+1} spans a facet-free set
        note = "cyclic prediction; known to fail in odd dimension"
    out = [ctx.result("weakly-neighborly", want, ok, counterexample=witness, note=note)]
    if s.kind == "ordinary" and s.n >= s.k + 2:
        out.append(ctx.result("weakly-neighborly-0n", True,
                              G.violates_weak_neighborliness(L, (0, s.n)),
                              note="x_0 and x_n share no two-face"))
    return out


def check_dual_facet_bound(ctx):
    s = ctx.spec
    if s.kind != "ordinary":
        return []
    bound = F.dual_facet_vertex_bound(s.d, s.k)
    got = len(C.facets_through(ctx.lattice, 1))
    return [ctx.result("dual-facet-bound", f">={bound}", got, passed=got >= bound)]


def check_flag_duality(ctx):
    s = ctx.spec
    if s.kind not in ("ordinary", "multiplex"):
        return []
    fl = ctx.flags
    bad = [S for S in LC.rank_subsets(s.d) if S and fl[S] != fl[F.reflected_rank_set(S)]]
    return [ctx.result("flag-duality", 0, len(bad), counterexample=bad[0] if bad else None,
                       note="sets S with f_S != f_S'")]


CHECKS = {
    "fvector": check_fvector,
    "flag": check_flag,
    "toric": check_toric,
    "elementary": check_elementary,
    "gale": check_gale,
    "duality": check_duality,
    "quotients": check_quotients,
    "edges": check_edges,
    "cliques": check_cliques,
    "twofaces": check_twofaces,
    "coloring": check_coloring,
    "hamiltonian": check_hamiltonian,
    "diameter": check_diameter,
    "weakly-neighborly": check_weakly_neighborly,
    "dual-facet-bound": check_dual_facet_bound,
    "flag-duality": check_flag_duality,
}


# --------------------------------------------------------------------------
# driving

def parse_checks(text):
    if text in (None, "", "all"):
        return list(CHECK_NAMES)
    names = [t.strip() for t in text.split(",") if t.strip()]
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    return names


def estimated_faces(spec):
    s = spec
    if s.kind in ("multiplex", "pyramid", "polygon"):
        return sum(F.multiplex_f_vector(s.d, s.n)) + 2
    if s.kind == "ordinary":
        return sum(F.dinh_f_vector(s.d, s.k, s.n)) + 2
    return 2 ** (s.d + 1)


def face_budget():
    return int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))


def run_checks(spec, checks=None):
    ctx = Context(spec)
    out = []
    for name in checks or CHECK_NAMES:
        out.extend(CHECKS[name](ctx))
    return out


def _run_cell(args):
    spec, checks, budget = args
    size = estimated_faces(spec)
    if size > budget:
        return [CheckResult("budget", spec.as_dict(), f"<={budget}", size, None,
                            note=f"skipped; raise {BUDGET_ENV} to include")]
    return run_checks(spec, checks)


def verify(specs, checks=None, budget=None, jobs=1):
    """Run ``checks`` on every spec; results are ordered by spec key."""
    checks = checks or list(CHECK_NAMES)
    budget = face_budget() if budget is None else budget
    specs = sorted(specs, key=lambda s: s.key())
    cells = [(s, checks, budget) for s in specs]
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_cell, cells))
    else:
        chunks = [_run_cell(c) for c in cells]
    return VerificationReport([r for chunk in chunks for r in chunk])


def expand_grid(kind, ds, ks=None, ns=None):
    """Specs over a grid; missing ``n`` (and ``k``) default to relative ranges.

    Multiplexes: ``n`` in ``d .. d+5``.  Ordinary: ``k`` in ``d .. d+3`` and
    ``n`` in ``k .. k+3``.  Invalid combinations are dropped.
    """
    specs = []
    for d in ds:
        if kind == "ordinary":
            for k in (ks or range(d, d + 4)):
                for n in (ns or range(k, k + 4)):
                    if n >= k >= d >= 5 and d % 2:
                        specs.append(C.PolytopeSpec("ordinary", d, n, k))
        elif kind == "simplex":
            specs.append(C.PolytopeSpec("simplex", d, d))
        elif kind == "polygon":
            for n in (ns or range(2, 8)):
                specs.append(C.PolytopeSpec("polygon", 2, n))
        else:
            for n in (ns or range(d, d + 6)):
                if n >= d >= 2:
                    specs.append(C.PolytopeSpec(kind, d, n))
    return specs


# --------------------------------------------------------------------------
# spanning conjecture

def conjecture_report(d, f_vectors=None):
    """Euler-hyperplane membership and exact rank of the family's f-vectors.

    Raises :class:`RankDeficient` when the ``d`` vectors have rank below ``d``.
    """
    if d < 5 or d % 2 == 0:
        raise F.BadParams(f"need odd d >= 5, got {d}")
    fam = F.conjecture_family(d)
    if f_vectors is None:
        f_vectors = [F.dinh_f_vector(*p) for p in fam]
    report = VerificationReport()
    for p, fv in zip(fam, f_vectors):
        euler = sum((-1) ** i * f for i, f in enumerate(fv))
        report.results.append(CheckResult(
            "euler-hyperplane", {"d": p[0], "k": p[1], "n": p[2]}, 1 - (-1) ** d, euler,
            euler == 1 - (-1) ** d))
    rank = F.exact_rank(f_vectors)
    report.results.append(CheckResult("rank", {"d": d}, d, rank, rank == d))
    if rank < d:
        raise RankDeficient(rank, d)
    return report
