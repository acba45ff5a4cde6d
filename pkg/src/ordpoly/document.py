"""Serialized face lattices: canonical JSON and the digit-string listing.

JSON layout::

    {"spec": {"kind": ..., "d": ..., "n": ..., ["k": ...]},
     "faces_by_dim": {"0": [[0], [1], ...], "1": [[0, 1], ...], ...},
     "f_vector": [...],
     "flag_vector": {"": 1, "0": 10, "0,2": 230, ...},   # optional
     "toric_h": [...],                                   # optional
     "checksum": "<sha256 of the canonical body>"}

The digit-string listing writes each face as its concatenated vertex labels,
grouped under ``Facets:``, ``<k>-dimensional faces:`` and ``Edges:``.  It only
works with at most ten vertices.
"""

import hashlib
import json
import re
from dataclasses import dataclass, field
from importlib import resources

from ordpoly.errors import AppendixFormatUnavailable, ParseError
from ordpoly.lattice import f_vector, flag_vector, to_mask, toric_h


@dataclass
class LatticeDocument:
    spec: dict
    faces_by_dim: dict
    f_vector: tuple
    flag_vector: dict | None = None
    toric_h: tuple | None = None
    checksum: str = field(default="")

    def __post_init__(self):
        self.faces_by_dim = {
            int(k): sorted(tuple(sorted(f)) for f in v)
            for k, v in self.faces_by_dim.items()
        }
        self.f_vector = tuple(self.f_vector)
        if self.toric_h is not None:
            self.toric_h = tuple(self.toric_h)
        if not self.checksum:
            self.checksum = self.compute_checksum()

    @property
    def dim(self):
        return len(self.f_vector)

    @property
    def n_vertices(self):
        return len(self.faces_by_dim.get(0, ()))

    def body(self):
        out = {
            "spec": dict(self.spec),
            "faces_by_dim": {str(k): [list(f) for f in v]
                             for k, v in sorted(self.faces_by_dim.items())},
            "f_vector": list(self.f_vector),
        }
        if self.flag_vector is not None:
            out["flag_vector"] = dict(self.flag_vector)
        if self.toric_h is not None:
            out["toric_h"] = list(self.toric_h)
        return out

    def compute_checksum(self):
        blob = json.dumps(self.body(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def to_json(self, indent=None):
        out = self.body()
        out["checksum"] = self.checksum
        return json.dumps(out, sort_keys=True, indent=indent) + "\n"

    def face_sets(self):
        return {k: {to_mask(f) for f in v} for k, v in self.faces_by_dim.items()}


def flag_key(S):
    return ",".join(str(s) for s in sorted(S))


def document_from_lattice(spec, L, with_flag=True, with_toric=True):
    faces = {k: L.vertex_sets(k) for k in range(L.dim)}
    fl = None
    if with_flag:
        fl = {flag_key(S): c for S, c in flag_vector(L).items()}
    th = toric_h(L) if with_toric else None
    spec = spec.as_dict() if hasattr(spec, "as_dict") else dict(spec)
    return LatticeDocument(spec, faces, f_vector(L), fl, th)


def parse_json(text):
    try:
        raw = json.loads(text)
        doc = LatticeDocument(
            spec=raw["spec"],
            faces_by_dim=raw["faces_by_dim"],
            f_vector=raw["f_vector"],
            flag_vector=raw.get("flag_vector"),
            toric_h=raw.get("toric_h"),
        )
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"not a lattice document: {exc}") from None
    if raw.get("checksum") and raw["checksum"] != doc.checksum:
        raise ParseError("checksum mismatch")
    if len(doc.f_vector) and any(len(doc.faces_by_dim.get(i, ())) != c
                                 for i, c in enumerate(doc.f_vector)):
        raise ParseError("f_vector disagrees with the face lists")
    return doc


# --------------------------------------------------------------------------
# digit-string listing

def _heading(k, d):
    if k == d - 1:
        return "Facets:"
    if k == 1:
        return "Edges:"
    return f"{k}-dimensional faces:"


def to_appendix(doc, per_line=12):
    """Digit-string listing of faces of dimension ``d-1`` down to ``1``."""
    if doc.n_vertices > 10:
        raise AppendixFormatUnavailable(f"{doc.n_vertices} vertices need multi-digit labels")
    lines = []
    for k in range(doc.dim - 1, 0, -1):
        faces = sorted(doc.faces_by_dim.get(k, ()), key=lambda f: (len(f), f))
        words = ["".join(map(str, f)) for f in faces]
        lines.append(_heading(k, doc.dim))
        for i in range(0, len(words), per_line):
            chunk = ", ".join(words[i:i + per_line])
            last = i + per_line >= len(words)
            lines.append(chunk if last else chunk + ",")
    return "\n".join(lines) + "\n"


_HEAD = re.compile(r"^\s*(Facets|Edges|(\d+)-dimensional faces):\s*$")


def parse_appendix(text, n_vertices=None):
    """Read a digit-string listing back into a document.

    Vertices are implicit: all labels ``0 .. n_vertices-1`` (default: one
    more than the largest digit seen).
    """
    groups = []
    for line in text.splitlines():
        m = _HEAD.match(line)
        if m:
            groups.append([m.group(1), []])
            continue
        if not line.strip():
            continue
        if not groups:
            raise ParseError(f"face list before any heading: {line!r}")
        for tok in line.replace(",", " ").split():
            if not tok.isdigit():
                raise ParseError(f"bad face token {tok!r}")
            groups[-1][1].append(tuple(sorted(int(c) for c in tok)))
    if not groups or groups[0][0] != "Facets":
        raise ParseError("listing must start with 'Facets:'")
    if len(groups) > 1 and groups[-1][0] != "Edges":
        raise ParseError("listing must end with 'Edges:'")
    # a lone 'Facets:' group is a polygon
    d = len(groups) + 1 if len(groups) > 1 else 2
    faces = {}
    for pos, (head, fs) in enumerate(groups):
        k = d - 1 - pos
        if head not in ("Facets", "Edges") and int(head.split("-")[0]) != k:
            raise ParseError(f"heading {head!r} out of order")
        faces[k] = fs
    top = max(v for fs in faces.values() for f in fs for v in f)
    nv = n_vertices if n_vertices is not None else top + 1
    faces[0] = [(v,) for v in range(nv)]
    fv = tuple(len(faces[k]) for k in range(d))
    return LatticeDocument({"kind": "listing", "d": d, "n": nv - 1}, faces, fv)


def load_document(text):
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_appendix(text)


def appendix_text():
    """The reference listing of ``P^{5,7,9}`` shipped with the package."""
    return resources.files("ordpoly").joinpath("data/appendix_P5_7_9.txt").read_text()


def normalize_whitespace(text):
    return " ".join(text.split())


# --------------------------------------------------------------------------
# comparison

@dataclass
class Diff:
    """Per-dimension symmetric difference between two documents."""

    only_a: dict
    only_b: dict
    vertex_counts: tuple

    @property
    def empty(self):
        return (not any(self.only_a.values()) and not any(self.only_b.values())
                and self.vertex_counts[0] == self.vertex_counts[1])

    def lines(self):
        out = []
        if self.vertex_counts[0] != self.vertex_counts[1]:
            out.append(f"vertices: {self.vertex_counts[0]} vs {self.vertex_counts[1]}")
        for k in sorted(set(self.only_a) | set(self.only_b)):
            for f in self.only_a.get(k, ()):
                out.append(f"dim {k}: - {''.join(map(str, f)) if max(f) < 10 else list(f)}")
            for f in self.only_b.get(k, ()):
                out.append(f"dim {k}: + {''.join(map(str, f)) if max(f) < 10 else list(f)}")
        return out


def compare(a, b):
    """Diff dimensions ``1 .. d-1`` explicitly; vertices are compared by count."""
    dims = set(a.faces_by_dim) | set(b.faces_by_dim)
    dims.discard(0)
    only_a, only_b = {}, {}
    for k in sorted(dims):
        fa = set(a.faces_by_dim.get(k, ()))
        fb = set(b.faces_by_dim.get(k, ()))
        if fa - fb:
            only_a[k] = sorted(fa - fb)
        if fb - fa:
            only_b[k] = sorted(fb - fa)
    return Diff(only_a, only_b, (a.n_vertices, b.n_vertices))


__all__ = [
    "LatticeDocument", "document_from_lattice", "parse_json", "to_appendix",
    "parse_appendix", "load_document", "appendix_text", "compare", "Diff",
]
