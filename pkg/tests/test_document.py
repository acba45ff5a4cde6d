import json

import pytest

from ordpoly import constructions as C
from ordpoly import document as D
from ordpoly.errors import AppendixFormatUnavailable, ParseError


def doc_for(kind, d, n, k=None, **kw):
    spec = C.PolytopeSpec(kind, d, n, k)
    return D.document_from_lattice(spec, C.construct(spec), **kw)


def test_json_round_trip_is_stable():
    doc = doc_for("ordinary", 5, 8, 6)
    text = doc.to_json()
    again = D.parse_json(text)
    assert again == doc
    assert again.to_json() == text
    assert doc_for("ordinary", 5, 8, 6).checksum == doc.checksum


def test_json_layout():
    raw = json.loads(doc_for("multiplex", 3, 3).to_json())
    assert raw["f_vector"] == [4, 6, 4]
    assert raw["faces_by_dim"]["1"][:2] == [[0, 1], [0, 2]]
    assert raw["flag_vector"][""] == 1
    assert raw["flag_vector"]["0,2"] == 12
    assert raw["toric_h"] == [1, 1, 1, 1]
    assert set(raw) == {"spec", "faces_by_dim", "f_vector", "flag_vector", "toric_h", "checksum"}


def test_tampered_documents_are_rejected():
    raw = json.loads(doc_for("multiplex", 3, 4).to_json())
    raw["faces_by_dim"]["1"].pop()
    with pytest.raises(ParseError):
        D.parse_json(json.dumps(raw))
    del raw["checksum"]
    with pytest.raises(ParseError):
        D.parse_json(json.dumps(raw))
    with pytest.raises(ParseError):
        D.parse_json("{not json")


def test_listing_matches_reference():
    doc = doc_for("ordinary", 5, 9, 7)
    ref = D.appendix_text()
    assert D.normalize_whitespace(D.to_appendix(doc)) == D.normalize_whitespace(ref)
    assert D.compare(doc, D.parse_appendix(ref)).empty


def test_listing_round_trip_and_limits():
    doc = doc_for("multiplex", 4, 7)
    back = D.parse_appendix(D.to_appendix(doc))
    assert D.compare(doc, back).empty
    assert back.f_vector == doc.f_vector
    polygon = doc_for("polygon", 2, 5)
    assert D.compare(polygon, D.parse_appendix(D.to_appendix(polygon))).empty
    with pytest.raises(AppendixFormatUnavailable):
        D.to_appendix(doc_for("multiplex", 5, 10))
    with pytest.raises(ParseError):
        D.parse_appendix("012, 013\n")
    with pytest.raises(ParseError):
        D.parse_appendix("Facets:\n01x\n")


def test_compare():
    assert D.compare(doc_for("multiplex", 5, 5), doc_for("ordinary", 5, 5, 5)).empty
    diff = D.compare(doc_for("multiplex", 3, 4), doc_for("multiplex", 3, 3))
    assert not diff.empty
    assert "vertices: 5 vs 4" in diff.lines()
    assert any(line.startswith("dim 2: - 0134") for line in diff.lines())


def test_pyramid_document_has_multiplex_flag_vector():
    assert doc_for("pyramid", 5, 9).flag_vector == doc_for("multiplex", 5, 9).flag_vector
