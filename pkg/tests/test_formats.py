import json
from fractions import Fraction

import pytest

from modext.constructions import ProductAlgebra
from modext.core import AlgebraicModule, FiniteAlgebra
from modext.formats import (ParseError, algebra_doc, document, dumps, format_rational, load, loads,
                            parse_rational)
from modext.instances import matrix_upper


def test_rationals():
    assert parse_rational("3/4") == Fraction(3, 4) and parse_rational(-2) == -2
    assert format_rational(Fraction(6, 3)) == "2" and format_rational(Fraction(-1, 3)) == "-1/3"
    for bad in ("x", "1/0", 1.5, True, None):
        with pytest.raises(ParseError):
            parse_rational(bad)


def test_algebra_round_trip():
    A = matrix_upper(2)
    B = loads(dumps(algebra_doc(A)))["T2"]
    assert isinstance(B, FiniteAlgebra) and B.same_structure(A) and B.basis == A.basis


def test_document_round_trip(corpus):
    for m in corpus:
        objs = list(loads(dumps(document(m))).values())
        a, mod, p = objs
        assert isinstance(mod, AlgebraicModule) and isinstance(p, ProductAlgebra)
        assert mod.action.same_structure(m.action) and mod.inner.same_structure(m.inner)


def test_corpus_files_load(corpus_files):
    for path in corpus_files:
        assert isinstance(list(load(path).values())[-1], ProductAlgebra)


def test_syntax_error_has_position():
    with pytest.raises(ParseError) as exc:
        loads('{"type": "algebra",\n  "dim": 1,\n  "mult": [[0, 0, 0 "1"]]}')
    assert exc.value.line == 3 and exc.value.column is not None


@pytest.mark.parametrize("doc,where", [
    ({"type": "algebra", "dim": 0}, "$.dim"),
    ({"type": "algebra", "dim": 1, "mult": [[0, 1, 0, "1"]]}, "$.mult[0][1]"),
    ({"type": "algebra", "dim": 1, "mult": [[0, 0, 0, "a"]]}, "$.mult[0][3]"),
    ({"type": "widget"}, "$.type"),
    ({"type": "module", "base": "nowhere", "dim": 1}, "$.base"),
])
def test_semantic_errors_have_paths(doc, where):
    with pytest.raises(ParseError) as exc:
        loads(json.dumps(doc))
    assert exc.value.path == where


def test_axiom_failure_is_parse_error():
    # e0e0 = e1, e1e0 = e0: (e0e0)e0 = e0 but e0(e0e0) = 0
    doc = {"type": "algebra", "dim": 2, "mult": [[0, 0, 1, "1"], [1, 0, 0, "1"]]}
    with pytest.raises(ParseError):
        loads(json.dumps(doc))
    assert loads(json.dumps(doc), check=False)


def test_construct_kinds():
    text = json.dumps({"objects": [
        algebra_doc(matrix_upper(2)),
        {"type": "algebra", "name": "Q", "dim": 1, "mult": [[0, 0, 0, "1"]]},
        {"type": "construct", "name": "P1", "kind": "theta_lau", "args": {"A": "T2", "B": "Q", "theta": [1, 0, 0]}},
        {"type": "construct", "name": "P2", "kind": "t_lau", "args": {"A": "Q", "B": "T2", "T": [[1], [0], [1]]}},
        {"type": "construct", "name": "P3", "kind": "direct_sum", "args": {"A": "T2", "B": "Q"}},
        {"type": "construct", "name": "P4", "kind": "self_bowtie", "args": {"A": "Q"}},
    ]})
    objs = loads(text)
    assert [objs[f"P{i}"].carrier.dim for i in range(1, 5)] == [4, 4, 4, 2]
    with pytest.raises(ParseError) as exc:
        loads(json.dumps({"type": "construct", "kind": "tensor"}))
    assert exc.value.path == "$.kind"
