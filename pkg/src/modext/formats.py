"""JSON definition documents for algebras, modules and constructions.

Algebra::

    {"type": "algebra", "name": "T2", "dim": 3, "basis": ["e11", "e12", "e22"],
     "mult": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 2, 1, "1"], [2, 2, 2, "1"]],
     "unit": ["1", "0", "1"]}

Module (X with its own product ``inner_mult`` and the A-actions;
``inner_name`` optionally names X itself)::

    {"type": "module", "name": "...", "base": "T2", "dim": 1, "basis": ["b"],
     "inner_mult": [], "left": [[i, p, q, "r"], ...], "right": [[p, i, q, "r"], ...]}

Construction::

    {"type": "construct", "name": "P", "kind": "bowtie", "args": {"module": "..."}}

A file holds one object or ``{"objects": [...]}``; references are names of
objects defined earlier in the same document (or inline objects).
Rationals are strings "p/q" or "p"; plain integers are accepted too.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from .constructions import (
    ProductAlgebra,
    bowtie,
    direct_sum,
    module_extension,
    self_bowtie,
    t_lau,
    theta_lau,
)
from .core import AlgebraicModule, AxiomError, Bimodule, FiniteAlgebra, StructureError, zeros

__all__ = [
    "ParseError",
    "CONSTRUCT_KINDS",
    "parse_rational",
    "format_rational",
    "loads",
    "load",
    "load_one",
    "dumps",
    "algebra_doc",
    "module_doc",
    "document",
]

CONSTRUCT_KINDS = ("bowtie", "ltimes", "theta_lau", "t_lau", "direct_sum", "self_bowtie")


class ParseError(ValueError):
    """Malformed definition text; carries a position when one is known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None, path: str = ""):
        self.line, self.column, self.path = line, column, path
        where = []
        if line is not None:
            where.append(f"line {line}, column {column}")
        if path:
            where.append(f"at {path}")
        super().__init__(message + (f" ({'; '.join(where)})" if where else ""))


def parse_rational(v, path: str = "") -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ParseError(f"expected a rational string 'p/q' or integer, got {v!r}", path=path)
    try:
        return Fraction(v)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {v!r}", path=path) from None


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _entries(doc: dict, key: str, shape: tuple[int, int, int], path: str) -> np.ndarray:
    t = zeros(*shape)
    for n, e in enumerate(doc.get(key, [])):
        p = f"{path}.{key}[{n}]"
        if not isinstance(e, list) or len(e) != 4:
            raise ParseError("entry must be [i, j, k, \"p/q\"]", path=p)
        idx = e[:3]
        for axis, (i, bound) in enumerate(zip(idx, shape)):
            if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < bound:
                raise ParseError(f"index {i!r} out of range 0..{bound - 1}", path=f"{p}[{axis}]")
        t[tuple(idx)] = parse_rational(e[3], f"{p}[3]")
    return t


def _dim(doc: dict, path: str) -> int:
    d = doc.get("dim")
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise ParseError("'dim' must be a positive integer", path=f"{path}.dim")
    return d


def _basis(doc: dict, d: int, path: str) -> tuple[str, ...]:
    b = doc.get("basis", [])
    if b and (len(b) != d or not all(isinstance(x, str) for x in b)):
        raise ParseError(f"'basis' must list {d} labels", path=f"{path}.basis")
    return tuple(b)


class _Resolver:
    def __init__(self, check: bool = True):
        self.objects: dict[str, object] = {}
        self.check = check

    def ref(self, v, want, path: str):
        if isinstance(v, str):
            if v not in self.objects:
                raise ParseError(f"unknown reference {v!r}", path=path)
            obj = self.objects[v]
        elif isinstance(v, dict):
            obj = self.build(v, path)
        else:
            raise ParseError("expected a reference name or an inline object", path=path)
        if want is not None and not isinstance(obj, want):
            raise ParseError(f"reference {v if isinstance(v, str) else '(inline)'} is a {type(obj).__name__}, "
                             f"expected {want.__name__}", path=path)
        return obj

    def build(self, doc: dict, path: str):
        if not isinstance(doc, dict):
            raise ParseError("object must be a JSON mapping", path=path)
        kind = doc.get("type")
        try:
            if kind == "algebra":
                return self._algebra(doc, path)
            if kind == "module":
                return self._module(doc, path)
            if kind == "construct":
                return self._construct(doc, path)
        except (AxiomError, StructureError) as exc:
            raise ParseError(f"invalid {kind}: {exc}", path=path) from exc
        raise ParseError(f"unknown object type {kind!r}", path=f"{path}.type")

    def _algebra(self, doc, path) -> FiniteAlgebra:
        d = _dim(doc, path)
        mult = _entries(doc, "mult", (d, d, d), path)
        unit = doc.get("unit")
        if unit is not None:
            if not isinstance(unit, list) or len(unit) != d:
                raise ParseError(f"'unit' must have {d} entries", path=f"{path}.unit")
            unit = [parse_rational(u, f"{path}.unit[{i}]") for i, u in enumerate(unit)]
        return FiniteAlgebra(mult, _basis(doc, d, path), unit, doc.get("name", ""), check=self.check)

    def _module(self, doc, path) -> AlgebraicModule:
        A = self.ref(doc.get("base"), FiniteAlgebra, f"{path}.base")
        d = _dim(doc, path)
        basis = _basis(doc, d, path)
        name = doc.get("name", "")
        inner = FiniteAlgebra(_entries(doc, "inner_mult", (d, d, d), path), basis, None, doc.get("inner_name", name),
                              check=self.check)
        left = _entries(doc, "left", (A.dim, d, d), path)
        right = _entries(doc, "right", (d, A.dim, d), path)
        act = Bimodule(A, left, right, basis=inner.basis, name=f"action on {name}" if name else "", check=self.check)
        return AlgebraicModule(A, inner, act, name=name, check=self.check)

    def _construct(self, doc, path) -> ProductAlgebra:
        kind = doc.get("kind")
        args = doc.get("args", {})
        ap = f"{path}.args"
        if kind not in CONSTRUCT_KINDS:
            raise ParseError(f"unknown construct kind {kind!r}; expected one of {CONSTRUCT_KINDS}", path=f"{path}.kind")
        if kind in ("bowtie", "ltimes"):
            m = self.ref(args.get("module"), AlgebraicModule, f"{ap}.module")
            return bowtie(m) if kind == "bowtie" else module_extension(m)
        if kind == "self_bowtie":
            return self_bowtie(self.ref(args.get("A"), FiniteAlgebra, f"{ap}.A"))
        A = self.ref(args.get("A"), FiniteAlgebra, f"{ap}.A")
        B = self.ref(args.get("B"), FiniteAlgebra, f"{ap}.B")
        if kind == "direct_sum":
            return direct_sum(A, B)
        if kind == "theta_lau":
            theta = [parse_rational(v, f"{ap}.theta[{i}]") for i, v in enumerate(args.get("theta", []))]
            return theta_lau(A, B, theta)
        T = args.get("T", [])
        mat = np.array([[parse_rational(v, f"{ap}.T[{r}][{c}]") for c, v in enumerate(row)]
                        for r, row in enumerate(T)], dtype=object)
        return t_lau(A, B, mat)


def loads(text: str, check: bool = True) -> dict[str, object]:
    """Parse a document; returns all named objects in definition order.

    With ``check=False`` algebras and modules are built without axiom
    validation (constructions still validate their inputs).
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    docs = data["objects"] if isinstance(data, dict) and "objects" in data else [data]
    if not isinstance(docs, list):
        raise ParseError("'objects' must be a list", path="objects")
    res = _Resolver(check)
    for n, doc in enumerate(docs):
        path = f"objects[{n}]" if len(docs) > 1 or "objects" in data else "$"
        obj = res.build(doc, path)
        key = doc.get("name") or f"#{n}"
        res.objects[key] = obj
    return res.objects


def load(path, check: bool = True) -> dict[str, object]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text, check)


def load_one(path, prefer=None):
    """The last object in a file (optionally the last of a given type)."""
    objs = list(load(path).values())
    if prefer is not None:
        objs = [o for o in objs if isinstance(o, prefer)] or objs
    if not objs:
        raise ParseError(f"{path}: empty document")
    return objs[-1]


def _sparse(t: np.ndarray) -> list:
    out = []
    for idx in zip(*np.nonzero(np.asarray(t != 0, dtype=bool))):
        out.append([int(i) for i in idx] + [format_rational(t[idx])])
    return out


def algebra_doc(A: FiniteAlgebra) -> dict:
    doc = {"type": "algebra", "name": A.name, "dim": A.dim, "basis": list(A.basis), "mult": _sparse(A.mult)}
    if A.unit is not None:
        doc["unit"] = [format_rational(u) for u in A.unit]
    return doc


def module_doc(m: AlgebraicModule, base_ref: str) -> dict:
    return {
        "type": "module", "name": m.name, "base": base_ref, "inner_name": m.inner.name,
        "dim": m.dim_x, "basis": list(m.inner.basis),
        "inner_mult": _sparse(m.inner.mult), "left": _sparse(m.action.left), "right": _sparse(m.action.right),
    }


def document(m: AlgebraicModule, extra: dict | None = None) -> dict:
    """A self-contained document: base algebra, module and its bowtie."""
    base = algebra_doc(m.base)
    base["name"] = base["name"] or "A"
    mod = module_doc(m, base["name"])
    mod["name"] = mod["name"] or "X"
    if mod["name"] == base["name"]:
        mod["name"] += " module"
    objs = [base, mod, {"type": "construct", "name": f"{mod['name']} product", "kind": "bowtie",
                        "args": {"module": mod["name"]}}]
    doc = {"objects": objs}
    if extra:
        doc.update(extra)
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, ensure_ascii=False) + "\n"
