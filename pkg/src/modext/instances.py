"""Small named algebras and algebraic modules, and the default corpus.

Recipes are plain data so they can be stored next to pinned constants:

    InstanceRecipe("T2 on T2", "self_module", {"A": {"kind": "matrix_upper", "n": 2}})

Algebra kinds return a :class:`FiniteAlgebra`, module kinds an
:class:`AlgebraicModule`.  Any module recipe may carry a ``change_of_basis``
parameter ``{"A": P, "X": Q}`` (invertible matrices, columns are the new
basis vectors) which transports the whole structure.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import product

import numpy as np

from .constructions import field_algebra, self_module, t_module, theta_module, zero_algebra_like
from .core import AlgebraicModule, Bimodule, FiniteAlgebra, identity, validate_algebraic_module, zeros
from .linalg import rank, rref

__all__ = [
    "ALGEBRA_KINDS",
    "MODULE_KINDS",
    "InstanceRecipe",
    "RecipeError",
    "materialize",
    "matrix_full",
    "matrix_upper",
    "zero_algebra",
    "cyclic_group_algebra",
    "truncated_poly",
    "direct_product",
    "transport",
    "curated_recipes",
    "generate_corpus",
    "corpus_recipes",
    "load_pins",
    "write_corpus",
    "slug",
    "DEFAULT_LIMITS",
]

ALGEBRA_KINDS = ("field", "zero_algebra", "matrix_full", "matrix_upper", "group_algebra", "truncated_poly",
                 "direct_product")
MODULE_KINDS = ("theta_action", "t_action", "self_module", "trivial_product_module")
DEFAULT_LIMITS = {"dim_a": 3, "dim_x": 3, "random": 6}


class RecipeError(ValueError):
    pass


@dataclass(frozen=True)
class InstanceRecipe:
    name: str
    kind: str
    params: dict = field(default_factory=dict)
    pins: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "kind": self.kind, "params": self.params, "pins": self.pins}


# ---------------------------------------------------------------------------
# algebras

def matrix_full(n: int) -> FiniteAlgebra:
    idx = [(i, j) for i in range(n) for j in range(n)]
    pos = {p: k for k, p in enumerate(idx)}
    c = zeros(n * n, n * n, n * n)
    for (i, j), (k, l) in product(idx, idx):
        if j == k:
            c[pos[i, j], pos[k, l], pos[i, l]] = Fraction(1)
    unit = zeros(n * n)
    for i in range(n):
        unit[pos[i, i]] = Fraction(1)
    return FiniteAlgebra(c, tuple(f"e{i+1}{j+1}" for i, j in idx), unit, f"M{n}")


def matrix_upper(n: int) -> FiniteAlgebra:
    idx = [(i, j) for i in range(n) for j in range(i, n)]
    pos = {p: k for k, p in enumerate(idx)}
    d = len(idx)
    c = zeros(d, d, d)
    for (i, j), (k, l) in product(idx, idx):
        if j == k:
            c[pos[i, j], pos[k, l], pos[i, l]] = Fraction(1)
    unit = zeros(d)
    for i in range(n):
        unit[pos[i, i]] = Fraction(1)
    return FiniteAlgebra(c, tuple(f"e{i+1}{j+1}" for i, j in idx), unit, f"T{n}")


def zero_algebra(d: int) -> FiniteAlgebra:
    return FiniteAlgebra(zeros(d, d, d), tuple(f"z{i}" for i in range(d)), None, f"Z{d}")


def cyclic_group_algebra(n: int) -> FiniteAlgebra:
    """Q[C_n] with basis g^0 = e, g^1 = s, g^2, ..."""
    c = zeros(n, n, n)
    for i, j in product(range(n), repeat=2):
        c[i, j, (i + j) % n] = Fraction(1)
    labels = ["e", "s"] + [f"s{k}" for k in range(2, n)]
    unit = zeros(n)
    unit[0] = Fraction(1)
    return FiniteAlgebra(c, tuple(labels[:n]), unit, f"Q[C{n}]")


def truncated_poly(n: int) -> FiniteAlgebra:
    """Non-unital x Q[x] / (x^(n+1)): basis x, x^2, ..., x^n."""
    c = zeros(n, n, n)
    for i, j in product(range(n), repeat=2):
        if i + j + 2 <= n:
            c[i, j, i + j + 1] = Fraction(1)
    return FiniteAlgebra(c, tuple("x" if k == 1 else f"x{k}" for k in range(1, n + 1)), None, f"N{n}")


def direct_product(*factors: FiniteAlgebra) -> FiniteAlgebra:
    """A_1 × ... × A_r with componentwise product."""
    d = sum(f.dim for f in factors)
    c = zeros(d, d, d)
    labels, off = [], 0
    units = [f.computed_unit for f in factors]
    unit = zeros(d) if all(u is not None for u in units) else None
    for f, u in zip(factors, units):
        s = slice(off, off + f.dim)
        c[s, s, s] = f.mult
        if unit is not None:
            unit[s] = u
        labels += [f"{f.name or 'A'}.{b}" for b in f.basis]
        off += f.dim
    return FiniteAlgebra(c, tuple(labels), unit, "×".join(f.name or "A" for f in factors))


# ---------------------------------------------------------------------------
# basis change

def _inverse(P: np.ndarray) -> np.ndarray:
    n = P.shape[0]
    if P.shape != (n, n) or rank(P) != n:
        raise RecipeError("change of basis must be an invertible square matrix")
    rows, _ = rref(np.hstack([P, identity(n)]))
    return np.array(rows, dtype=object)[:, n:]


def _as_matrix(m) -> np.ndarray:
    return np.array([[Fraction(v) for v in row] for row in m], dtype=object)


def transport(m: AlgebraicModule, PA, PX, name: str | None = None) -> AlgebraicModule:
    """The same algebraic module written in the bases given by the columns of PA and PX."""
    PA, PX = _as_matrix(PA), _as_matrix(PX)
    QA, QX = _inverse(PA), _inverse(PX)
    A, X = m.base, m.inner
    ca = np.einsum("ai,bj,abc,kc->ijk", PA, PA, A.mult, QA)
    cx = np.einsum("ai,bj,abc,kc->ijk", PX, PX, X.mult, QX)
    ua = None if A.computed_unit is None else QA @ A.computed_unit
    ux = None if X.computed_unit is None else QX @ X.computed_unit
    A2 = FiniteAlgebra(ca, tuple(f"{b}'" for b in A.basis), ua, f"{A.name}'")
    X2 = FiniteAlgebra(cx, tuple(f"{b}'" for b in X.basis), ux, f"{X.name}'")
    left = np.einsum("ai,bp,abc,qc->ipq", PA, PX, m.action.left, QX)
    right = np.einsum("bp,ai,bac,qc->piq", PX, PA, m.action.right, QX)
    act = Bimodule(A2, left, right, basis=X2.basis, name=f"{m.action.name}'")
    return AlgebraicModule(A2, X2, act, name=name or f"{m.name} (new basis)")


# ---------------------------------------------------------------------------
# recipes

def _rationals(v) -> list[Fraction]:
    return [Fraction(x) for x in v]


def _algebra(spec) -> FiniteAlgebra:
    if isinstance(spec, FiniteAlgebra):
        return spec
    if isinstance(spec, InstanceRecipe):
        spec = {"kind": spec.kind, **spec.params}
    obj = materialize(spec)
    if not isinstance(obj, FiniteAlgebra):
        raise RecipeError(f"expected an algebra recipe, got kind {spec.get('kind')!r}")
    return obj


def _module(spec) -> AlgebraicModule:
    if isinstance(spec, AlgebraicModule):
        return spec
    obj = materialize(spec)
    if not isinstance(obj, AlgebraicModule):
        raise RecipeError(f"expected a module recipe, got kind {spec.get('kind')!r}")
    return obj


def _group(name: str) -> int:
    if isinstance(name, int):
        return name
    if isinstance(name, str) and name.upper().startswith("C") and name[1:].isdigit():
        return int(name[1:])
    raise RecipeError(f"unsupported group {name!r}; only cyclic groups C<n> are available")


def materialize(recipe) -> FiniteAlgebra | AlgebraicModule:
    """Build and validate the object a recipe describes."""
    if isinstance(recipe, InstanceRecipe):
        kind, params, name = recipe.kind, dict(recipe.params), recipe.name
    elif isinstance(recipe, dict):
        params = dict(recipe)
        kind, name = params.pop("kind", None), params.pop("name", "")
    else:
        raise RecipeError(f"not a recipe: {recipe!r}")
    cob = params.pop("change_of_basis", None)
    if kind == "field":
        obj = field_algebra()
    elif kind == "zero_algebra":
        obj = zero_algebra(int(params.get("d", 1)))
    elif kind == "matrix_full":
        obj = matrix_full(int(params["n"]))
    elif kind == "matrix_upper":
        obj = matrix_upper(int(params["n"]))
    elif kind == "group_algebra":
        obj = cyclic_group_algebra(_group(params["group"]))
    elif kind == "truncated_poly":
        obj = truncated_poly(int(params["n"]))
    elif kind == "direct_product":
        obj = direct_product(*[_algebra(f) for f in params["factors"]])
    elif kind == "theta_action":
        obj = theta_module(_algebra(params["A"]), _algebra(params["B"]), _rationals(params["theta"]))
    elif kind == "t_action":
        A, B = _algebra(params["A"]), _algebra(params["B"])
        T = _as_matrix(params["T"]) if params.get("T") is not None else zeros(B.dim, A.dim)
        obj = t_module(A, B, T)
    elif kind == "self_module":
        obj = self_module(_algebra(params["A"]))
    elif kind == "trivial_product_module":
        base = _module(params["of"])
        obj = AlgebraicModule(base.base, zero_algebra_like(base.inner), base.action,
                              name=f"{base.name} (zero product)")
    else:
        raise RecipeError(f"unknown recipe kind {kind!r}")
    if cob is not None:
        if not isinstance(obj, AlgebraicModule):
            raise RecipeError("change_of_basis applies to module recipes only")
        obj = transport(obj, cob["A"], cob["X"])
    if name:
        object.__setattr__(obj, "name", name)
    if isinstance(obj, AlgebraicModule) and not validate_algebraic_module(obj).ok:
        raise RecipeError(f"recipe {name or kind} produced an invalid module")
    return obj


Q = {"kind": "field"}
T2 = {"kind": "matrix_upper", "n": 2}
Z1 = {"kind": "zero_algebra", "d": 1}
Z2 = {"kind": "zero_algebra", "d": 2}
C2 = {"kind": "group_algebra", "group": "C2"}
C3 = {"kind": "group_algebra", "group": "C3"}
N2 = {"kind": "truncated_poly", "n": 2}
QQ = {"kind": "direct_product", "factors": [Q, {"kind": "matrix_full", "n": 1}]}


def curated_recipes() -> list[InstanceRecipe]:
    R = InstanceRecipe
    return [
        R("Q on Q", "self_module", {"A": Q}),
        R("T2 on T2", "self_module", {"A": T2}),
        R("C2 on C2", "self_module", {"A": C2}),
        R("C3 on C3", "self_module", {"A": C3}),
        R("QxQ on QxQ", "self_module", {"A": QQ}),
        R("Z2 on Z2", "self_module", {"A": Z2}),
        R("N2 on N2", "self_module", {"A": N2}),
        R("Z1 on Z1", "self_module", {"A": Z1}),
        R("T2 theta(e11) Z1", "theta_action", {"A": T2, "B": Z1, "theta": [1, 0, 0]}),
        R("T2 theta(e22) Q", "theta_action", {"A": T2, "B": Q, "theta": [0, 0, 1]}),
        R("Z2 unitized", "theta_action", {"A": Q, "B": Z2, "theta": [1]}),
        R("N2 unitized", "theta_action", {"A": Q, "B": N2, "theta": [1]}),
        R("T2 unitized", "theta_action", {"A": Q, "B": T2, "theta": [1]}),
        R("C2 sign Z1", "theta_action", {"A": C2, "B": Z1, "theta": [1, -1]}),
        R("C2 trivial C2", "theta_action", {"A": C2, "B": C2, "theta": [1, 1]}),
        R("T2 to Q via e11", "t_action", {"A": T2, "B": Q, "T": [[1, 0, 0]]}),
        R("Q to T2 via unit", "t_action", {"A": Q, "B": T2, "T": [[1], [0], [1]]}),
        R("QxQ to T2 via idempotents", "t_action", {"A": QQ, "B": T2, "T": [[1, 0], [0, 0], [0, 1]]}),
        R("C2 to QxQ via characters", "t_action", {"A": C2, "B": QQ, "T": [[1, 1], [1, -1]]}),
        R("T2 + Z1", "t_action", {"A": T2, "B": Z1, "T": None}),
        R("Z1 + T2", "t_action", {"A": Z1, "B": T2, "T": None}),
        R("Q + N2", "t_action", {"A": Q, "B": N2, "T": None}),
        R("T2 on T2, zero product", "trivial_product_module", {"of": {"kind": "self_module", "A": T2}}),
        R("C2 on C2, zero product", "trivial_product_module", {"of": {"kind": "self_module", "A": C2}}),
        R("Q on Q, zero product", "trivial_product_module", {"of": {"kind": "self_module", "A": Q}}),
        R("T2 theta(e11) Q, zero product", "trivial_product_module",
          {"of": {"kind": "theta_action", "A": T2, "B": Q, "theta": [1, 0, 0]}}),
    ]


def _random_invertible(rng: random.Random, n: int) -> list[list[Fraction]]:
    while True:
        m = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        if rank(_as_matrix(m)) == n:
            return m


def _random_recipes(rng: random.Random, count: int, limits: dict) -> list[InstanceRecipe]:
    out = []
    base = [r for r in curated_recipes() if r.kind != "trivial_product_module"]
    for k in range(count):
        if k % 2 == 0:
            # orthogonal idempotents e11 + t e12, e22 - t e12 of T2 as images of Q×Q
            t = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
            keep = rng.choice([(1, 1), (1, 0), (0, 1)])
            cols = [[keep[0], 0], [keep[0] * t, -keep[1] * t], [0, keep[1]]]
            T = [[str(v) for v in row] for row in cols]
            out.append(InstanceRecipe(f"QxQ to T2 random {k}", "t_action", {"A": QQ, "B": T2, "T": T}))
        else:
            src = rng.choice(base)
            m = materialize(src)
            if m.dim_a > limits["dim_a"] or m.dim_x > limits["dim_x"]:
                continue
            PA = _random_invertible(rng, m.dim_a)
            PX = _random_invertible(rng, m.dim_x)
            params = dict(src.params)
            params["change_of_basis"] = {"A": [[str(v) for v in r] for r in PA], "X": [[str(v) for v in r] for r in PX]}
            out.append(InstanceRecipe(f"{src.name} (basis {k})", src.kind, params))
    return out


def corpus_recipes(seed: int = 0, limits: dict | None = None) -> list[InstanceRecipe]:
    lim = {**DEFAULT_LIMITS, **(limits or {})}
    rng = random.Random(seed)
    recipes = curated_recipes() + _random_recipes(rng, int(lim["random"]), lim)
    pins = load_pins()
    out = []
    for r in recipes:
        out.append(InstanceRecipe(r.name, r.kind, r.params, pins.get(r.name, {})))
    return out


def generate_corpus(seed: int = 0, limits: dict | None = None) -> list[AlgebraicModule]:
    """Curated modules plus seeded random ones, all validated, within the dimension limits."""
    lim = {**DEFAULT_LIMITS, **(limits or {})}
    out = []
    for r in corpus_recipes(seed, lim):
        m = materialize(r)
        if m.dim_a <= lim["dim_a"] and m.dim_x <= lim["dim_x"]:
            out.append(m)
    return out


def load_pins() -> dict:
    try:
        text = resources.files("modext").joinpath("data/pins.json").read_text()
    except FileNotFoundError:
        return {}
    return json.loads(text).get("instances", {})


def slug(name: str) -> str:
    out = "".join(c.lower() if c.isalnum() else "-" for c in name)
    while "--" in out:
        out = out.replace("--", "-")
    return out.strip("-")


def write_corpus(directory, seed: int = 0, limits: dict | None = None) -> list[str]:
    """One definition file per corpus instance; returns the written paths."""
    from pathlib import Path

    from .formats import document, dumps

    root = Path(directory)
    root.mkdir(parents=True, exist_ok=True)
    lim = {**DEFAULT_LIMITS, **(limits or {})}
    paths = []
    for r in corpus_recipes(seed, lim):
        m = materialize(r)
        if m.dim_a > lim["dim_a"] or m.dim_x > lim["dim_x"]:
            continue
        path = root / f"{slug(r.name)}.json"
        path.write_text(dumps(document(m, {"recipe": {"kind": r.kind, "params": r.params}})))
        paths.append(str(path))
    return paths
