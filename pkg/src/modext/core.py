"""Finite-dimensional algebras, bimodules and algebraic modules over Q.

Conventions
-----------
An algebra of dimension ``d`` is stored as a structure-constant tensor
``mult[i, j, k]`` with ``e_i e_j = sum_k mult[i, j, k] e_k``.

A bimodule of dimension ``m`` over it stores two tensors::

    left[i, p, q]   coefficient of m_q in  e_i . m_p
    right[p, i, q]  coefficient of m_q in  m_p . e_i

For computations the same data is also exposed as operator matrices acting
on coordinate columns: ``L[i]`` is the matrix of ``m -> e_i m`` and ``R[i]``
the matrix of ``m -> m e_i``.

All entries are ``fractions.Fraction``; nothing in this package uses floats.
"""
from __future__ import annotations

from dataclasses import InitVar, dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Sequence

import numpy as np

from .linalg import as_object_array, solve

__all__ = [
    "StructureError",
    "AxiomError",
    "Violation",
    "ValidationReport",
    "FiniteAlgebra",
    "Bimodule",
    "AlgebraicModule",
    "zeros",
    "identity",
    "basis_vector",
    "validate_algebra",
    "validate_bimodule",
    "validate_algebraic_module",
    "multiply",
    "find_unit",
    "regular_bimodule",
    "algebra",
]


class StructureError(ValueError):
    """Tensor shapes disagree with declared dimensions."""


class AxiomError(ValueError):
    """An algebraic axiom fails; ``report`` lists every witness."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__(str(report))


def zeros(*shape: int) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr.fill(Fraction(0))
    return arr


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def basis_vector(n: int, i: int) -> np.ndarray:
    v = zeros(n)
    v[i] = Fraction(1)
    return v


def _vec(v) -> tuple[str, ...]:
    return tuple(str(x) for x in np.asarray(v).reshape(-1))


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]
    lhs: tuple[str, ...] = ()
    rhs: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"{self.axiom} fails at {self.witness}: lhs={list(self.lhs)} rhs={list(self.rhs)}"


@dataclass(frozen=True)
class ValidationReport:
    subject: str
    violations: tuple[Violation, ...] = ()
    flags: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def axioms_failed(self) -> list[str]:
        seen = []
        for v in self.violations:
            if v.axiom not in seen:
                seen.append(v.axiom)
        return seen

    def __str__(self) -> str:
        if self.ok:
            flags = ", ".join(k for k, v in self.flags.items() if v is True)
            return f"{self.subject}: valid" + (f" ({flags})" if flags else "")
        lines = [f"{self.subject}: {len(self.violations)} violation(s)"]
        lines += [f"  {v}" for v in self.violations[:20]]
        if len(self.violations) > 20:
            lines.append(f"  ... {len(self.violations) - 20} more")
        return "\n".join(lines)


def _mismatches(lhs: np.ndarray, rhs: np.ndarray, axiom: str, nidx: int) -> list[Violation]:
    """Compare two arrays whose last axis is the output coordinate."""
    out = []
    diff = np.not_equal(lhs, rhs).astype(bool)
    if not diff.any():
        return out
    bad = diff.reshape(-1, diff.shape[-1]).any(axis=1).reshape(diff.shape[:-1])
    for idx in zip(*np.nonzero(bad)):
        idx = tuple(int(i) for i in idx)
        out.append(Violation(axiom, idx[:nidx], _vec(lhs[idx]), _vec(rhs[idx])))
    return out


def find_unit(mult: np.ndarray) -> np.ndarray | None:
    """Solve ``u e_i = e_i u = e_i`` for all i; the unit if one exists."""
    d = mult.shape[0]
    # u e_i = sum_j u_j c[j, i, :]  and  e_i u = sum_j u_j c[i, j, :]
    rows, rhs = [], []
    for i in range(d):
        for k in range(d):
            rows.append([mult[j, i, k] for j in range(d)])
            rhs.append(Fraction(int(i == k)))
            rows.append([mult[i, j, k] for j in range(d)])
            rhs.append(Fraction(int(i == k)))
    return solve(np.array(rows, dtype=object), rhs)


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    """Associative algebra over Q given by structure constants.

    Construction validates associativity (and the declared unit) eagerly and
    raises :class:`AxiomError` on failure; pass ``check=False`` to build an
    unchecked object, e.g. to inspect a broken table with
    :func:`validate_algebra`.
    """

    mult: np.ndarray
    basis: tuple[str, ...] = ()
    unit: np.ndarray | None = None
    name: str = ""
    check: InitVar[bool] = True

    def __post_init__(self, check: bool):
        mult = as_object_array(self.mult)
        if mult.ndim != 3 or not (mult.shape[0] == mult.shape[1] == mult.shape[2]) or mult.shape[0] < 1:
            raise StructureError(f"structure tensor must have shape (d, d, d), d >= 1; got {mult.shape}")
        object.__setattr__(self, "mult", mult)
        d = mult.shape[0]
        basis = tuple(self.basis) if self.basis else tuple(f"e{i}" for i in range(d))
        if len(basis) != d:
            raise StructureError(f"{len(basis)} basis labels for dimension {d}")
        object.__setattr__(self, "basis", basis)
        if self.unit is not None:
            unit = as_object_array(self.unit).reshape(-1)
            if unit.shape != (d,):
                raise StructureError(f"unit vector has length {unit.shape[0]}, expected {d}")
            object.__setattr__(self, "unit", unit)
        if check:
            report = validate_algebra(self)
            if not report.ok:
                raise AxiomError(report)

    @property
    def dim(self) -> int:
        return self.mult.shape[0]

    @cached_property
    def L(self) -> np.ndarray:
        """``L[i]`` is the matrix of left multiplication by e_i."""
        return self.mult.transpose(0, 2, 1)

    @cached_property
    def R(self) -> np.ndarray:
        """``R[i]`` is the matrix of right multiplication by e_i."""
        return self.mult.transpose(1, 2, 0)

    def mul(self, u, v) -> np.ndarray:
        return multiply(self, u, v)

    def e(self, i: int) -> np.ndarray:
        return basis_vector(self.dim, i)

    def zero(self) -> np.ndarray:
        return zeros(self.dim)

    @cached_property
    def computed_unit(self) -> np.ndarray | None:
        if self.unit is not None:
            return self.unit
        return find_unit(self.mult)

    @property
    def is_unital(self) -> bool:
        return self.computed_unit is not None

    @cached_property
    def is_commutative(self) -> bool:
        return bool(np.equal(self.mult, self.mult.transpose(1, 0, 2)).astype(bool).all())

    def products_span(self) -> list[np.ndarray]:
        """The vectors e_i e_j, spanning A^2."""
        return [self.mult[i, j] for i, j in product(range(self.dim), repeat=2)]

    def same_structure(self, other: "FiniteAlgebra") -> bool:
        return self.mult.shape == other.mult.shape and bool(
            np.equal(self.mult, other.mult).astype(bool).all()
        )

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<FiniteAlgebra{label} dim={self.dim}>"


def multiply(alg: FiniteAlgebra, u, v) -> np.ndarray:
    """Bilinear product of coefficient vectors ``u``, ``v`` in ``alg``."""
    u = as_object_array(u).reshape(-1)
    v = as_object_array(v).reshape(-1)
    if u.shape != (alg.dim,) or v.shape != (alg.dim,):
        raise StructureError(f"vectors of length {u.shape[0]}, {v.shape[0]} for algebra of dim {alg.dim}")
    return np.einsum("i,j,ijk->k", u, v, alg.mult)


def validate_algebra(alg: FiniteAlgebra) -> ValidationReport:
    """Exact associativity check over all basis triples (plus declared unit)."""
    c = alg.mult
    d = alg.dim
    # (e_i e_j) e_k  vs  e_i (e_j e_k)
    lhs = np.einsum("ijm,mkq->ijkq", c, c)
    rhs = np.einsum("jkm,imq->ijkq", c, c)
    violations = _mismatches(lhs, rhs, "associativity", 3)
    if alg.unit is not None:
        u = alg.unit
        left = np.einsum("j,jiq->iq", u, c)
        right = np.einsum("j,ijq->iq", u, c)
        eye = identity(d)
        violations += _mismatches(left, eye, "left unit", 1)
        violations += _mismatches(right, eye, "right unit", 1)
    flags = {
        "associative": not any(v.axiom == "associativity" for v in violations),
        "unital": alg.unit is not None and not any("unit" in v.axiom for v in violations),
    }
    if alg.unit is None:
        flags["unital"] = find_unit(c) is not None
    return ValidationReport(alg.name or f"algebra(dim={d})", tuple(violations), flags)


@dataclass(frozen=True, eq=False)
class Bimodule:
    """A finite-dimensional bimodule over ``algebra`` (see module docstring)."""

    algebra: FiniteAlgebra
    left: np.ndarray
    right: np.ndarray
    basis: tuple[str, ...] = ()
    name: str = ""
    check: InitVar[bool] = True

    def __post_init__(self, check: bool):
        left = as_object_array(self.left)
        right = as_object_array(self.right)
        d = self.algebra.dim
        if left.ndim != 3 or left.shape[0] != d or left.shape[1] != left.shape[2]:
            raise StructureError(f"left action must have shape ({d}, m, m); got {left.shape}")
        m = left.shape[1]
        if right.shape != (m, d, m):
            raise StructureError(f"right action must have shape ({m}, {d}, {m}); got {right.shape}")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        basis = tuple(self.basis) if self.basis else tuple(f"m{p}" for p in range(m))
        if len(basis) != m:
            raise StructureError(f"{len(basis)} basis labels for module of dimension {m}")
        object.__setattr__(self, "basis", basis)
        if check:
            report = validate_bimodule(self)
            if not report.ok:
                raise AxiomError(report)

    @classmethod
    def from_matrices(cls, algebra: FiniteAlgebra, L, R, **kw) -> "Bimodule":
        """Build from operator matrices ``L[i]`` (m -> e_i m) and ``R[i]`` (m -> m e_i)."""
        L = as_object_array(L)
        R = as_object_array(R)
        if L.ndim != 3 or R.ndim != 3:
            raise StructureError("operator stacks must be 3-D")
        return cls(algebra, L.transpose(0, 2, 1), R.transpose(2, 0, 1), **kw)

    @property
    def dim(self) -> int:
        return self.left.shape[1]

    @property
    def algebra_dim(self) -> int:
        return self.algebra.dim

    @cached_property
    def L(self) -> np.ndarray:
        return self.left.transpose(0, 2, 1)

    @cached_property
    def R(self) -> np.ndarray:
        return self.right.transpose(1, 2, 0)

    def act_left(self, a, m) -> np.ndarray:
        return np.einsum("i,p,ipq->q", as_object_array(a).reshape(-1), as_object_array(m).reshape(-1), self.left)

    def act_right(self, m, a) -> np.ndarray:
        return np.einsum("p,i,piq->q", as_object_array(m).reshape(-1), as_object_array(a).reshape(-1), self.right)

    @cached_property
    def unital_action(self) -> bool:
        """Whether the algebra's unit (if any) acts as the identity on both sides."""
        u = self.algebra.computed_unit
        if u is None:
            return False
        eye = identity(self.dim)
        lu = np.einsum("i,iqp->qp", u, self.L)
        ru = np.einsum("i,iqp->qp", u, self.R)
        return bool(np.equal(lu, eye).astype(bool).all() and np.equal(ru, eye).astype(bool).all())

    def same_structure(self, other: "Bimodule") -> bool:
        return (
            self.left.shape == other.left.shape
            and self.right.shape == other.right.shape
            and bool(np.equal(self.left, other.left).astype(bool).all())
            and bool(np.equal(self.right, other.right).astype(bool).all())
        )

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Bimodule{label} dim={self.dim} over dim {self.algebra.dim}>"


def regular_bimodule(alg: FiniteAlgebra) -> Bimodule:
    """``alg`` acting on itself by multiplication."""
    return Bimodule(alg, alg.mult, alg.mult, basis=alg.basis, name=f"{alg.name or 'A'} (regular)", check=False)


def validate_bimodule(mod: Bimodule) -> ValidationReport:
    """Check a(bm)=(ab)m, (ma)b=m(ab), (am)b=a(mb) on all basis triples."""
    c = mod.algebra.mult
    L, R = mod.L, mod.R
    # operators indexed [i, j, q, p]: output q, input m_p
    lhs = np.einsum("iqr,jrp->ijpq", L, L)
    rhs = np.einsum("ijk,kqp->ijpq", c, L)
    violations = _mismatches(lhs, rhs, "a(bm)=(ab)m", 3)
    # (m e_i) e_j = m (e_i e_j):  R_j R_i = sum_k c_ijk R_k
    lhs = np.einsum("jqr,irp->ijpq", R, R)
    rhs = np.einsum("ijk,kqp->ijpq", c, R)
    violations += _mismatches(lhs, rhs, "(ma)b=m(ab)", 3)
    # (e_i m) e_j = e_i (m e_j):  R_j L_i = L_i R_j
    lhs = np.einsum("jqr,irp->ijpq", R, L)
    rhs = np.einsum("iqr,jrp->ijpq", L, R)
    violations += _mismatches(lhs, rhs, "(am)b=a(mb)", 3)
    flags = {"unital_action": mod.unital_action if not violations else False}
    return ValidationReport(mod.name or f"bimodule(dim={mod.dim})", tuple(violations), flags)


@dataclass(frozen=True, eq=False)
class AlgebraicModule:
    """An algebra X (``inner``) that is also a bimodule over A (``base``).

    The action must satisfy the mixed associativity laws
    a(xy) = (ax)y, (xy)a = x(ya) and (xa)y = x(ay).
    """

    base: FiniteAlgebra
    inner: FiniteAlgebra
    action: Bimodule
    name: str = ""
    check: InitVar[bool] = True

    def __post_init__(self, check: bool):
        if self.action.algebra.dim != self.base.dim:
            raise StructureError(
                f"action is over an algebra of dim {self.action.algebra.dim}, base has dim {self.base.dim}"
            )
        if self.action.dim != self.inner.dim:
            raise StructureError(f"action module has dim {self.action.dim}, inner algebra has dim {self.inner.dim}")
        if check:
            report = validate_algebraic_module(self)
            if not report.ok:
                raise AxiomError(report)

    @property
    def dim_a(self) -> int:
        return self.base.dim

    @property
    def dim_x(self) -> int:
        return self.inner.dim

    @cached_property
    def has_trivial_product(self) -> bool:
        return not any(self.inner.mult.reshape(-1))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<AlgebraicModule{label} dim A={self.dim_a}, dim X={self.dim_x}>"


def validate_algebraic_module(mod: AlgebraicModule) -> ValidationReport:
    """Bimodule axioms, associativity of X, and the three compatibility laws."""
    if mod.action.algebra.dim != mod.base.dim or mod.action.dim != mod.inner.dim:
        raise StructureError("action dimensions do not match base/inner algebras")
    violations: list[Violation] = []
    for v in validate_algebra(mod.inner).violations:
        violations.append(Violation("X: " + v.axiom, v.witness, v.lhs, v.rhs))
    violations += list(validate_bimodule(mod.action).violations)
    cx = mod.inner.mult
    left, right = mod.action.left, mod.action.right
    # a_i (x_s x_t) = (a_i x_s) x_t
    lhs = np.einsum("stp,ipq->istq", cx, left)
    rhs = np.einsum("isu,utq->istq", left, cx)
    violations += _mismatches(lhs, rhs, "a(xy)=(ax)y", 3)
    # (x_s x_t) a_i = x_s (x_t a_i)
    lhs = np.einsum("stp,piq->stiq", cx, right)
    rhs = np.einsum("tiu,suq->stiq", right, cx)
    violations += _mismatches(lhs, rhs, "(xy)a=x(ya)", 3)
    # (x_s a_i) x_t = x_s (a_i x_t)
    lhs = np.einsum("siu,utq->sitq", right, cx)
    rhs = np.einsum("itu,suq->sitq", left, cx)
    violations += _mismatches(lhs, rhs, "(xa)y=x(ay)", 3)
    flags = {"unital_action": mod.action.unital_action, "trivial_product": mod.has_trivial_product}
    return ValidationReport(mod.name or "algebraic module", tuple(violations), flags)


def algebra(table: dict | Sequence, dim: int, basis: Sequence[str] = (), name: str = "", unit=None) -> FiniteAlgebra:
    """Convenience constructor from sparse entries ``{(i, j): {k: coeff}}`` or ``[(i, j, k, coeff)]``."""
    mult = zeros(dim, dim, dim)
    if isinstance(table, dict):
        for (i, j), out in table.items():
            for k, v in out.items():
                mult[i, j, k] = Fraction(v)
    else:
        for i, j, k, v in table:
            mult[i, j, k] = Fraction(v)
    return FiniteAlgebra(mult, tuple(basis), unit, name)
