"""Generalized module extension A⋈X and its special cases.

Every carrier uses the fixed block layout: coordinates ``0..dim A-1`` are the
A-block and the remaining ``dim X`` coordinates are the X-block.  Each
constructor fills the carrier tensor from its own product formula and also
records the algebraic module it is a bowtie of, so the special cases can be
compared against :func:`bowtie` entrywise.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .core import (
    AlgebraicModule,
    Bimodule,
    FiniteAlgebra,
    StructureError,
    Violation,
    ValidationReport,
    find_unit,
    validate_algebraic_module,
    identity,
    zeros,
)
from .linalg import as_object_array

__all__ = [
    "PROVENANCES",
    "ConstructionError",
    "ProductAlgebra",
    "bowtie",
    "module_extension",
    "theta_lau",
    "t_lau",
    "direct_sum",
    "unitization",
    "self_bowtie",
    "self_module",
    "theta_module",
    "t_module",
    "zero_algebra_like",
    "field_algebra",
    "block_report",
]

PROVENANCES = ("bowtie", "module_extension", "theta_lau", "t_lau", "direct_sum", "unitization", "self_bowtie")


class ConstructionError(ValueError):
    """Input data does not satisfy a constructor's precondition."""

    def __init__(self, message: str, witness: tuple = ()):
        self.witness = witness
        super().__init__(message + (f" (witness {witness})" if witness else ""))


@dataclass(frozen=True, eq=False)
class ProductAlgebra:
    carrier: FiniteAlgebra
    module: AlgebraicModule
    provenance: str
    params: dict = field(default_factory=dict)
    warnings: tuple[str, ...] = ()

    @property
    def dim_a(self) -> int:
        return self.module.dim_a

    @property
    def dim_x(self) -> int:
        return self.module.dim_x

    @property
    def a_block(self) -> range:
        return range(0, self.dim_a)

    @property
    def x_block(self) -> range:
        return range(self.dim_a, self.dim_a + self.dim_x)

    @property
    def base(self) -> FiniteAlgebra:
        return self.module.base

    @property
    def inner(self) -> FiniteAlgebra:
        return self.module.inner

    def embed(self, a=None, x=None) -> np.ndarray:
        v = zeros(self.dim_a + self.dim_x)
        if a is not None:
            v[: self.dim_a] = as_object_array(a).reshape(-1)
        if x is not None:
            v[self.dim_a :] = as_object_array(x).reshape(-1)
        return v

    def split(self, v) -> tuple[np.ndarray, np.ndarray]:
        v = as_object_array(v).reshape(-1)
        return v[: self.dim_a], v[self.dim_a :]

    def __repr__(self) -> str:
        return f"<ProductAlgebra {self.provenance} dim A={self.dim_a}, dim X={self.dim_x}>"


def _carrier(aa, ax, xa, xx, dim_a: int, dim_x: int, labels, name: str) -> FiniteAlgebra:
    """Assemble a block tensor.

    ``aa[i, j, k]``: A-part of a_i a_j; ``ax[i, t, q]``: X-part of a_i·y_t;
    ``xa[s, j, q]``: X-part of x_s·b_j; ``xx[s, t, q]``: X-part of x_s y_t.
    All other blocks of the product are zero.
    """
    n = dim_a + dim_x
    c = zeros(n, n, n)
    A, X = slice(0, dim_a), slice(dim_a, n)
    c[A, A, A] = aa
    c[A, X, X] = ax
    c[X, A, X] = xa
    c[X, X, X] = xx
    unit = find_unit(c)
    return FiniteAlgebra(c, tuple(labels), unit, name)


def _labels(a: FiniteAlgebra, x: FiniteAlgebra) -> list[str]:
    return [f"A.{l}" for l in a.basis] + [f"X.{l}" for l in x.basis]


def _product(carrier: FiniteAlgebra, module: AlgebraicModule, provenance: str, **params) -> ProductAlgebra:
    warnings = tuple(params.pop("warnings", ()))
    return ProductAlgebra(carrier, module, provenance, params, warnings)


def bowtie(m: AlgebraicModule) -> ProductAlgebra:
    """A⋈X with (a,x)(b,y) = (ab, ay + xb + xy)."""
    if not isinstance(m, AlgebraicModule):
        raise TypeError("bowtie expects an AlgebraicModule")
    report = validate_algebraic_module(m)
    if not report.ok:
        raise ConstructionError(f"invalid algebraic module: {report.axioms_failed()}", report.violations[0].witness)
    A, X = m.base, m.inner
    carrier = _carrier(A.mult, m.action.left, m.action.right, X.mult, A.dim, X.dim, _labels(A, X),
                       f"{A.name or 'A'}⋈{X.name or 'X'}")
    return _product(carrier, m, "bowtie")


def zero_algebra_like(x: FiniteAlgebra) -> FiniteAlgebra:
    return FiniteAlgebra(zeros(x.dim, x.dim, x.dim), x.basis, None, f"{x.name or 'X'}(zero product)")


def module_extension(m: AlgebraicModule) -> ProductAlgebra:
    """A⋉X with (a,x)(b,y) = (ab, ay + xb); any product on X is discarded."""
    A, X = m.base, m.inner
    warnings = []
    if not m.has_trivial_product:
        warnings.append("inner product of X was nonzero and has been replaced by the zero product")
    x0 = zero_algebra_like(X)
    trivial = AlgebraicModule(A, x0, m.action, name=m.name)
    carrier = _carrier(A.mult, m.action.left, m.action.right, zeros(X.dim, X.dim, X.dim), A.dim, X.dim,
                       _labels(A, X), f"{A.name or 'A'}⋉{X.name or 'X'}")
    return _product(carrier, trivial, "module_extension", warnings=warnings)


def _character(A: FiniteAlgebra, theta) -> np.ndarray:
    th = as_object_array(theta).reshape(-1)
    if th.shape != (A.dim,):
        raise StructureError(f"character must be a 1x{A.dim} map, got {th.shape[0]} entries")
    if not any(th):
        raise ConstructionError("character must be nonzero")
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = sum(th[k] * A.mult[i, j, k] for k in range(A.dim))
            if lhs != th[i] * th[j]:
                raise ConstructionError("theta is not multiplicative", (i, j))
    return th


def theta_module(A: FiniteAlgebra, B: FiniteAlgebra, theta) -> AlgebraicModule:
    """B as an algebraic A-module with a·b = b·a = θ(a) b."""
    th = _character(A, theta)
    n = B.dim
    left = np.einsum("i,pq->ipq", th, identity(n))
    right = np.einsum("i,pq->piq", th, identity(n))
    act = Bimodule(A, left, right, basis=B.basis, name=f"θ-action on {B.name or 'B'}")
    return AlgebraicModule(A, B, act, name=f"θ-module {A.name or 'A'} on {B.name or 'B'}")


def theta_lau(A: FiniteAlgebra, B: FiniteAlgebra, theta) -> ProductAlgebra:
    """A ×_θ B with (a,b)(c,d) = (ac, θ(a)d + θ(c)b + bd)."""
    th = _character(A, theta)
    n = B.dim
    eye = identity(n)
    # a_i · d_t contributes θ(a_i) d_t; b_s · c_j contributes θ(c_j) b_s
    ax = np.einsum("i,tq->itq", th, eye)
    xa = np.einsum("j,sq->sjq", th, eye)
    carrier = _carrier(A.mult, ax, xa, B.mult, A.dim, n, _labels(A, B), f"{A.name or 'A'}×θ{B.name or 'B'}")
    return _product(carrier, theta_module(A, B, th), "theta_lau", A=A, B=B, theta=th)


def _homomorphism(A: FiniteAlgebra, B: FiniteAlgebra, T) -> np.ndarray:
    T = as_object_array(T)
    if T.ndim == 1 and B.dim == 1:
        T = T.reshape(1, -1)
    if T.shape != (B.dim, A.dim):
        raise StructureError(f"T must be a {B.dim}x{A.dim} matrix (columns are images of A's basis); got {T.shape}")
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = T @ A.mult[i, j]
            rhs = np.einsum("p,q,pqk->k", T[:, i], T[:, j], B.mult)
            if not np.equal(lhs, rhs).astype(bool).all():
                raise ConstructionError("T is not an algebra homomorphism", (i, j))
    return T


def t_module(A: FiniteAlgebra, B: FiniteAlgebra, T) -> AlgebraicModule:
    """B as an algebraic A-module with a·b = T(a)b and b·a = bT(a)."""
    T = _homomorphism(A, B, T)
    left = np.einsum("ri,rpq->ipq", T, B.mult)
    right = np.einsum("ri,prq->piq", T, B.mult)
    act = Bimodule(A, left, right, basis=B.basis, name=f"T-action on {B.name or 'B'}")
    return AlgebraicModule(A, B, act, name=f"T-module {A.name or 'A'} on {B.name or 'B'}")


def t_lau(A: FiniteAlgebra, B: FiniteAlgebra, T) -> ProductAlgebra:
    """A ×_T B with (a,b)(c,d) = (ac, T(a)d + bT(c) + bd)."""
    T = _homomorphism(A, B, T)
    cb = B.mult
    # T(a_i) d_t  and  b_s T(c_j)
    ax = np.einsum("ri,rtq->itq", T, cb)
    xa = np.einsum("rj,srq->sjq", T, cb)
    carrier = _carrier(A.mult, ax, xa, cb, A.dim, B.dim, _labels(A, B), f"{A.name or 'A'}×T{B.name or 'B'}")
    return _product(carrier, t_module(A, B, T), "t_lau", A=A, B=B, T=T)


def direct_sum(A: FiniteAlgebra, B: FiniteAlgebra) -> ProductAlgebra:
    """A ⊕ B with componentwise product (a,b)(c,d) = (ac, bd)."""
    n = B.dim
    carrier = _carrier(A.mult, zeros(A.dim, n, n), zeros(n, A.dim, n), B.mult, A.dim, n, _labels(A, B),
                       f"{A.name or 'A'}⊕{B.name or 'B'}")
    act = Bimodule(A, zeros(A.dim, n, n), zeros(n, A.dim, n), basis=B.basis, name="zero action")
    module = AlgebraicModule(A, B, act, name=f"{A.name or 'A'} ⊕ {B.name or 'B'}")
    return _product(carrier, module, "direct_sum", A=A, B=B)


def field_algebra() -> FiniteAlgebra:
    c = zeros(1, 1, 1)
    c[0, 0, 0] = Fraction(1)
    return FiniteAlgebra(c, ("1",), np.array([Fraction(1)], dtype=object), "Q")


def unitization(B: FiniteAlgebra) -> ProductAlgebra:
    """B# = Q ×_ι B."""
    q = field_algebra()
    p = theta_lau(q, B, [1])
    return ProductAlgebra(p.carrier, p.module, "unitization", {"A": q, "B": B, "theta": p.params["theta"]})


def self_module(A: FiniteAlgebra) -> AlgebraicModule:
    """A as an algebraic module over itself, acting by multiplication."""
    act = Bimodule(A, A.mult, A.mult, basis=A.basis, name=f"{A.name or 'A'} (regular)")
    return AlgebraicModule(A, A, act, name=f"{A.name or 'A'} on itself")


def self_bowtie(A: FiniteAlgebra) -> ProductAlgebra:
    p = bowtie(self_module(A))
    return ProductAlgebra(p.carrier, p.module, "self_bowtie", {"A": A})


def block_report(p: ProductAlgebra) -> ValidationReport:
    """Check that the A-block is a subalgebra matching A and the X-block a two-sided ideal."""
    c = p.carrier.mult
    A, X = p.a_block, p.x_block
    dA = p.dim_a
    violations = []
    for i in A:
        for j in A:
            if any(c[i, j, X.start:]):
                violations.append(Violation("A-block closed under product", (i, j)))
            if not np.equal(c[i, j, :dA], p.base.mult[i, j]).astype(bool).all():
                violations.append(Violation("A-block matches A", (i, j)))
    for i in range(c.shape[0]):
        for s in X:
            if any(c[i, s, :dA]) or any(c[s, i, :dA]):
                violations.append(Violation("X-block is an ideal", (i, s)))
    return ValidationReport(f"blocks of {p.carrier.name}", tuple(violations))
