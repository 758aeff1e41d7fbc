"""Derivations, inner derivations and first Hochschild cohomology.

A linear map D: A -> M is stored as an ``(dim M, dim A)`` matrix whose j-th
column is D(e_j).  The derivation space is the exact nullspace of the
Leibniz system D(e_i e_j) - e_i D(e_j) - D(e_i) e_j = 0, one block of
``dim M`` rows per basis pair (i, j).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import Bimodule, FiniteAlgebra, identity, regular_bimodule
from .duals import iterated_dual
from .linalg import in_span, nullspace, rank, row_basis

__all__ = [
    "DerivationSpace",
    "leibniz_matrix",
    "leibniz_violations",
    "is_derivation",
    "derivation_space",
    "inner_derivation",
    "inner_derivations",
    "h1_dim",
    "is_inner",
    "is_n_weakly_amenable",
    "centralizer",
]


def leibniz_matrix(alg: FiniteAlgebra, mod: Bimodule) -> np.ndarray:
    """Constraint matrix on the row-major flattening of D (shape ``m x d``)."""
    d, m = alg.dim, mod.dim
    c, L, R = alg.mult, mod.L, mod.R
    eye_m, eye_d = identity(m), identity(d)
    # coefficient of D[r, col] in output q of pair (i, j)
    term_prod = np.einsum("qr,ijc->ijqrc", eye_m, c)
    term_left = np.einsum("iqr,cj->ijqrc", L, eye_d)
    term_right = np.einsum("jqr,ci->ijqrc", R, eye_d)
    coeffs = term_prod - term_left - term_right
    return coeffs.reshape(d * d * m, m * d)


def leibniz_violations(alg: FiniteAlgebra, mod: Bimodule, D: np.ndarray) -> list[tuple[int, int]]:
    """Basis pairs (i, j) where the Leibniz rule fails for D."""
    bad = []
    for i in range(alg.dim):
        for j in range(alg.dim):
            lhs = D @ alg.mult[i, j]
            rhs = mod.L[i] @ D[:, j] + mod.R[j] @ D[:, i]
            if not np.equal(lhs, rhs).astype(bool).all():
                bad.append((i, j))
    return bad


def is_derivation(alg: FiniteAlgebra, mod: Bimodule, D: np.ndarray) -> bool:
    return np.asarray(D).shape == (mod.dim, alg.dim) and not leibniz_violations(alg, mod, D)


def inner_derivation(alg: FiniteAlgebra, mod: Bimodule, m) -> np.ndarray:
    """d_m : a -> a·m - m·a."""
    m = np.asarray(m, dtype=object).reshape(-1)
    cols = [mod.L[i] @ m - mod.R[i] @ m for i in range(alg.dim)]
    return np.array(cols, dtype=object).T.reshape(mod.dim, alg.dim)


def inner_derivations(alg: FiniteAlgebra, mod: Bimodule) -> list[np.ndarray]:
    """Canonical basis of {d_m : m in M}, as matrices."""
    gens = [inner_derivation(alg, mod, identity(mod.dim)[p]).reshape(-1) for p in range(mod.dim)]
    return [v.reshape(mod.dim, alg.dim) for v in row_basis(gens)]


def centralizer(alg: FiniteAlgebra, mod: Bimodule) -> list[np.ndarray]:
    """Basis of {m : a·m = m·a for all a}."""
    rows = np.vstack([mod.L[i] - mod.R[i] for i in range(alg.dim)])
    return nullspace(rows, mod.dim)


@dataclass(frozen=True, eq=False)
class DerivationSpace:
    algebra: FiniteAlgebra
    module: Bimodule
    basis: list = field(repr=False)
    inner_basis: list = field(repr=False)
    h1_dim: int

    @property
    def derivation_dim(self) -> int:
        return len(self.basis)

    @property
    def inner_dim(self) -> int:
        return len(self.inner_basis)

    def summary(self) -> dict:
        return {"derivation_dim": self.derivation_dim, "inner_dim": self.inner_dim, "h1_dim": self.h1_dim}


def derivation_space(alg: FiniteAlgebra, mod: Bimodule) -> DerivationSpace:
    m, d = mod.dim, alg.dim
    basis = [v.reshape(m, d) for v in nullspace(leibniz_matrix(alg, mod), m * d)]
    inner = inner_derivations(alg, mod)
    flat_der = [b.reshape(-1) for b in basis]
    flat_inner = [b.reshape(-1) for b in inner]
    stacked = rank(np.array(flat_der + flat_inner, dtype=object)) if flat_der or flat_inner else 0
    if stacked != len(basis):
        raise AssertionError("inner derivations escaped the derivation space")
    return DerivationSpace(alg, mod, basis, inner, stacked - len(inner))


def h1_dim(alg: FiniteAlgebra, mod: Bimodule) -> int:
    return derivation_space(alg, mod).h1_dim


def is_inner(alg: FiniteAlgebra, mod: Bimodule, D: np.ndarray) -> bool:
    """Span test: D lies in the space of inner derivations."""
    return in_span([b.reshape(-1) for b in inner_derivations(alg, mod)], np.asarray(D).reshape(-1))


def is_n_weakly_amenable(alg: FiniteAlgebra, n: int) -> bool:
    """Every derivation A -> A^(n) is inner.

    n = 0 (derivations into A itself) is accepted but is not a standard
    notion of weak amenability.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return h1_dim(alg, iterated_dual(regular_bimodule(alg), n).space) == 0
