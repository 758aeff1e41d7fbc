"""Dual bimodules, dual towers, and the block actions on (A⋈X)^(n).

The dual of an A-bimodule M is M* with

    (a·φ)(m) = φ(m·a),      (φ·a)(m) = φ(a·m).

In the dual basis this says ``L*[i] = R[i]^T`` and ``R*[i] = L[i]^T``.
Dualising twice therefore returns the original operator matrices, so the
canonical evaluation map M -> M** is the identity in coordinates.

:func:`product_dual_level` builds the (A⋈X)-bimodule A^(n) × X^(n) from its
components (A^(n) and X^(n) over A, X^(n) over X, and the mixed products
between an X element and the other block) and assembles them with the
block formulas

    even n:  (F,G)(a,x) = (Fa, Fx + Ga + Gx),   (a,x)(F,G) = (aF, xF + aG + xG)
    odd n:   (f,g)(a,x) = (fa + gx, gx + ga),   (a,x)(f,g) = (af + xg, xg + ag)

where in the odd case the first ``gx`` lands in A^(n) and the second in X^(n).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .constructions import ProductAlgebra
from .core import Bimodule, FiniteAlgebra, identity, regular_bimodule, zeros

__all__ = [
    "dual_bimodule",
    "DualTower",
    "iterated_dual",
    "canonical_map",
    "is_bimodule_isomorphism",
    "ProductDualLevel",
    "product_dual_level",
    "product_dual_actions",
    "MAX_CLI_LEVEL",
]

MAX_CLI_LEVEL = 6


def _dual_labels(labels) -> tuple[str, ...]:
    return tuple(f"{l}*" for l in labels)


def dual_bimodule(m: Bimodule) -> Bimodule:
    """The dual bimodule M*, expressed in the dual basis."""
    L = np.ascontiguousarray(m.R.transpose(0, 2, 1))
    R = np.ascontiguousarray(m.L.transpose(0, 2, 1))
    name = f"({m.name})*" if m.name else ""
    return Bimodule.from_matrices(m.algebra, L, R, basis=_dual_labels(m.basis), name=name, check=False)


@dataclass(frozen=True, eq=False)
class DualTower:
    """The n-th iterated dual of ``base`` (level 0 is ``base`` itself)."""

    level: int
    space: Bimodule
    base: Bimodule

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def algebra(self) -> FiniteAlgebra:
        return self.space.algebra

    @property
    def basis(self) -> tuple[str, ...]:
        return self.space.basis


def iterated_dual(m: Bimodule, n: int) -> DualTower:
    if n < 0:
        raise ValueError("dual level must be non-negative")
    space = m
    for _ in range(n):
        space = dual_bimodule(space)
    return DualTower(n, space, m)


def canonical_map(tower: DualTower, target: DualTower) -> np.ndarray:
    """Evaluation map level n -> level n+2 in the respective dual bases.

    ev(m)(φ) = φ(m), so ev sends the p-th basis vector to the p-th vector of
    the double-dual basis: the identity matrix.
    """
    if target.level != tower.level + 2 or target.base is not tower.base:
        raise ValueError("canonical map goes from level n to level n+2 of the same tower")
    return identity(tower.dim)


def is_bimodule_isomorphism(phi: np.ndarray, src: Bimodule, dst: Bimodule) -> bool:
    """phi intertwines both actions and is invertible."""
    from .linalg import rank

    if phi.shape != (dst.dim, src.dim) or src.dim != dst.dim:
        return False
    if rank(phi) != src.dim:
        return False
    for i in range(src.algebra.dim):
        if not np.equal(phi @ src.L[i], dst.L[i] @ phi).astype(bool).all():
            return False
        if not np.equal(phi @ src.R[i], dst.R[i] @ phi).astype(bool).all():
            return False
    return True


@dataclass(frozen=True, eq=False)
class ProductDualLevel:
    """Component actions on (A⋈X)^(level) = A^(level) × X^(level).

    ``cross_left[s]`` / ``cross_right[s]`` are the matrices of ``u -> x_s·u``
    and ``u -> u·x_s`` between the two blocks: A^(level) -> X^(level) when
    the level is even, X^(level) -> A^(level) when it is odd.
    """

    product: ProductAlgebra
    level: int
    aa: Bimodule
    xa: Bimodule
    xx: Bimodule
    cross_left: np.ndarray
    cross_right: np.ndarray
    module: Bimodule

    @property
    def parity(self) -> str:
        return "odd" if self.level % 2 else "even"

    @property
    def dim_a(self) -> int:
        return self.aa.dim

    @property
    def dim_x(self) -> int:
        return self.xa.dim

    def delta(self, u: np.ndarray) -> np.ndarray:
        """Matrix of x -> x·u - u·x for u in the non-X (even) or X (odd) block."""
        u = np.asarray(u, dtype=object).reshape(-1)
        cols = [(self.cross_left[s] - self.cross_right[s]) @ u for s in range(self.product.dim_x)]
        return np.array(cols, dtype=object).T.reshape(-1, self.product.dim_x)


def _assemble(p: ProductAlgebra, level: int, aa, xa, xx, cl, cr) -> Bimodule:
    dA, dX = p.dim_a, p.dim_x
    n = dA + dX
    A, X = slice(0, dA), slice(dA, n)
    L = zeros(n, n, n)
    R = zeros(n, n, n)
    for i in range(dA):
        L[i, A, A] = aa.L[i]
        L[i, X, X] = xa.L[i]
        R[i, A, A] = aa.R[i]
        R[i, X, X] = xa.R[i]
    for s in range(dX):
        j = dA + s
        L[j, X, X] = xx.L[s]
        R[j, X, X] = xx.R[s]
        if level % 2 == 0:
            L[j, X, A] = cl[s]
            R[j, X, A] = cr[s]
        else:
            L[j, A, X] = cl[s]
            R[j, A, X] = cr[s]
    labels = tuple(f"{b}{'*' * level}" for b in p.carrier.basis)
    return Bimodule.from_matrices(p.carrier, L, R, basis=labels, name=f"({p.carrier.name})^({level})", check=False)


@lru_cache(maxsize=512)
def product_dual_level(p: ProductAlgebra, level: int) -> ProductDualLevel:
    if level < 0:
        raise ValueError("dual level must be non-negative")
    m = p.module
    aa = iterated_dual(regular_bimodule(m.base), level).space
    xa = iterated_dual(m.action, level).space
    xx = iterated_dual(regular_bimodule(m.inner), level).space
    # level 0: x_s·F = right action of F on x_s read in X; F·x_s = left action
    left, right = m.action.left, m.action.right
    cl = right.transpose(0, 2, 1)
    cr = left.transpose(1, 2, 0)
    for _ in range(level):
        # (φ·x)(u) = φ(x·u),  (x·φ)(u) = φ(u·x)
        cl, cr = cr.transpose(0, 2, 1), cl.transpose(0, 2, 1)
    cl = np.ascontiguousarray(cl)
    cr = np.ascontiguousarray(cr)
    module = _assemble(p, level, aa, xa, xx, cl, cr)
    return ProductDualLevel(p, level, aa, xa, xx, cl, cr, module)


def product_dual_actions(p: ProductAlgebra, n: int) -> Bimodule:
    """(A⋈X)^(n) as an (A⋈X)-bimodule, built from the block formulas."""
    return product_dual_level(p, n).module
