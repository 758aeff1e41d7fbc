"""Block decomposition of derivations A⋈X -> (A⋈X)^(k).

A map D on the product splits along the block layout as

    D(a, x) = (D_A(a) + T_A(x), D_X(a) + T_X(x))

with D_A: A -> A^(k), D_X: A -> X^(k), T_A: X -> A^(k), T_X: X -> X^(k).
:func:`lemma_identities` lists the conditions these blocks satisfy exactly
when D is a derivation; the list differs between odd and even k because the
mixed products x·u, u·x switch direction (see :mod:`modext.duals`).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cohomology import is_derivation, leibniz_violations
from .constructions import ProductAlgebra
from .core import basis_vector, zeros
from .duals import ProductDualLevel, product_dual_level
from .linalg import inconsistency_witness, solve
from .systems import Identity, term

__all__ = [
    "BLOCKS",
    "LemmaViolation",
    "NotADerivation",
    "InvalidBlocks",
    "DecompositionBlocks",
    "InnernessCertificate",
    "NotInner",
    "UnitalBlocks",
    "lemma_identities",
    "decompose",
    "assemble",
    "find_certificate",
    "decompose_unital",
    "leibniz_identities",
]

BLOCKS = ("D_A", "D_X", "T_A", "T_X")


class LemmaViolation(RuntimeError):
    """A decomposition identity that must hold for every derivation failed.

    This signals an implementation bug or a genuine discrepancy in the
    decomposition statements; it is never a property of valid input.
    """

    def __init__(self, message: str, condition: str = "", witness: tuple = ()):
        self.condition = condition
        self.witness = witness
        super().__init__(f"{message} [condition {condition}, witness {witness}]")


class NotADerivation(ValueError):
    def __init__(self, pairs):
        self.pairs = pairs
        super().__init__(f"map is not a derivation; Leibniz fails at basis pairs {pairs[:5]}")


class InvalidBlocks(ValueError):
    def __init__(self, identity: Identity):
        self.identity = identity
        super().__init__(f"condition ({identity.condition}) fails: {identity.name} at {identity.witness}")


def leibniz_identities(block: str, alg, mod, condition: str, label: str) -> list[Identity]:
    """D(e_i e_j) - e_i D(e_j) - D(e_i) e_j = 0 for a block D: alg -> mod."""
    d = alg.dim
    out = []
    for i in range(d):
        for j in range(d):
            out.append(Identity(condition, f"{label}(ab)={label}(a)b+a{label}(b)", (i, j), mod.dim, (
                term(block, alg.mult[i, j]),
                term(block, basis_vector(d, j), mod.L[i], -1),
                term(block, basis_vector(d, i), mod.R[j], -1),
            )))
    return out


def lemma_identities(lvl: ProductDualLevel, absent=()) -> list[Identity]:
    """All block conditions at this level; terms in ``absent`` blocks are treated as zero."""
    p = lvl.product
    m = p.module
    A, X = m.base, m.inner
    dA, dX = A.dim, X.dim
    left, right = m.action.left, m.action.right
    aa, xa, xx = lvl.aa, lvl.xa, lvl.xx
    CL, CR = lvl.cross_left, lvl.cross_right
    ea = [basis_vector(dA, i) for i in range(dA)]
    ex = [basis_vector(dX, s) for s in range(dX)]
    ids: list[Identity] = []
    ids += leibniz_identities("D_A", A, aa, "a", "D_A")
    ids += leibniz_identities("D_X", A, xa, "a", "D_X")
    if lvl.level % 2:
        for i in range(dA):
            for s in range(dX):
                ids.append(Identity("b", "T_A(ax)=aT_A(x)+D_X(a)x", (i, s), dA, (
                    term("T_A", left[i, s]),
                    term("T_A", ex[s], aa.L[i], -1),
                    term("D_X", ea[i], CR[s], -1))))
                ids.append(Identity("b", "T_A(xa)=T_A(x)a+xD_X(a)", (s, i), dA, (
                    term("T_A", right[s, i]),
                    term("T_A", ex[s], aa.R[i], -1),
                    term("D_X", ea[i], CL[s], -1))))
        ids += leibniz_identities("T_X", X, xx, "c", "T_X")
        for i in range(dA):
            for s in range(dX):
                ids.append(Identity("c", "T_X(ax)=D_X(a)x+aT_X(x)", (i, s), dX, (
                    term("T_X", left[i, s]),
                    term("D_X", ea[i], xx.R[s], -1),
                    term("T_X", ex[s], xa.L[i], -1))))
                ids.append(Identity("c", "T_X(xa)=xD_X(a)+T_X(x)a", (s, i), dX, (
                    term("T_X", right[s, i]),
                    term("D_X", ea[i], xx.L[s], -1),
                    term("T_X", ex[s], xa.R[i], -1))))
        for s in range(dX):
            for t in range(dX):
                ids.append(Identity("c", "T_X(x)y+xT_X(y)=T_A(xy)", (s, t), dA, (
                    term("T_X", ex[s], CR[t]),
                    term("T_X", ex[t], CL[s]),
                    term("T_A", X.mult[s, t], None, -1))))
    else:
        for i in range(dA):
            for s in range(dX):
                ids.append(Identity("b", "T_A(ax)=aT_A(x)", (i, s), dA, (
                    term("T_A", left[i, s]),
                    term("T_A", ex[s], aa.L[i], -1))))
                ids.append(Identity("b", "T_A(xa)=T_A(x)a", (s, i), dA, (
                    term("T_A", right[s, i]),
                    term("T_A", ex[s], aa.R[i], -1))))
        for s in range(dX):
            for t in range(dX):
                ids.append(Identity("b", "T_A(xy)=0", (s, t), dA, (term("T_A", X.mult[s, t]),)))
        for i in range(dA):
            for s in range(dX):
                ids.append(Identity("c", "T_X(ax)=D_A(a)x+D_X(a)x+aT_X(x)", (i, s), dX, (
                    term("T_X", left[i, s]),
                    term("D_A", ea[i], CR[s], -1),
                    term("D_X", ea[i], xx.R[s], -1),
                    term("T_X", ex[s], xa.L[i], -1))))
                ids.append(Identity("c", "T_X(xa)=xD_A(a)+xD_X(a)+T_X(x)a", (s, i), dX, (
                    term("T_X", right[s, i]),
                    term("D_A", ea[i], CL[s], -1),
                    term("D_X", ea[i], xx.L[s], -1),
                    term("T_X", ex[s], xa.R[i], -1))))
        for s in range(dX):
            for t in range(dX):
                ids.append(Identity("c", "T_X(xy)=xT_X(y)+T_X(x)y+xT_A(y)+T_A(x)y", (s, t), dX, (
                    term("T_X", X.mult[s, t]),
                    term("T_X", ex[t], xx.L[s], -1),
                    term("T_X", ex[s], xx.R[t], -1),
                    term("T_A", ex[t], CL[s], -1),
                    term("T_A", ex[s], CR[t], -1))))
    if absent:
        ids = [r for r in (i.without(absent) for i in ids) if r is not None]
    return ids


def block_shapes(lvl: ProductDualLevel) -> dict[str, tuple[int, int]]:
    dA, dX = lvl.product.dim_a, lvl.product.dim_x
    return {"D_A": (dA, dA), "D_X": (dX, dA), "T_A": (dA, dX), "T_X": (dX, dX)}


@dataclass(frozen=True, eq=False)
class DecompositionBlocks:
    product: ProductAlgebra
    level: int
    D_A: np.ndarray
    D_X: np.ndarray
    T_A: np.ndarray
    T_X: np.ndarray
    conditions: dict = field(default_factory=dict)

    @property
    def parity(self) -> str:
        return "odd" if self.level % 2 else "even"

    @property
    def n(self) -> int:
        return self.level // 2

    def as_dict(self) -> dict[str, np.ndarray]:
        return {b: getattr(self, b) for b in BLOCKS}

    def same_blocks(self, other: "DecompositionBlocks") -> bool:
        return self.level == other.level and all(
            np.equal(getattr(self, b), getattr(other, b)).astype(bool).all() for b in BLOCKS
        )


def _check(ids: list[Identity], blocks: dict) -> dict[str, list[Identity]]:
    failed: dict[str, list[Identity]] = {}
    for ident in ids:
        if not ident.holds(blocks):
            failed.setdefault(ident.condition, []).append(ident)
    return failed


def decompose(p: ProductAlgebra, D: np.ndarray, level: int) -> DecompositionBlocks:
    """Split a derivation on the product into its four blocks and verify them."""
    lvl = product_dual_level(p, level)
    D = np.asarray(D, dtype=object)
    n = p.carrier.dim
    if D.shape != (n, n):
        raise ValueError(f"expected a {n}x{n} matrix, got {D.shape}")
    bad = leibniz_violations(p.carrier, lvl.module, D)
    if bad:
        raise NotADerivation(bad)
    dA = p.dim_a
    blocks = {"D_A": D[:dA, :dA], "D_X": D[dA:, :dA], "T_A": D[:dA, dA:], "T_X": D[dA:, dA:]}
    failed = _check(lemma_identities(lvl), blocks)
    if failed:
        cond = sorted(failed)[0]
        ident = failed[cond][0]
        raise LemmaViolation(f"derivation violates {ident.name}", cond, ident.witness)
    conditions = {c: True for c in ("a", "b", "c")}
    return DecompositionBlocks(p, level, conditions=conditions, **{k: v.copy() for k, v in blocks.items()})


def assemble(blocks: DecompositionBlocks) -> np.ndarray:
    """Rebuild the derivation from valid blocks."""
    p = blocks.product
    lvl = product_dual_level(p, blocks.level)
    failed = _check(lemma_identities(lvl), blocks.as_dict())
    if failed:
        raise InvalidBlocks(failed[sorted(failed)[0]][0])
    D = np.vstack([np.hstack([blocks.D_A, blocks.T_A]), np.hstack([blocks.D_X, blocks.T_X])])
    if not is_derivation(p.carrier, lvl.module, D):
        raise LemmaViolation("blocks satisfy all conditions but assemble to a non-derivation", "a-c")
    return D


@dataclass(frozen=True, eq=False)
class InnernessCertificate:
    """D = d_(u, w) with u in the A-block and w in the X-block of the dual."""

    level: int
    witness_a: np.ndarray
    witness_x: np.ndarray
    identities: dict

    @property
    def parity(self) -> str:
        return "odd" if self.level % 2 else "even"


@dataclass(frozen=True, eq=False)
class NotInner:
    """Proof that d_w = D has no solution: y annihilates the system but not D."""

    level: int
    witness: np.ndarray

    def __bool__(self) -> bool:
        return False


def _inner_system(lvl: ProductDualLevel) -> np.ndarray:
    M = lvl.module
    n = lvl.product.carrier.dim
    return np.vstack([M.L[j] - M.R[j] for j in range(n)])


def certificate_identities(lvl: ProductDualLevel, blocks: dict, u, w) -> dict[str, bool]:
    """Per-block innerness identities for the witness pair (u, w)."""
    m = lvl.product.module
    A, X = m.base, m.inner
    from .cohomology import inner_derivation

    def eq(a, b):
        return bool(np.equal(a, b).astype(bool).all())

    dA = inner_derivation(A, lvl.aa, u)
    dX = inner_derivation(A, lvl.xa, w)
    dXX = inner_derivation(X, lvl.xx, w)
    if lvl.level % 2:
        return {
            "D_A=d_f": eq(blocks["D_A"], dA),
            "D_X=d_g": eq(blocks["D_X"], dX),
            "T_X=d_g": eq(blocks["T_X"], dXX),
            "T_A=delta_g": eq(blocks["T_A"], lvl.delta(w)),
        }
    return {
        "D_A=d_F": eq(blocks["D_A"], dA),
        "D_X=d_G": eq(blocks["D_X"], dX),
        "T_X=d_G+delta_F": eq(blocks["T_X"], dXX + lvl.delta(u)),
        "T_A=0": not any(np.asarray(blocks["T_A"]).reshape(-1)),
    }


def find_certificate(blocks: DecompositionBlocks) -> InnernessCertificate | NotInner:
    """Solve jointly for the witness pair; a NotInner result carries a proof."""
    p = blocks.product
    lvl = product_dual_level(p, blocks.level)
    D = np.vstack([np.hstack([blocks.D_A, blocks.T_A]), np.hstack([blocks.D_X, blocks.T_X])])
    system = _inner_system(lvl)
    rhs = np.concatenate([D[:, j] for j in range(D.shape[1])])
    w = solve(system, rhs)
    if w is None:
        return NotInner(blocks.level, inconsistency_witness(system, rhs))
    u, g = w[: p.dim_a], w[p.dim_a:]
    ids = certificate_identities(lvl, blocks.as_dict(), u, g)
    if not all(ids.values()):
        bad = [k for k, v in ids.items() if not v]
        raise LemmaViolation(f"inner derivation without block certificate: {bad}", "innerness")
    return InnernessCertificate(blocks.level, u, g, ids)


@dataclass(frozen=True, eq=False)
class UnitalBlocks:
    """Reduced data (D_A, T_X) for a derivation when X has an identity."""

    product: ProductAlgebra
    level: int
    unit: np.ndarray
    D_A: np.ndarray
    T_X: np.ndarray
    conditions: dict

    @property
    def parity(self) -> str:
        return "odd" if self.level % 2 else "even"

    def reconstruct(self) -> np.ndarray:
        """The full derivation determined by (D_A, T_X) and the unit of X."""
        p = self.product
        lvl = product_dual_level(p, self.level)
        m = p.module
        u = self.unit
        cr_u = np.einsum("s,sqr->qr", u, lvl.cross_right)
        dA, dX = p.dim_a, p.dim_x
        # T_X(a·1_X) for each basis a
        a_unit = np.array([m.action.act_left(basis_vector(dA, i), u) for i in range(dA)], dtype=object).T
        a_unit = a_unit.reshape(dX, dA)
        txa = self.T_X @ a_unit
        if self.level % 2:
            top = np.hstack([self.D_A, cr_u @ self.T_X])
            bottom = np.hstack([txa, self.T_X])
        else:
            top = np.hstack([self.D_A, zeros(dA, dX)])
            bottom = np.hstack([txa - cr_u @ self.D_A, self.T_X])
        return np.vstack([top, bottom])


def decompose_unital(p: ProductAlgebra, D: np.ndarray, level: int) -> UnitalBlocks:
    """Reduced decomposition for unital X; verifies the reconstruction and side conditions."""
    from .cohomology import is_derivation as _is_der

    X = p.inner
    u = X.computed_unit
    if u is None:
        raise ValueError("X has no identity element")
    blocks = decompose(p, D, level)
    lvl = product_dual_level(p, level)
    m = p.module
    dA = p.dim_a
    cl_u = np.einsum("s,sqr->qr", u, lvl.cross_left)
    cr_u = np.einsum("s,sqr->qr", u, lvl.cross_right)
    ub = UnitalBlocks(p, level, u, blocks.D_A, blocks.T_X, {})
    D = np.asarray(D, dtype=object)
    conds = {"reconstruction": bool(np.equal(ub.reconstruct(), D).astype(bool).all())}
    conds["D_A derivation"] = _is_der(m.base, lvl.aa, blocks.D_A)
    conds["T_X derivation"] = _is_der(X, lvl.xx, blocks.T_X)
    ua = np.array([m.action.act_right(u, basis_vector(dA, i)) for i in range(dA)], dtype=object).T.reshape(-1, dA)
    au = np.array([m.action.act_left(basis_vector(dA, i), u) for i in range(dA)], dtype=object).T.reshape(-1, dA)
    if level % 2:
        conds["T_X(1a)=T_X(a1)"] = bool(np.equal(blocks.T_X @ ua, blocks.T_X @ au).astype(bool).all())
        conds["T_X(x)1=1T_X(x)"] = bool(np.equal(cr_u @ blocks.T_X, cl_u @ blocks.T_X).astype(bool).all())
    else:
        lhs = blocks.T_X @ ua - cl_u @ blocks.D_A
        rhs = blocks.T_X @ au - cr_u @ blocks.D_A
        conds["T_X(1a)-1D_A(a)=T_X(a1)-D_A(a)1"] = bool(np.equal(lhs, rhs).astype(bool).all())
        conds["D_A(a)1 derivation"] = _is_der(m.base, lvl.xa, cr_u @ blocks.D_A)
    object.__setattr__(ub, "conditions", conds)
    if not all(conds.values()):
        bad = [k for k, v in conds.items() if not v]
        raise LemmaViolation(f"unital decomposition fails: {bad}", "unital")
    return ub
