"""Linear identities in unknown linear maps.

An :class:`Identity` is a statement ``sum_t coef_t * M_t @ B_t @ u_t = 0``
where each ``B_t`` is an unknown matrix ("block"), ``u_t`` a fixed input
vector and ``M_t`` a fixed matrix applied to the block's output (identity
if omitted).  The same identity can be *evaluated* on concrete blocks or
turned into rows of a constraint matrix, so condition checks and solution
spaces come from one description.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .core import zeros
from .linalg import nullspace, row_basis, span_contains

__all__ = ["Term", "Identity", "BlockSystem", "term"]


@dataclass(frozen=True)
class Term:
    block: str
    vec: np.ndarray
    after: np.ndarray | None = None
    coef: int = 1


def term(block: str, vec, after=None, coef: int = 1) -> Term:
    return Term(block, np.asarray(vec, dtype=object).reshape(-1), after, coef)


@dataclass(frozen=True)
class Identity:
    condition: str
    name: str
    witness: tuple[int, ...]
    dim: int
    terms: tuple[Term, ...]

    def without(self, absent: Iterable[str]) -> "Identity | None":
        absent = set(absent)
        kept = tuple(t for t in self.terms if t.block not in absent)
        if not kept:
            return None
        return Identity(self.condition, self.name, self.witness, self.dim, kept)

    def residual(self, blocks: Mapping[str, np.ndarray]) -> np.ndarray:
        out = zeros(self.dim)
        for t in self.terms:
            if t.block not in blocks:
                continue
            v = blocks[t.block] @ t.vec
            if t.after is not None:
                v = t.after @ v
            out = out + t.coef * v
        return out

    def holds(self, blocks: Mapping[str, np.ndarray]) -> bool:
        return not any(self.residual(blocks))


class BlockSystem:
    """Unknown blocks with fixed shapes, flattened row-major into one vector."""

    def __init__(self, shapes: Mapping[str, tuple[int, int]]):
        self.shapes = dict(shapes)
        self.offsets: dict[str, int] = {}
        off = 0
        for name, (r, c) in self.shapes.items():
            self.offsets[name] = off
            off += r * c
        self.size = off

    def rows(self, identities: Sequence[Identity]) -> np.ndarray:
        out = []
        for ident in identities:
            block_rows = zeros(ident.dim, self.size)
            for t in ident.terms:
                if t.block not in self.shapes:
                    continue
                r, c = self.shapes[t.block]
                after = t.after
                if after is None:
                    if r != ident.dim:
                        raise ValueError(f"{ident.name}: block {t.block} has {r} rows, identity has dim {ident.dim}")
                    local = np.einsum("qr,c->qrc", _eye(r), t.vec)
                else:
                    local = np.einsum("qr,c->qrc", after, t.vec)
                off = self.offsets[t.block]
                block_rows[:, off:off + r * c] += t.coef * local.reshape(ident.dim, r * c)
            out.append(block_rows)
        if not out:
            return zeros(0, self.size)
        return np.vstack(out)

    def split(self, vec) -> dict[str, np.ndarray]:
        vec = np.asarray(vec, dtype=object).reshape(-1)
        out = {}
        for name, (r, c) in self.shapes.items():
            off = self.offsets[name]
            out[name] = vec[off:off + r * c].reshape(r, c)
        return out

    def flatten(self, blocks: Mapping[str, np.ndarray]) -> np.ndarray:
        vec = zeros(self.size)
        for name, (r, c) in self.shapes.items():
            if name in blocks:
                off = self.offsets[name]
                vec[off:off + r * c] = np.asarray(blocks[name], dtype=object).reshape(-1)
        return vec

    def solutions(self, identities: Sequence[Identity]) -> list[dict[str, np.ndarray]]:
        """Canonical basis of the joint solution space, split into blocks."""
        if self.size == 0:
            return []
        basis = nullspace(self.rows(identities), self.size)
        return [self.split(v) for v in basis]

    @staticmethod
    def projection(solutions: Sequence[Mapping[str, np.ndarray]], block: str) -> list[np.ndarray]:
        """Span basis of the ``block`` coordinate of a solution space."""
        return row_basis([s[block].reshape(-1) for s in solutions])


_EYES: dict[int, np.ndarray] = {}


def _eye(n: int) -> np.ndarray:
    if n not in _EYES:
        e = zeros(n, n)
        for i in range(n):
            e[i, i] = Fraction(1)
        _EYES[n] = e
    return _EYES[n]


def contained(vectors: Sequence, target: Sequence) -> tuple[bool, dict]:
    """Span containment plus the dimensions used in diagnostics."""
    vecs = row_basis([np.asarray(v, dtype=object).reshape(-1) for v in vectors])
    tgt = row_basis([np.asarray(v, dtype=object).reshape(-1) for v in target])
    ok = span_contains(tgt, vecs)
    return ok, {"quantified_dim": len(vecs), "target_dim": len(tgt)}
