"""Exact linear algebra over the rationals.

All routines take matrices as 2-D sequences (nested lists or numpy object
arrays) of ``int``/``Fraction`` entries.  Elimination runs on integer rows
(each input row is scaled by the lcm of its denominators) and every row
operation is of the form ``row <- p*row - q*pivot_row`` followed by division
by the row content, so no fractions appear until the final normalisation.

Pivots are chosen as the first nonzero entry in a fixed column order, which
makes every basis returned here canonical: the same input always yields the
same basis vectors, in the same order.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "rref",
    "rank",
    "nullspace",
    "row_basis",
    "in_span",
    "span_contains",
    "solve",
    "inconsistency_witness",
    "as_object_array",
]


def as_object_array(data, shape=None) -> np.ndarray:
    """Return ``data`` as a numpy object array of ``Fraction`` entries."""
    arr = np.array(data, dtype=object)
    if shape is not None:
        arr = arr.reshape(shape)
    flat = arr.reshape(-1)
    for idx, v in enumerate(flat):
        if not isinstance(v, Fraction):
            flat[idx] = Fraction(v)
    return arr


def _int_row(row: Iterable) -> list[int]:
    vals = [v if isinstance(v, Fraction) else Fraction(v) for v in row]
    den = lcm(*(v.denominator for v in vals)) if vals else 1
    out = [int(v * den) for v in vals]
    return _primitive(out)


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                break
    if g > 1:
        row = [v // g for v in row]
    return row


def _rows(matrix) -> tuple[list[list[int]], int]:
    if isinstance(matrix, np.ndarray):
        if matrix.ndim != 2:
            raise ValueError(f"expected a 2-D matrix, got shape {matrix.shape}")
        ncols = matrix.shape[1]
        rows = matrix.tolist()
    else:
        rows = [list(r) for r in matrix]
        ncols = len(rows[0]) if rows else 0
    out = []
    for r in rows:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
        ir = _int_row(r)
        if any(ir):
            out.append(ir)
    return out, ncols


def _echelon(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Integer Gauss-Jordan: returns reduced integer rows and pivot columns."""
    rows = [r[:] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        if prow[c] < 0:
            prow = rows[r] = [-v for v in prow]
        a = prow[c]
        for i in range(len(rows)):
            if i == r:
                continue
            b = rows[i][c]
            if not b:
                continue
            g = gcd(a, b)
            fa, fb = a // g, b // g
            rows[i] = _primitive([fa * x - fb * y for x, y in zip(rows[i], prow)])
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(matrix) -> tuple[list[list[Fraction]], tuple[int, ...]]:
    """Reduced row echelon form with unit pivots; zero rows are dropped."""
    rows, ncols = _rows(matrix)
    red, pivots = _echelon(rows, ncols)
    out = []
    for row, c in zip(red, pivots):
        p = row[c]
        out.append([Fraction(v, p) for v in row])
    return out, tuple(pivots)


def rank(matrix) -> int:
    rows, ncols = _rows(matrix)
    return len(_echelon(rows, ncols)[1])


def nullspace(matrix, ncols: int | None = None) -> list[np.ndarray]:
    """Canonical basis of ``{v : M v = 0}``.

    One basis vector per free column ``f`` (in increasing order), with
    ``v[f] = 1`` and zeros on the other free columns.  ``ncols`` must be given
    when the matrix has no rows.
    """
    rows, n = _rows(matrix)
    if ncols is None:
        if isinstance(matrix, np.ndarray) or rows or n:
            ncols = n
        else:
            raise ValueError("ncols required for an empty constraint matrix")
    elif n and n != ncols:
        raise ValueError(f"matrix has {n} columns, expected {ncols}")
    red, pivots = _echelon(rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(red, pivots):
            if row[f]:
                v[c] = Fraction(-row[f], row[c])
        basis.append(as_object_array(v))
    return basis


def row_basis(vectors: Sequence, length: int | None = None) -> list[np.ndarray]:
    """Canonical (RREF) basis of the span of ``vectors``."""
    vecs = [np.asarray(v, dtype=object).reshape(-1) for v in vectors]
    if not vecs:
        return []
    red, _ = rref(np.array(vecs, dtype=object))
    return [as_object_array(r) for r in red]


def in_span(basis: Sequence, v) -> bool:
    """True iff ``v`` lies in the span of ``basis`` (exact rank test)."""
    v = np.asarray(v, dtype=object).reshape(-1)
    if not any(v):
        return True
    vecs = [np.asarray(b, dtype=object).reshape(-1) for b in basis]
    if not vecs:
        return False
    r0 = rank(np.array(vecs, dtype=object))
    return rank(np.array(vecs + [v], dtype=object)) == r0


def span_contains(big: Sequence, small: Sequence) -> bool:
    """True iff span(small) is a subspace of span(big)."""
    small = [np.asarray(s, dtype=object).reshape(-1) for s in small]
    small = [s for s in small if any(s)]
    if not small:
        return True
    big = [np.asarray(b, dtype=object).reshape(-1) for b in big]
    if not big:
        return False
    r0 = rank(np.array(big, dtype=object))
    return rank(np.array(big + small, dtype=object)) == r0


def _augmented(matrix, rhs) -> tuple[np.ndarray, int]:
    m = np.asarray(matrix, dtype=object)
    b = np.asarray(rhs, dtype=object).reshape(-1, 1)
    if m.shape[0] != b.shape[0]:
        raise ValueError(f"rhs length {b.shape[0]} != {m.shape[0]} rows")
    return np.hstack([m, b]), m.shape[1]


def solve(matrix, rhs) -> np.ndarray | None:
    """A particular solution of ``M x = b`` (free variables set to 0), or None."""
    aug, n = _augmented(matrix, rhs)
    red, pivots = rref(aug)
    if pivots and pivots[-1] == n:
        return None
    x = [Fraction(0)] * n
    for row, c in zip(red, pivots):
        x[c] = row[n]
    return as_object_array(x)


def inconsistency_witness(matrix, rhs) -> np.ndarray | None:
    """A vector ``y`` with ``y M = 0`` and ``y . b = 1`` if ``M x = b`` is unsolvable.

    This is the Fredholm-alternative certificate that the system has no
    solution.  Returns None when the system is consistent.
    """
    m = np.asarray(matrix, dtype=object)
    b = np.asarray(rhs, dtype=object).reshape(-1)
    if solve(m, b) is not None:
        return None
    # rows of [M^T ; b^T] y = [0 ; 1]
    system = np.vstack([m.T, b.reshape(1, -1)])
    target = [Fraction(0)] * m.shape[1] + [Fraction(1)]
    y = solve(system, target)
    assert y is not None
    return y
