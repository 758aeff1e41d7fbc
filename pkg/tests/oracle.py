"""Brute-force reference computations with sympy, sharing no code with modext.

Structures are plain nested lists: ``mult[i][j][k]``, ``left[i][p][q]``,
``right[p][i][q]``.  Products, duals and derivations are expanded straight
from their defining formulas with explicit loops.
"""
from itertools import product

import sympy as sp


def tensor(t):
    """numpy object array (or nested lists) -> nested lists of sympy Rationals."""
    if hasattr(t, "tolist"):
        t = t.tolist()
    if isinstance(t, list):
        return [tensor(x) for x in t]
    return sp.Rational(t.numerator, t.denominator) if hasattr(t, "numerator") else sp.Rational(t)


def bowtie_table(ca, left, right, cx):
    """Structure constants of A⋈X from (a,x)(b,y) = (ab, ay + xb + xy)."""
    dA, dX = len(ca), len(cx)
    n = dA + dX
    c = [[[sp.Integer(0)] * n for _ in range(n)] for _ in range(n)]
    for i, j, k in product(range(dA), repeat=3):
        c[i][j][k] = ca[i][j][k]
    for i, s, q in product(range(dA), range(dX), range(dX)):
        c[i][dA + s][dA + q] += left[i][s][q]
        c[dA + s][i][dA + q] += right[s][i][q]
    for s, t, q in product(range(dX), repeat=3):
        c[dA + s][dA + t][dA + q] += cx[s][t][q]
    return c


def regular(c):
    return c, c  # left[i][p][q] = c[i][p][q], right[p][i][q] = c[p][i][q]


def dual(left, right, dim_alg, dim_mod):
    """Dual bimodule in the dual basis.

    (b_i·φ_p)(m_q) = φ_p(m_q·b_i) = right[q][i][p]
    (φ_p·b_i)(m_q) = φ_p(b_i·m_q) = left[i][q][p]
    """
    nl = [[[right[q][i][p] for q in range(dim_mod)] for p in range(dim_mod)] for i in range(dim_alg)]
    nr = [[[left[i][q][p] for q in range(dim_mod)] for i in range(dim_alg)] for p in range(dim_mod)]
    return nl, nr


def iterated(left, right, dim_alg, dim_mod, n):
    for _ in range(n):
        left, right = dual(left, right, dim_alg, dim_mod)
    return left, right


def h1(c, left, right):
    """(derivation dim, inner dim, h1) for derivations from the algebra c into the bimodule."""
    d, m = len(c), len(left[0])
    M = sp.zeros(d * d * m, m * d)
    for i, j in product(range(d), repeat=2):
        for q in range(m):
            row = (i * d + j) * m + q
            # D(e_i e_j) - e_i·D(e_j) - D(e_i)·e_j, coefficient of D[r][col]
            for k in range(d):
                M[row, q * d + k] += c[i][j][k]
            for p in range(m):
                M[row, p * d + j] -= left[i][p][q]
                M[row, p * d + i] -= right[p][j][q]
    der = m * d - M.rank()
    inner_rows = []
    for p in range(m):
        row = []
        for r in range(m):
            for col in range(d):
                # d_{m_p}(e_col) = e_col·m_p - m_p·e_col, coordinate r
                row.append(left[col][p][r] - right[p][col][r])
        inner_rows.append(row)
    inner = sp.Matrix(inner_rows).rank()
    return der, inner, der - inner


def algebra_h1(c, level):
    d = len(c)
    l, r = iterated(*regular(c), d, d, level)
    return h1(c, l, r)


def bowtie_h1(ca, left, right, cx, level):
    c = bowtie_table(ca, left, right, cx)
    n = len(c)
    l, r = iterated(*regular(c), n, n, level)
    return h1(c, l, r)
