import pytest

from modext.cohomology import (centralizer, derivation_space, h1_dim, inner_derivation, is_derivation, is_inner,
                               is_n_weakly_amenable, leibniz_matrix)
from modext.core import regular_bimodule
from modext.duals import iterated_dual
from modext.instances import matrix_full, matrix_upper, truncated_poly, zero_algebra

import oracle


def test_t2_into_itself():
    T2 = matrix_upper(2)
    s = derivation_space(T2, regular_bimodule(T2))
    assert s.summary() == {"derivation_dim": 2, "inner_dim": 2, "h1_dim": 0}


@pytest.mark.parametrize("d", [1, 2, 3])
def test_zero_algebra_h1_is_d_squared(d):
    Z = zero_algebra(d)
    assert h1_dim(Z, regular_bimodule(Z)) == d * d


def test_basis_vectors_are_derivations(corpus):
    for m in corpus[:10]:
        s = derivation_space(m.base, m.action)
        for D in s.basis:
            assert is_derivation(m.base, m.action, D)
        for D in s.inner_basis:
            assert is_derivation(m.base, m.action, D)
            assert is_inner(m.base, m.action, D)


def test_inner_derivation_formula():
    T2 = matrix_upper(2)
    M = regular_bimodule(T2)
    D = inner_derivation(T2, M, T2.e(0))
    # d_e11(e12) = e12 e11 - e11 e12 = -e12
    assert list(D[:, 1]) == [0, -1, 0]


def test_centralizer_of_regular_t2_is_scalars():
    T2 = matrix_upper(2)
    c = centralizer(T2, regular_bimodule(T2))
    assert len(c) == 1 and list(c[0]) == [1, 0, 1]


def test_agrees_with_oracle(corpus_algebras):
    for A in corpus_algebras:
        for n in range(3):
            s = derivation_space(A, iterated_dual(regular_bimodule(A), n).space)
            assert (s.derivation_dim, s.inner_dim, s.h1_dim) == oracle.algebra_h1(oracle.tensor(A.mult), n), A.name


def test_weak_amenability_flags():
    assert all(is_n_weakly_amenable(matrix_upper(2), n) for n in range(4))
    assert not is_n_weakly_amenable(truncated_poly(2), 1)
    with pytest.raises(ValueError):
        is_n_weakly_amenable(matrix_upper(2), -1)


def test_leibniz_matrix_shape():
    T2 = matrix_upper(2)
    assert leibniz_matrix(T2, regular_bimodule(T2)).shape == (27, 9)


def test_m2_all_levels():
    M2 = matrix_full(2)
    for n in range(4):
        assert h1_dim(M2, iterated_dual(regular_bimodule(M2), n).space) == 0
