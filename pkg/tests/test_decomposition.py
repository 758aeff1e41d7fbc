import numpy as np
import pytest

from modext.cohomology import derivation_space, is_inner
from modext.constructions import bowtie, self_bowtie
from modext.decomposition import (InnernessCertificate, InvalidBlocks, NotADerivation, NotInner, assemble,
                                  decompose, decompose_unital, find_certificate)
from modext.duals import product_dual_level
from modext.instances import matrix_upper, truncated_poly, zero_algebra
from modext.core import zeros


def space(p, k):
    return derivation_space(p.carrier, product_dual_level(p, k).module)


def test_zero_derivation_splits_to_zero():
    p = self_bowtie(matrix_upper(2))
    b = decompose(p, zeros(6, 6), 1)
    assert all(not any(v.reshape(-1)) for v in b.as_dict().values())
    assert b.conditions == {"a": True, "b": True, "c": True}
    assert isinstance(find_certificate(b), InnernessCertificate)


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_round_trip_on_sample_products(products, k):
    for p in products[:10]:
        for D in space(p, k).basis:
            b = decompose(p, D, k)
            assert np.array_equal(assemble(b), D)


def test_non_derivation_rejected():
    p = self_bowtie(truncated_poly(2))
    D = zeros(4, 4)
    D[0, 0] = 1  # D(1) = 1 is not a derivation on a unital algebra
    with pytest.raises(NotADerivation) as exc:
        decompose(p, D, 0)
    assert exc.value.pairs


def test_bad_shape_rejected():
    with pytest.raises(ValueError):
        decompose(self_bowtie(truncated_poly(2)), zeros(3, 3), 0)


def test_assemble_rejects_tampered_blocks():
    p = self_bowtie(matrix_upper(2))
    D = space(p, 0).basis[0]
    b = decompose(p, D, 0)
    T_A = b.T_A.copy()
    T_A[0, 0] += 1
    tampered = type(b)(b.product, b.level, b.D_A, b.D_X, T_A, b.T_X)
    with pytest.raises(InvalidBlocks):
        assemble(tampered)


@pytest.mark.parametrize("k", [0, 1])
def test_certificates_agree_with_span_test(products, k):
    for p in products[:12]:
        lvl = product_dual_level(p, k)
        s = space(p, k)
        for D in list(s.basis) + list(s.inner_basis):
            cert = find_certificate(decompose(p, D, k))
            inner = is_inner(p.carrier, lvl.module, D)
            assert isinstance(cert, InnernessCertificate) == inner
            if inner:
                assert all(cert.identities.values())
            else:
                assert not cert and isinstance(cert, NotInner)


def test_zero_algebra_has_non_inner_derivation():
    p = self_bowtie(zero_algebra(2))
    s = space(p, 1)
    assert s.h1_dim > 0
    certs = [find_certificate(decompose(p, D, 1)) for D in s.basis]
    assert any(isinstance(c, NotInner) for c in certs)


def test_odd_certificate_labels():
    p = self_bowtie(matrix_upper(2))
    c = find_certificate(decompose(p, space(p, 1).inner_basis[0], 1))
    assert set(c.identities) == {"D_A=d_f", "D_X=d_g", "T_X=d_g", "T_A=delta_g"}
    c = find_certificate(decompose(p, space(p, 0).inner_basis[0], 0))
    assert set(c.identities) == {"D_A=d_F", "D_X=d_G", "T_X=d_G+delta_F", "T_A=0"}


@pytest.mark.parametrize("k", [0, 1, 2])
def test_unital_reduction(k):
    p = self_bowtie(matrix_upper(2))
    for D in space(p, k).basis:
        u = decompose_unital(p, D, k)
        assert all(u.conditions.values())
        assert np.array_equal(u.reconstruct(), D)


def test_unital_reduction_needs_unit():
    p = bowtie(self_bowtie(zero_algebra(1)).module)
    with pytest.raises(ValueError):
        decompose_unital(p, zeros(2, 2), 0)
