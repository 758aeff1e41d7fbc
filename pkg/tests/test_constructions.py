import numpy as np
import pytest

from modext.constructions import (ConstructionError, block_report, bowtie, direct_sum, field_algebra,
                                  module_extension, self_bowtie, t_lau, t_module, theta_lau, theta_module,
                                  unitization)
from modext.core import AlgebraicModule, Bimodule, validate_algebra, zeros
from modext.instances import cyclic_group_algebra, matrix_upper, truncated_poly, zero_algebra

import oracle


def same(a, b):
    return a.shape == b.shape and bool(np.equal(a, b).astype(bool).all())


def test_bowtie_matches_oracle_table(corpus):
    for m in corpus:
        p = bowtie(m)
        ref = oracle.bowtie_table(*(oracle.tensor(t) for t in (m.base.mult, m.action.left, m.action.right,
                                                               m.inner.mult)))
        assert oracle.tensor(p.carrier.mult) == ref, m.name
        assert validate_algebra(p.carrier).ok
        assert block_report(p).ok


def test_theta_lau_is_bowtie_special_case():
    T2, N2 = matrix_upper(2), truncated_poly(2)
    p = theta_lau(T2, N2, [1, 0, 0])
    q = bowtie(theta_module(T2, N2, [1, 0, 0]))
    assert same(p.carrier.mult, q.carrier.mult)


def test_t_lau_is_bowtie_special_case():
    Q, T2 = field_algebra(), matrix_upper(2)
    T = np.array([[1], [0], [1]], dtype=object)
    assert same(t_lau(Q, T2, T).carrier.mult, bowtie(t_module(Q, T2, T)).carrier.mult)


def test_t_lau_zero_is_direct_sum():
    T2, C2 = matrix_upper(2), cyclic_group_algebra(2)
    assert same(t_lau(T2, C2, zeros(2, 3)).carrier.mult, direct_sum(T2, C2).carrier.mult)


def test_direct_sum_is_componentwise():
    T2, Z1 = matrix_upper(2), zero_algebra(1)
    p = direct_sum(T2, Z1)
    c = p.carrier.mult
    assert not any(c[:3, 3:].reshape(-1)) and not any(c[3:, :3].reshape(-1))


def test_unitization_has_unit():
    p = unitization(truncated_poly(2))
    assert p.carrier.is_unital
    assert list(p.carrier.computed_unit) == [1, 0, 0]


def test_module_extension_warns_and_zeroes():
    p = module_extension(theta_module(field_algebra(), matrix_upper(2), [1]))
    assert p.warnings
    assert not any(p.carrier.mult[1:, 1:, 1:].reshape(-1))
    assert not module_extension(theta_module(field_algebra(), zero_algebra(2), [1])).warnings


def test_self_bowtie_structure():
    T2 = matrix_upper(2)
    p = self_bowtie(T2)
    assert p.carrier.dim == 6 and p.provenance == "self_bowtie"


def test_bad_character_rejected():
    T2 = matrix_upper(2)
    with pytest.raises(ConstructionError):
        theta_lau(T2, zero_algebra(1), [1, 1, 0])  # e12 is nilpotent but theta(e12) = 1
    with pytest.raises(ConstructionError):
        theta_lau(T2, zero_algebra(1), [0, 0, 0])


def test_bad_homomorphism_rejected():
    Q, T2 = field_algebra(), matrix_upper(2)
    with pytest.raises(ConstructionError):
        t_lau(Q, T2, np.array([[2], [0], [0]], dtype=object))


def test_bowtie_rejects_invalid_module():
    T2 = matrix_upper(2)
    bad = AlgebraicModule(T2, T2, Bimodule(T2, T2.mult, zeros(3, 3, 3), check=False), check=False)
    with pytest.raises(ConstructionError):
        bowtie(bad)
