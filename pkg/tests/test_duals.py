import numpy as np

from modext.constructions import self_bowtie
from modext.core import regular_bimodule, validate_bimodule
from modext.duals import (canonical_map, dual_bimodule, is_bimodule_isomorphism, iterated_dual,
                          product_dual_actions, product_dual_level)
from modext.instances import matrix_upper, truncated_poly

import oracle


def test_dual_matches_pairing(corpus):
    for m in corpus[:12]:
        d = dual_bimodule(m.action)
        l, r = oracle.dual(oracle.tensor(m.action.left), oracle.tensor(m.action.right), m.dim_a, m.dim_x)
        assert oracle.tensor(d.left) == l and oracle.tensor(d.right) == r
        assert validate_bimodule(d).ok


def test_level_zero_is_module_itself():
    T2 = matrix_upper(2)
    M = regular_bimodule(T2)
    assert iterated_dual(M, 0).space is M


def test_double_dual_and_canonical_map(corpus):
    for m in corpus:
        t0 = iterated_dual(m.action, 0)
        t2 = iterated_dual(m.action, 2)
        assert t2.space.same_structure(m.action)
        assert is_bimodule_isomorphism(canonical_map(t0, t2), t0.space, t2.space)


def test_product_dual_matches_direct(products):
    for p in products[:8]:
        for n in range(4):
            direct = iterated_dual(regular_bimodule(p.carrier), n).space
            assert product_dual_actions(p, n).same_structure(direct)


def test_mixed_products_odd_level_land_in_a_block():
    # (f, g)(0, x) has A-part g·x: the odd-level cross operators map X* into A*
    p = self_bowtie(truncated_poly(2))
    lvl = product_dual_level(p, 1)
    assert lvl.cross_left.shape == (2, 2, 2)
    M = lvl.module
    dA = p.dim_a
    for s in range(p.dim_x):
        assert np.array_equal(M.L[dA + s][:dA, dA:], lvl.cross_left[s])
        assert not any(M.L[dA + s][dA:, :dA].reshape(-1))
