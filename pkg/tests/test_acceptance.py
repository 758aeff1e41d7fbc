"""Acceptance criteria, one test per criterion.

Each test records its outcome in ``conftest.ACCEPTANCE``; the pytest summary
prints one PASS/FAIL line per criterion.  Run as a script
(``python tests/test_acceptance.py``) to get the same lines without pytest.
"""
import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent))

import conftest
import oracle
from modext.cohomology import derivation_space, is_inner, is_n_weakly_amenable
from modext.constructions import bowtie, direct_sum, self_bowtie, t_module
from modext.core import regular_bimodule, zeros
from modext.decomposition import (InnernessCertificate, NotInner, _inner_system, assemble, decompose,
                                  find_certificate)
from modext.duals import iterated_dual, product_dual_actions, product_dual_level
from modext.instances import corpus_recipes, generate_corpus, load_pins, materialize, matrix_full, matrix_upper, \
    zero_algebra
from modext.theorems import (DENSITY_VARIANTS, check_cor_directsum, check_cor_lau, check_cor_selfbowtie,
                             check_cor_zhang, check_dgg_necessity, check_prop_density, check_theorem, product_h1)

LEVELS = (0, 1, 2, 3)


def record(n: int, ok: bool, detail: str):
    conftest.ACCEPTANCE[n] = (ok, detail)
    assert ok, f"criterion {n}: {detail}"


def distinct(algebras):
    seen = []
    for alg in algebras:
        if not any(a.same_structure(alg) for a in seen):
            seen.append(alg)
    return seen


def module_algebras(corpus):
    """Distinct base and inner algebras of the corpus."""
    return distinct(a for m in corpus for a in (m.base, m.inner))


def all_algebras(corpus, products):
    """Module algebras plus the product algebras themselves."""
    return distinct([a for m in corpus for a in (m.base, m.inner)] + [p.carrier for p in products])


def criterion_1(corpus, products):
    t0 = time.perf_counter()
    bad, count = [], 0
    for p in products:
        for k in LEVELS:
            for D in derivation_space(p.carrier, product_dual_level(p, k).module).basis:
                count += 1
                b = decompose(p, D, k)
                if not all(b.conditions.values()) or not np.array_equal(assemble(b), D):
                    bad.append((p.carrier.name, k))
    dt = time.perf_counter() - t0
    ok = not bad and len(corpus) >= 20 and dt < 120
    return ok, f"{count} derivations on {len(products)} instances, {len(bad)} failures, {dt:.1f}s"


def criterion_2(corpus):
    bad, count = [], 0
    for m in corpus:
        for parity in ("odd", "even"):
            for n in (0, 1):
                rep = check_theorem(m, n, parity)
                count += 1
                if not rep.iff_consistent:
                    bad.append((m.name, rep.dual_level))
    return not bad, f"{count} reports at levels 0-3, counterexamples: {bad or 'none'}"


def criterion_3(products):
    inner_n = absent_n = 0
    bad = []
    for p in products:
        for k in LEVELS:
            lvl = product_dual_level(p, k)
            s = derivation_space(p.carrier, lvl.module)
            system = _inner_system(lvl)
            candidates = list(s.inner_basis) + list(s.basis)
            if s.basis:
                candidates.append(sum(s.basis[1:], s.basis[0]))
            for D in candidates:
                cert = find_certificate(decompose(p, D, k))
                inner = is_inner(p.carrier, lvl.module, D)
                if isinstance(cert, InnernessCertificate):
                    inner_n += 1
                    expected = ({"T_A=delta_g"} if k % 2 else {"T_A=0", "T_X=d_G+delta_F"}) <= set(cert.identities)
                    if not (inner and expected and all(cert.identities.values())):
                        bad.append((p.carrier.name, k, "cert"))
                else:
                    absent_n += 1
                    y = cert.witness
                    rhs = np.concatenate([D[:, j] for j in range(D.shape[1])])
                    proof = not any(y @ system) and (y @ rhs) != 0
                    if inner or not isinstance(cert, NotInner) or not proof:
                        bad.append((p.carrier.name, k, "absence"))
    return not bad and inner_n > 0 and absent_n > 0, \
        f"{inner_n} certificates, {absent_n} absence proofs, {len(bad)} failures"


def criterion_4(corpus, recipes):
    bad = []
    checks = 0

    def need(rep, label):
        nonlocal checks
        checks += 1
        if not (rep.iff_consistent and rep.extra.get("agrees_with_theorem", True)):
            bad.append(label)

    for m in corpus:
        for parity in ("odd", "even"):
            need(check_cor_zhang(m, 0, parity), f"zhang {m.name} {parity}")
    for r in recipes:
        if r.kind == "theta_action":
            A, B = materialize(r.params["A"]), materialize(r.params["B"])
            for parity in ("odd", "even"):
                need(check_cor_lau(A, B, r.params["theta"], 0, parity), f"lau {r.name} {parity}")
        if r.kind == "t_action" and r.params.get("T") is None:
            A, B = materialize(r.params["A"]), materialize(r.params["B"])
            for parity in ("odd", "even"):
                rep = check_cor_directsum(A, B, 0, parity)
                need(rep, f"directsum {r.name} {parity}")
                thm = check_theorem(t_module(A, B, zeros(B.dim, A.dim)), 0, parity)
                checks += 1
                if thm.conditions_hold != rep.conditions_hold or thm.direct_h1 != rep.direct_h1:
                    bad.append(f"directsum vs t_lau {r.name}")
                if not direct_sum(A, B).carrier.same_structure(bowtie(t_module(A, B, zeros(B.dim, A.dim))).carrier):
                    bad.append(f"direct sum table {r.name}")
    algs = module_algebras(corpus)
    for A in algs:
        for n in (0, 1):
            need(check_cor_selfbowtie(A, n, "even"), f"selfbowtie {A.name} even {n}")
            rep = check_cor_selfbowtie(A, n, "odd")
            need(rep, f"selfbowtie {A.name} odd {n}")
            k = 2 * n + 1
            checks += 1
            if is_n_weakly_amenable(self_bowtie(A).carrier, k) != is_n_weakly_amenable(A, k):
                bad.append(f"selfbowtie biconditional {A.name} {k}")
    return not bad, f"{checks} checks ({len(algs)} algebras for the self-bowtie biconditional), failures: {bad or 'none'}"


def criterion_5(corpus):
    bad, fired = [], 0
    for m in corpus:
        for v in DENSITY_VARIANTS:
            for n in ((0, 1) if v.startswith("2.3") else (1,)):
                rep = check_prop_density(m, n, v)
                fired += rep.conditions_hold
                if rep.conditions_hold and rep.direct_h1 != 0:
                    bad.append((m.name, v, n))
    return not bad, f"hypotheses held in {fired} cases, violations: {bad or 'none'}"


def criterion_6(products):
    bad = []
    for p in products:
        for n in LEVELS:
            direct = iterated_dual(regular_bimodule(p.carrier), n).space
            got = product_dual_actions(p, n)
            if not (np.array_equal(got.left, direct.left) and np.array_equal(got.right, direct.right)):
                bad.append((p.carrier.name, n))
    return not bad, f"{len(products) * len(LEVELS)} comparisons, mismatches: {bad or 'none'}"


def h1_at(alg, n):
    return derivation_space(alg, iterated_dual(regular_bimodule(alg), n).space).h1_dim


def criterion_7(corpus, products):
    algs = all_algebras(corpus, products)
    bad = [(a.name, n) for a in algs for n in (0, 1) if h1_at(a, n) != h1_at(a, n + 2)]
    return not bad, f"{len(algs)} algebras, violations: {bad or 'none'}"


def criterion_8(recipes):
    got, bad = {}, []
    T2 = matrix_upper(2)
    s = derivation_space(T2, regular_bimodule(T2))
    got["T2"] = (s.derivation_dim, s.inner_dim, s.h1_dim)
    if got["T2"] != (2, 2, 0) or got["T2"] != oracle.algebra_h1(oracle.tensor(T2.mult), 0):
        bad.append("T2")
    for d in (1, 2, 3):
        Z = zero_algebra(d)
        h = h1_at(Z, 0)
        if h != d * d or oracle.algebra_h1(oracle.tensor(Z.mult), 0)[2] != d * d:
            bad.append(f"Z{d}")
    M2 = matrix_full(2)
    if any(h1_at(M2, n) != 0 for n in LEVELS):
        bad.append("M2")
    pins = load_pins()
    for r in recipes:
        p = bowtie(materialize(r))
        if any(pins[r.name][f"h1_level_{k}"] != product_h1(p, k) for k in LEVELS):
            bad.append(r.name)
    return not bad, f"T2 {got['T2']}, Zd h1 = d^2 for d=1..3, M2 h1 = 0 at levels 0-3, " \
                    f"{len(recipes)} corpus pins recomputed; failures: {bad or 'none'}"


def criterion_9(corpus, products):
    algs = all_algebras(corpus, products)
    bad = [a.name for a in algs if not check_dgg_necessity(a)]
    return not bad, f"{len(algs)} algebras, violations: {bad or 'none'}"


def test_criterion_1_lemma_verification(corpus, products):
    record(1, *criterion_1(corpus, products))


def test_criterion_2_master_iff(corpus):
    record(2, *criterion_2(corpus))


def test_criterion_3_certificates(products):
    record(3, *criterion_3(products))


def test_criterion_4_corollary_coherence(corpus, recipes):
    record(4, *criterion_4(corpus, recipes))


def test_criterion_5_sufficiency(corpus):
    record(5, *criterion_5(corpus))


def test_criterion_6_dual_formula(products):
    record(6, *criterion_6(products))


def test_criterion_7_reflexivity(corpus, products):
    record(7, *criterion_7(corpus, products))


def test_criterion_8_pins(recipes):
    record(8, *criterion_8(recipes))


def test_criterion_9_dgg(corpus, products):
    record(9, *criterion_9(corpus, products))


if __name__ == "__main__":
    corpus = generate_corpus(0)
    products = [bowtie(m) for m in corpus]
    recipes = corpus_recipes(0)
    runs = {
        1: lambda: criterion_1(corpus, products), 2: lambda: criterion_2(corpus), 3: lambda: criterion_3(products),
        4: lambda: criterion_4(corpus, recipes), 5: lambda: criterion_5(corpus), 6: lambda: criterion_6(products),
        7: lambda: criterion_7(corpus, products), 8: lambda: criterion_8(recipes),
        9: lambda: criterion_9(corpus, products),
    }
    failed = 0
    for n, fn in runs.items():
        ok, detail = fn()
        failed += not ok
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}", flush=True)
    sys.exit(1 if failed else 0)
