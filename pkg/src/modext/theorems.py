"""Decidable forms of the weak-amenability characterisations of A⋈X.

Each checker turns the quantified conditions ("every such map is inner",
"the only such map is zero") into exact linear algebra: build the joint
system over all unknown blocks, take its nullspace, project to the
quantified block and compare spans.  The result is then compared with the
direct H¹ computation on the product algebra.

Levels: ``n`` is the index in 2n+1 (odd checkers) or 2n (even checkers);
the dual level actually used is stored as ``dual_level`` in the report.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

from .cohomology import centralizer, derivation_space, h1_dim, inner_derivation, inner_derivations
from .constructions import (
    ProductAlgebra,
    bowtie,
    direct_sum,
    module_extension,
    self_bowtie,
    theta_lau,
    theta_module,
)
from .core import AlgebraicModule, FiniteAlgebra, basis_vector, regular_bimodule
from .decomposition import leibniz_identities, lemma_identities
from .duals import ProductDualLevel, iterated_dual, product_dual_level
from .linalg import nullspace, rank, row_basis
from .systems import BlockSystem, Identity, contained, term

__all__ = [
    "TAGS",
    "Condition",
    "ConditionReport",
    "dual_level_for",
    "check_thm_odd",
    "check_thm_even",
    "check_theorem",
    "check_prop_density",
    "DENSITY_VARIANTS",
    "check_cor_zhang",
    "check_cor_lau",
    "check_cor_selfbowtie",
    "check_cor_directsum",
    "check_dgg_necessity",
    "check_thm_unital",
    "product_h1",
]

TAGS = (
    "thm-odd", "thm-even", "prop-2.3", "prop-3.4", "prop-3.9",
    "cor-zhang-odd", "cor-zhang-even", "cor-lau-odd", "cor-lau-even",
    "cor-selfbowtie-odd", "cor-selfbowtie-even", "cor-directsum-odd", "cor-directsum-even",
    "dgg-1.2", "thm-unital-odd", "thm-unital-even",
)

DENSITY_VARIANTS = ("2.3-odd-1", "2.3-odd-2", "3.4-even", "3.9-combined")


@dataclass(frozen=True)
class Condition:
    name: str
    holds: bool
    quantified_dim: int = 0
    target_dim: int = 0
    note: str = ""


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of one checker on one instance.

    ``kind`` is ``iff`` (conditions hold jointly exactly when direct_h1 = 0),
    ``sufficient`` (conditions imply direct_h1 = 0) or ``necessary``
    (direct_h1 = 0 implies the conditions).
    """

    theorem: str
    level: int
    dual_level: int
    kind: str
    conditions: tuple[Condition, ...]
    direct_h1: int
    iff_consistent: bool
    instance: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def conditions_hold(self) -> bool:
        return all(c.holds for c in self.conditions)

    def condition(self, name: str) -> Condition:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["conditions"] = [asdict(c) for c in self.conditions]
        d["conditions_hold"] = self.conditions_hold
        return d


def dual_level_for(n: int, parity: str) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    if parity not in ("odd", "even"):
        raise ValueError("parity must be 'odd' or 'even'")
    return 2 * n + 1 if parity == "odd" else 2 * n


def _consistent(kind: str, hold: bool, h1: int) -> bool:
    wa = h1 == 0
    if kind == "iff":
        return hold == wa
    if kind == "sufficient":
        return (not hold) or wa
    if kind == "necessary":
        return (not wa) or hold
    raise ValueError(kind)


def _report(tag, n, k, kind, conds, h1, name, **extra) -> ConditionReport:
    hold = all(c.holds for c in conds)
    return ConditionReport(tag, n, k, kind, tuple(conds), h1, _consistent(kind, hold, h1), name, extra)


def product_h1(p: ProductAlgebra, k: int) -> int:
    return derivation_space(p.carrier, product_dual_level(p, k).module).h1_dim


def _flat(mats) -> list[np.ndarray]:
    return [np.asarray(m, dtype=object).reshape(-1) for m in mats]


def _shapes(lvl: ProductDualLevel, blocks) -> dict:
    dA, dX = lvl.product.dim_a, lvl.product.dim_x
    all_shapes = {"D_A": (dA, dA), "D_X": (dX, dA), "T_A": (dA, dX), "T_X": (dX, dX)}
    return {b: all_shapes[b] for b in blocks}


def _projection(shapes: dict, identities, block: str) -> list[np.ndarray]:
    sols = BlockSystem(shapes).solutions(identities)
    return BlockSystem.projection(sols, block)


def _contained(name: str, quantified, target, note: str = "") -> Condition:
    ok, dims = contained(quantified, target)
    return Condition(name, ok, dims["quantified_dim"], dims["target_dim"], note)


def _only_zero(name: str, quantified, note: str = "") -> Condition:
    return Condition(name, len(quantified) == 0, len(quantified), 0, note)


def _wa(name: str, alg: FiniteAlgebra, k: int, note: str = "") -> Condition:
    space = derivation_space(alg, iterated_dual(regular_bimodule(alg), k).space)
    return Condition(name, space.h1_dim == 0, space.derivation_dim, space.inner_dim, note)


def _action_zero(lvl: ProductDualLevel, block: str, label: str) -> list[Identity]:
    """x·D(a) = D(a)·x = 0 inside X^(k) for a block D: A -> X^(k)."""
    A = lvl.product.base
    out = []
    for i in range(A.dim):
        e = basis_vector(A.dim, i)
        for s in range(lvl.product.dim_x):
            out.append(Identity(label, "xD(a)=0", (s, i), lvl.dim_x, (term(block, e, lvl.xx.L[s]),)))
            out.append(Identity(label, "D(a)x=0", (i, s), lvl.dim_x, (term(block, e, lvl.xx.R[s]),)))
    return out


def _hom_identities(lvl: ProductDualLevel, block: str, target, label: str) -> list[Identity]:
    """block: X -> target is an A-bimodule map (target an A-bimodule)."""
    m = lvl.product.module
    dA, dX = m.dim_a, m.dim_x
    out = []
    for i in range(dA):
        for s in range(dX):
            es = basis_vector(dX, s)
            out.append(Identity(label, "T(ax)=aT(x)", (i, s), target.dim, (
                term(block, m.action.left[i, s]), term(block, es, target.L[i], -1))))
            out.append(Identity(label, "T(xa)=T(x)a", (s, i), target.dim, (
                term(block, m.action.right[s, i]), term(block, es, target.R[i], -1))))
    return out


def _kills_products(lvl: ProductDualLevel, block: str, dim: int, label: str) -> list[Identity]:
    X = lvl.product.inner
    return [Identity(label, "T(xy)=0", (s, t), dim, (term(block, X.mult[s, t]),))
            for s in range(X.dim) for t in range(X.dim)]


def _cross_sum_zero(lvl: ProductDualLevel, block: str, label: str, dim: int) -> list[Identity]:
    """x·T(y) + T(x)·y = 0 across the blocks."""
    dX = lvl.product.dim_x
    out = []
    for s in range(dX):
        for t in range(dX):
            out.append(Identity(label, "xT(y)+T(x)y=0", (s, t), dim, (
                term(block, basis_vector(dX, t), lvl.cross_left[s]),
                term(block, basis_vector(dX, s), lvl.cross_right[t]))))
    return out


def _delta_space(lvl: ProductDualLevel, elements) -> list[np.ndarray]:
    return [lvl.delta(u) for u in elements]


def _xa_inner(lvl: ProductDualLevel, elements) -> list[np.ndarray]:
    A = lvl.product.base
    return [inner_derivation(A, lvl.xa, g) for g in elements]


# ---------------------------------------------------------------------------
# theorems

def _p(m) -> ProductAlgebra:
    return m if isinstance(m, ProductAlgebra) else bowtie(m)


def odd_conditions(p: ProductAlgebra, k: int) -> list[Condition]:
    lvl = product_dual_level(p, k)
    X = p.inner
    conds = [_wa("(1) A weakly amenable", p.base, k)]
    # (2): project the joint (T_X, D_X, T_A) system onto T_X
    ids = lemma_identities(lvl, absent=("D_A",))
    proj = _projection(_shapes(lvl, ("D_X", "T_A", "T_X")), ids, "T_X")
    conds.append(_contained("(2) admissible T_X inner", proj, _flat(inner_derivations(X, lvl.xx))))
    # (3): D_X derivations killed by the X-action are d_g with g central in X^(k)
    ids = leibniz_identities("D_X", p.base, lvl.xa, "3", "D_X") + _action_zero(lvl, "D_X", "3")
    proj = _projection(_shapes(lvl, ("D_X",)), ids, "D_X")
    target = _xa_inner(lvl, centralizer(X, lvl.xx))
    conds.append(_contained("(3) X-annihilated D_X = d_g, g X-central", proj, _flat(target)))
    # (4): A-module maps T_A with T_A(xy) = 0 vanish
    ids = lemma_identities(lvl, absent=("D_A", "D_X", "T_X"))
    proj = _projection(_shapes(lvl, ("T_A",)), ids, "T_A")
    conds.append(_only_zero("(4) T_A = 0", proj))
    return conds


def even_conditions(p: ProductAlgebra, k: int) -> list[Condition]:
    lvl = product_dual_level(p, k)
    A, X = p.base, p.inner
    conds = []
    # (1): the full block system projected onto D_A
    ids = lemma_identities(lvl)
    proj = _projection(_shapes(lvl, ("D_A", "D_X", "T_A", "T_X")), ids, "D_A")
    conds.append(_contained("(1) admissible D_A inner", proj, _flat(inner_derivations(A, lvl.aa))))
    # (2): no D_A; T_X must be delta_F + d_G with F central in A^(k)
    ids = lemma_identities(lvl, absent=("D_A",))
    proj = _projection(_shapes(lvl, ("D_X", "T_A", "T_X")), ids, "T_X")
    central = centralizer(A, lvl.aa)
    target = _flat(_delta_space(lvl, central)) + _flat(inner_derivations(X, lvl.xx))
    conds.append(_contained("(2) admissible T_X = delta_F + d_G", proj, target))
    # (3): X-annihilated D_X = d_G with d_G + delta_F = 0, F central
    ids = leibniz_identities("D_X", A, lvl.xa, "3", "D_X") + _action_zero(lvl, "D_X", "3")
    proj = _projection(_shapes(lvl, ("D_X",)), ids, "D_X")
    conds.append(_contained("(3) X-annihilated D_X = d_G, d_G + delta_F = 0", proj,
                            _flat(_xa_inner(lvl, _compensated_g(lvl)))))
    # (4): T_A paired with an A-module map T_X through the product identity
    ids = lemma_identities(lvl, absent=("D_A", "D_X"))
    proj = _projection(_shapes(lvl, ("T_A", "T_X")), ids, "T_A")
    conds.append(_only_zero("(4) T_A = 0", proj))
    return conds


def _compensated_g(lvl: ProductDualLevel) -> list[np.ndarray]:
    """G-parts of pairs (F, G) with F central in A^(k) and d_G + delta_F = 0 on X."""
    p = lvl.product
    A, X = p.base, p.inner
    na, nx = lvl.dim_a, lvl.dim_x
    rows = []
    for i in range(A.dim):
        rows.append(np.hstack([lvl.aa.L[i] - lvl.aa.R[i], np.zeros((na, nx), dtype=object)]))
    for s in range(X.dim):
        rows.append(np.hstack([lvl.cross_left[s] - lvl.cross_right[s], lvl.xx.L[s] - lvl.xx.R[s]]))
    if not rows:
        return [v[na:] for v in nullspace(np.zeros((0, na + nx), dtype=object), na + nx)]
    M = np.vstack(rows)
    return row_basis([v[na:] for v in nullspace(M, na + nx)])


def check_thm_odd(m, n: int) -> ConditionReport:
    p = _p(m)
    k = dual_level_for(n, "odd")
    return _report("thm-odd", n, k, "iff", odd_conditions(p, k), product_h1(p, k), p.carrier.name)


def check_thm_even(m, n: int) -> ConditionReport:
    p = _p(m)
    k = dual_level_for(n, "even")
    return _report("thm-even", n, k, "iff", even_conditions(p, k), product_h1(p, k), p.carrier.name)


def check_theorem(m, n: int, parity: str) -> ConditionReport:
    return check_thm_odd(m, n) if parity == "odd" else check_thm_even(m, n)


# ---------------------------------------------------------------------------
# density propositions

def _span_equal(name: str, vectors, dim: int) -> Condition:
    r = rank(np.array(vectors, dtype=object)) if len(vectors) else 0
    return Condition(name, r == dim, r, dim)


def _xx_products(X: FiniteAlgebra, level: int) -> list[np.ndarray]:
    """Spanning set of X·X^(level) + X^(level)·X."""
    mod = iterated_dual(regular_bimodule(X), level).space
    vecs = []
    for s in range(X.dim):
        vecs += list(mod.L[s].T) + list(mod.R[s].T)
    return vecs


def _xa_products(p: ProductAlgebra, level: int) -> list[np.ndarray]:
    """Spanning set of X·A^(level) + A^(level)·X inside X^(level) (level even)."""
    lvl = product_dual_level(p, level)
    vecs = []
    for s in range(p.dim_x):
        vecs += list(lvl.cross_left[s].T) + list(lvl.cross_right[s].T)
    return vecs


def check_prop_density(m, n: int, variant: str) -> ConditionReport:
    """Sufficient conditions for weak amenability of A⋈X.

    2.3-odd-1 / 2.3-odd-2 work at level 2n+1, 3.4-even at level 2n (n ≥ 1),
    3.9-combined at level n itself (n ≥ 1).
    """
    if variant not in DENSITY_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {DENSITY_VARIANTS}")
    p = _p(m)
    A, X = p.base, p.inner
    dX = X.dim
    if variant.startswith("2.3"):
        k = 2 * n + 1
        conds = [_wa("A weakly amenable", A, k), _wa("X weakly amenable", X, k)]
        if variant == "2.3-odd-1":
            conds.append(_span_equal("span(X X^(2n) + X^(2n) X) = X^(2n)", _xx_products(X, 2 * n), dX))
        else:
            conds.append(_span_equal("span(X A^(2n) + A^(2n) X) = X^(2n)", _xa_products(p, 2 * n), dX))
        tag = "prop-2.3"
    elif variant == "3.4-even":
        if n < 1:
            raise ValueError("3.4-even needs n >= 1")
        k = 2 * n
        conds = [
            _span_equal("span(X X) = X", list(X.products_span()), dX),
            _wa("A weakly amenable", A, k), _wa("X weakly amenable", X, k),
            _span_equal("span(X X^(2n-1) + X^(2n-1) X) = X^(2n-1)", _xx_products(X, k - 1), dX),
        ]
        tag = "prop-3.4"
    else:
        if n < 1:
            raise ValueError("3.9-combined needs n >= 1")
        k = n
        mod = iterated_dual(regular_bimodule(X), k - 1).space
        left = [v for s in range(dX) for v in mod.L[s].T]
        right = [v for s in range(dX) for v in mod.R[s].T]
        lc = _span_equal("span(X X^(n-1)) = X^(n-1)", left, dX)
        rc = _span_equal("span(X^(n-1) X) = X^(n-1)", right, dX)
        either = Condition("span(X X^(n-1)) = X^(n-1) or span(X^(n-1) X) = X^(n-1)", lc.holds or rc.holds,
                           max(lc.quantified_dim, rc.quantified_dim), dX)
        conds = [_span_equal("span(X X) = X", list(X.products_span()), dX), either,
                 _wa("A weakly amenable", A, k), _wa("X weakly amenable", X, k)]
        tag = "prop-3.9"
    return _report(tag, n, k, "sufficient", conds, product_h1(p, k), p.carrier.name, variant=variant)


# ---------------------------------------------------------------------------
# corollaries

def _overall(rep: ConditionReport) -> dict:
    return {"theorem_conditions_hold": rep.conditions_hold, "theorem_iff_consistent": rep.iff_consistent}


def check_cor_zhang(m: AlgebraicModule, n: int, parity: str) -> ConditionReport:
    """Characterisation of the classical module extension A⋉X (product on X ignored)."""
    p = module_extension(m)
    k = dual_level_for(n, parity)
    lvl = product_dual_level(p, k)
    A, X = p.base, p.inner
    if parity == "odd":
        ids = _hom_identities(lvl, "T", lvl.xa, "2") + _cross_sum_zero(lvl, "T", "2", lvl.dim_a)
        proj = _projection({"T": (X.dim, X.dim)}, ids, "T")
        conds = [
            _wa("(1) A weakly amenable", A, k),
            _only_zero("(2) A-maps T: X -> X^(k) with xT(y)+T(x)y=0 vanish", proj),
            Condition("(3) H1(A, X^(k)) = 0", h1_dim(A, lvl.xa) == 0),
        ]
        proj = _projection({"S": (A.dim, X.dim)}, _hom_identities(lvl, "S", lvl.aa, "4"), "S")
        target = _delta_space(lvl, centralizer(A, lvl.xa))
        conds.append(_contained("(4) A-maps S: X -> A^(k) are delta_f, f central", proj, _flat(target)))
    else:
        ids = lemma_identities(lvl, absent=("D_X", "T_A"))
        proj = _projection(_shapes(lvl, ("D_A", "T_X")), ids, "D_A")
        conds = [_contained("(1) admissible D inner", proj, _flat(inner_derivations(A, lvl.aa)))]
        proj = _projection({"T": (X.dim, X.dim)}, _hom_identities(lvl, "T", lvl.xa, "2"), "T")
        target = _delta_space(lvl, centralizer(A, lvl.aa))
        conds.append(_contained("(2) A-maps T: X -> X^(k) are delta_F, F central", proj, _flat(target)))
        conds.append(Condition("(3) H1(A, X^(k)) = 0", h1_dim(A, lvl.xa) == 0))
        ids = _hom_identities(lvl, "S", lvl.aa, "4") + _cross_sum_zero(lvl, "S", "4", lvl.dim_x)
        proj = _projection({"S": (A.dim, X.dim)}, ids, "S")
        conds.append(_only_zero("(4) A-maps S with xS(y)+S(x)y=0 vanish", proj))
    thm = check_theorem(p, n, parity)
    return _report(f"cor-zhang-{parity}", n, k, "iff", conds, thm.direct_h1, p.carrier.name,
                   agrees_with_theorem=thm.conditions_hold == all(c.holds for c in conds), **_overall(thm))


def _theta_identities(lvl: ProductDualLevel, block: str, target, theta, label: str) -> list[Identity]:
    """a·S(b) = S(b)·a = θ(a)S(b) for S: B -> target."""
    out = []
    dB = lvl.product.dim_x
    for i in range(lvl.product.dim_a):
        for s in range(dB):
            e = basis_vector(dB, s)
            for name, op in (("aS(b)=θ(a)S(b)", target.L[i]), ("S(b)a=θ(a)S(b)", target.R[i])):
                out.append(Identity(label, name, (i, s), target.dim, (
                    term(block, e, op), term(block, theta[i] * e, None, -1))))
    return out


def check_cor_lau(A: FiniteAlgebra, B: FiniteAlgebra, theta, n: int, parity: str) -> ConditionReport:
    p = theta_lau(A, B, theta)
    th = p.params["theta"]
    k = dual_level_for(n, parity)
    lvl = product_dual_level(p, k)
    dA, dB = A.dim, B.dim
    conds = []
    # (3) in both parities: θ-derivations A -> B^(k) killed by B vanish
    ids3 = leibniz_identities("D", A, lvl.xa, "3", "D") + _action_zero(lvl, "D", "3")
    zero3 = _only_zero("(3) B-annihilated θ-derivations A -> B^(k) vanish",
                       _projection({"D": (dB, dA)}, ids3, "D"))
    s_ids = _theta_identities(lvl, "S", lvl.aa, th, "4") + _kills_products(lvl, "S", lvl.dim_a, "4")
    if parity == "odd":
        conds.append(_wa("(1) A weakly amenable", A, k))
        # (2): T(b)d + bT(d) = S(bd) in A^(k), S an A-module map
        ids = leibniz_identities("T", B, lvl.xx, "2", "T")
        ids += _theta_identities(lvl, "S", lvl.aa, th, "2")
        for s in range(dB):
            for t in range(dB):
                ids.append(Identity("2", "T(b)d+bT(d)=S(bd)", (s, t), lvl.dim_a, (
                    term("T", basis_vector(dB, s), lvl.cross_right[t]),
                    term("T", basis_vector(dB, t), lvl.cross_left[s]),
                    term("S", B.mult[s, t], None, -1))))
        proj = _projection({"T": (dB, dB), "S": (dA, dB)}, ids, "T")
        conds.append(_contained("(2) admissible T inner", proj, _flat(inner_derivations(B, lvl.xx))))
        conds.append(zero3)
        conds.append(_only_zero("(4) S: B -> A^(k) with S(bd)=0, θ-equivariant, vanishes",
                                _projection({"S": (dA, dB)}, s_ids, "S")))
    else:
        # (1): D_1(a)b = bD_1(a) = -D(a)·b across the blocks
        ids = leibniz_identities("D", A, lvl.aa, "1", "D") + leibniz_identities("D1", A, lvl.xa, "1", "D1")
        for i in range(dA):
            e = basis_vector(dA, i)
            for s in range(dB):
                ids.append(Identity("1", "D1(a)b=-D(a)b", (i, s), lvl.dim_x, (
                    term("D1", e, lvl.xx.R[s]), term("D", e, lvl.cross_right[s]))))
                ids.append(Identity("1", "bD1(a)=-bD(a)", (s, i), lvl.dim_x, (
                    term("D1", e, lvl.xx.L[s]), term("D", e, lvl.cross_left[s]))))
        proj = _projection({"D": (dA, dA), "D1": (dB, dA)}, ids, "D")
        conds.append(_contained("(1) admissible D inner", proj, _flat(inner_derivations(A, lvl.aa))))
        conds.append(_wa("(2) B weakly amenable", B, k))
        conds.append(zero3)
        ids = list(s_ids)
        for s in range(dB):
            for t in range(dB):
                ids.append(Identity("4", "T(bd)=bT(d)+T(b)d+S(b)d+bS(d)", (s, t), lvl.dim_x, (
                    term("T", B.mult[s, t]),
                    term("T", basis_vector(dB, t), lvl.xx.L[s], -1),
                    term("T", basis_vector(dB, s), lvl.xx.R[t], -1),
                    term("S", basis_vector(dB, s), lvl.cross_right[t], -1),
                    term("S", basis_vector(dB, t), lvl.cross_left[s], -1))))
        proj = _projection({"S": (dA, dB), "T": (dB, dB)}, ids, "S")
        conds.append(_only_zero("(4) admissible S vanishes", proj))
    thm = check_theorem(bowtie(theta_module(A, B, th)), n, parity)
    return _report(f"cor-lau-{parity}", n, k, "iff", conds, product_h1(p, k), p.carrier.name,
                   agrees_with_theorem=thm.conditions_hold == all(c.holds for c in conds),
                   theorem_h1=thm.direct_h1, **_overall(thm))


def check_cor_selfbowtie(A: FiniteAlgebra, n: int, parity: str) -> ConditionReport:
    p = self_bowtie(A)
    k = dual_level_for(n, parity)
    conds = [_wa("(1) A weakly amenable", A, k)]
    if parity == "even":
        lvl = product_dual_level(p, k)
        d = A.dim
        ids = []
        for i in range(d):
            for j in range(d):
                ei, ej = basis_vector(d, i), basis_vector(d, j)
                ids.append(Identity("2", "aS(c)=0", (i, j), lvl.dim_a, (term("S", ej, lvl.aa.L[i]),)))
                ids.append(Identity("2", "S(a)c=0", (i, j), lvl.dim_a, (term("S", ei, lvl.aa.R[j]),)))
                ids.append(Identity("2", "S(ac)=0", (i, j), lvl.dim_a, (term("S", A.mult[i, j]),)))
        conds.append(_only_zero("(2) S: A -> A^(k) with aS(c)=S(a)c=S(ac)=0 vanishes",
                                _projection({"S": (d, d)}, ids, "S")))
    thm = check_theorem(p, n, parity)
    return _report(f"cor-selfbowtie-{parity}", n, k, "iff", conds, thm.direct_h1, p.carrier.name,
                   agrees_with_theorem=thm.conditions_hold == all(c.holds for c in conds), **_overall(thm))


def check_cor_directsum(A: FiniteAlgebra, B: FiniteAlgebra, n: int, parity: str) -> ConditionReport:
    p = direct_sum(A, B)
    k = dual_level_for(n, parity)
    conds = [_wa("(1a) A weakly amenable", A, k), _wa("(1b) B weakly amenable", B, k)]
    if parity == "even":
        lvl = product_dual_level(p, k)
        dA, dB = A.dim, B.dim
        ids = [Identity("2", "D(ac)=0", (i, j), lvl.dim_x, (term("D", A.mult[i, j]),))
               for i in range(dA) for j in range(dA)]
        ids += _action_zero(lvl, "D", "2")
        conds.append(_only_zero("(2) D: A -> B^(k) with D(ac)=0, bD(a)=D(a)b=0 vanishes",
                                _projection({"D": (dB, dA)}, ids, "D")))
        ids = _kills_products(lvl, "S", lvl.dim_a, "3")
        for i in range(dA):
            for s in range(dB):
                e = basis_vector(dB, s)
                ids.append(Identity("3", "aS(b)=0", (i, s), lvl.dim_a, (term("S", e, lvl.aa.L[i]),)))
                ids.append(Identity("3", "S(b)a=0", (s, i), lvl.dim_a, (term("S", e, lvl.aa.R[i]),)))
        conds.append(_only_zero("(3) S: B -> A^(k) with S(bd)=0, aS(b)=S(b)a=0 vanishes",
                                _projection({"S": (dA, dB)}, ids, "S")))
    thm = check_theorem(p, n, parity)
    return _report(f"cor-directsum-{parity}", n, k, "iff", conds, thm.direct_h1, p.carrier.name,
                   agrees_with_theorem=thm.conditions_hold == all(c.holds for c in conds), **_overall(thm))


def check_dgg_necessity(A: FiniteAlgebra) -> bool:
    """A weakly amenable (first dual) implies span(A·A) = A."""
    wa = h1_dim(A, iterated_dual(regular_bimodule(A), 1).space) == 0
    return (not wa) or rank(np.array(A.products_span(), dtype=object)) == A.dim


def check_thm_unital(m, n: int, parity: str) -> ConditionReport:
    """Unital-X statements: sufficiency at both parities, plus a necessary form at odd levels."""
    p = _p(m)
    X = p.inner
    if X.computed_unit is None:
        raise ValueError("X has no identity element")
    k = dual_level_for(n, parity)
    conds = [_wa("A weakly amenable", p.base, k), _wa("X weakly amenable", X, k)]
    rep = _report(f"thm-unital-{parity}", n, k, "sufficient", conds, product_h1(p, k), p.carrier.name)
    if parity == "even":
        return rep
    lvl = product_dual_level(p, k)
    u = X.computed_unit
    cl_u = np.einsum("s,sqr->qr", u, lvl.cross_left)
    cr_u = np.einsum("s,sqr->qr", u, lvl.cross_right)
    ids = leibniz_identities("T", X, lvl.xx, "2", "T") + _hom_identities(lvl, "T", lvl.xa, "2")
    for s in range(X.dim):
        ids.append(Identity("2", "T(x)1=1T(x)", (s,), lvl.dim_a, (
            term("T", basis_vector(X.dim, s), cr_u), term("T", basis_vector(X.dim, s), cl_u, -1))))
    proj = _projection({"T": (X.dim, X.dim)}, ids, "T")
    nec = [conds[0], _contained("A-module derivations T with T(x)1=1T(x) inner", proj,
                                _flat(inner_derivations(X, lvl.xx)))]
    necessary = _consistent("necessary", all(c.holds for c in nec), rep.direct_h1)
    return ConditionReport(rep.theorem, n, k, "sufficient", rep.conditions, rep.direct_h1,
                           rep.iff_consistent and necessary, rep.instance,
                           {"necessary_conditions": [asdict(c) for c in nec], "necessary_consistent": necessary})
