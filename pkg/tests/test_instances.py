import pytest

from modext.constructions import bowtie
from modext.core import AlgebraicModule, validate_algebraic_module
from modext.instances import (RecipeError, corpus_recipes, generate_corpus, load_pins, materialize,
                              slug)

import oracle

KINDS = {"field", "zero_algebra", "matrix_full", "matrix_upper", "group_algebra", "direct_product", "theta_action",
         "t_action", "self_module", "trivial_product_module"}


def kinds_in(spec, out):
    if isinstance(spec, dict):
        if "kind" in spec:
            out.add(spec["kind"])
        for v in spec.values():
            kinds_in(v, out)
    elif isinstance(spec, list):
        for v in spec:
            kinds_in(v, out)
    return out


def test_examples():
    T2 = materialize({"kind": "matrix_upper", "n": 2})
    assert T2.dim == 3 and T2.is_unital
    C2 = materialize({"kind": "group_algebra", "group": "C2"})
    assert C2.basis == ("e", "s") and C2.is_commutative
    assert list(C2.mul(C2.e(1), C2.e(1))) == [1, 0]
    Z2 = materialize({"kind": "zero_algebra", "d": 2})
    assert not any(Z2.mult.reshape(-1))


def test_unknown_kind():
    with pytest.raises(RecipeError):
        materialize({"kind": "quiver"})
    with pytest.raises(RecipeError):
        materialize({"kind": "group_algebra", "group": "S3"})


def test_deterministic():
    a, b = generate_corpus(7), generate_corpus(7)
    assert [m.name for m in a] == [m.name for m in b]
    assert all(x.action.same_structure(y.action) and x.inner.same_structure(y.inner) for x, y in zip(a, b))


def test_corpus_shape(corpus):
    assert len(corpus) >= 20
    for m in corpus:
        assert isinstance(m, AlgebraicModule)
        assert m.dim_a <= 3 and m.dim_x <= 3
        assert validate_algebraic_module(m).ok


def test_every_kind_present():
    seen = set()
    for r in corpus_recipes(0):
        seen.add(r.kind)
        kinds_in(r.params, seen)
    assert KINDS <= seen


def test_slugs_unique():
    names = [slug(r.name) for r in corpus_recipes(0)]
    assert len(names) == len(set(names))


def test_pins_match_oracle():
    pins = load_pins()
    recipes = corpus_recipes(0)
    assert set(pins) == {r.name for r in recipes}
    for r in recipes[::3]:
        m = materialize(r)
        c = bowtie(m).carrier
        for k in (0, 1):
            _, _, h1 = oracle.algebra_h1(oracle.tensor(c.mult), k)
            assert pins[r.name][f"h1_level_{k}"] == h1, r.name
