"""Structure-constant ring models: arithmetic, validation, serialization."""

import pytest
from hypothesis import given, strategies as st

from pilattice.multilinear import bracket_poly
from pilattice.rings import (
    RingModel,
    commutator_element,
    cyclic_ring,
    direct_sum,
    evaluate,
    generator_tuples,
    grassmann,
    ut2,
)

coords3 = st.tuples(*[st.integers(-9, 9)] * 3)
coords8 = st.tuples(*[st.integers(-9, 9)] * 8)


# ---------------------------------------------------------------------------
# built-in families
# ---------------------------------------------------------------------------

def test_cyclic_frozen():
    r = cyclic_ring(6)
    assert r.rank == 1
    assert r.characteristic() == 6
    assert r.is_commutative()
    x = r.element((4,))
    assert (x * x).coords == (4,)       # 16 mod 6
    assert (x + x).coords == (2,)
    assert r.one * x == x
    assert cyclic_ring(0).characteristic() == 0
    with pytest.raises(ValueError):
        cyclic_ring(-1)


def test_ut2_frozen():
    r = ut2(2, 2)
    e11, e22, e12 = (r.basis_element(k) for k in range(3))
    assert e11 * e12 == e12
    assert e12 * e22 == e12
    assert (e12 * e11).is_zero()
    assert (e22 * e12).is_zero()
    assert (e11 * e22).is_zero()
    assert commutator_element(e11, e12) == e12
    assert not r.is_commutative()
    assert r.characteristic() == 2
    assert r.one == e11 + e22


def test_ut2_modulus_constraints():
    assert ut2(4, 2).characteristic() == 4
    assert ut2(0, 0).moduli == (0, 0, 0)
    assert ut2(0, 5).moduli == (0, 0, 5)
    with pytest.raises(ValueError):
        ut2(4, 3)          # 3 does not divide 4
    with pytest.raises(ValueError):
        ut2(2, 0)          # finite diagonal forces a finite corner
    with pytest.raises(ValueError):
        ut2(-1, 1)


def test_grassmann_frozen():
    r = grassmann(3, 2)
    assert r.rank == 4
    assert r.characteristic() == 3
    one, e1, e2, e12 = (r.basis_element(k) for k in range(4))
    assert e1 * e2 == e12
    assert e2 * e1 == -e12
    assert (e1 * e1).is_zero()
    assert (e1 * e2 + e2 * e1).is_zero()
    assert r.one == one
    assert not r.is_commutative()
    assert r.basis_names == ("1", "e1", "e2", "e12")


def test_grassmann_constraints():
    with pytest.raises(ValueError):
        grassmann(2, 3)    # even coefficient modulus
    with pytest.raises(ValueError):
        grassmann(3, 13)   # too many generators
    assert grassmann(0, 1).characteristic() == 0


def test_direct_sum_frozen():
    r = direct_sum(cyclic_ring(2), cyclic_ring(3))
    assert r.rank == 2
    assert r.moduli == (2, 3)
    assert r.characteristic() == 6
    assert r.is_commutative()
    a = r.element((1, 0))
    b = r.element((0, 1))
    assert (a * b).is_zero()        # orthogonal idempotent components
    assert a * a == a and b * b == b
    assert direct_sum(cyclic_ring(5)) is cyclic_ring(5)
    with pytest.raises(ValueError):
        direct_sum()


def test_direct_sum_keeps_noncommutativity():
    r = direct_sum(cyclic_ring(2), ut2(2, 2))
    assert not r.is_commutative()
    assert r.characteristic() == 2
    assert r.label == "sum(cyclic(2),ut2(2,2))"


# ---------------------------------------------------------------------------
# model validation
# ---------------------------------------------------------------------------

def test_rejects_nonassociative_table():
    with pytest.raises(ValueError, match="associative"):
        RingModel(
            label="bad",
            moduli=(0, 0),
            table={(0, 0): ((1, 1),), (0, 1): ((0, 1),)},
            generators=((1, 0), (0, 1)),
        )


def test_rejects_torsion_incompatible_table():
    # a 2-torsion element squaring to an infinite-order one: 0 = (2a)a = 2a^2
    with pytest.raises(ValueError, match="not well defined"):
        RingModel(
            label="bad",
            moduli=(2, 0),
            table={(0, 0): ((1, 1),)},
            generators=((1, 0), (0, 1)),
        )


def test_rejects_fake_unit():
    with pytest.raises(ValueError, match="identity"):
        RingModel(
            label="bad",
            moduli=(2,),
            table={},
            generators=((1,),),
            unit=(1,),
        )


def test_rejects_nongenerating_set():
    with pytest.raises(ValueError, match="generate"):
        RingModel(
            label="bad",
            moduli=(0,),
            table={(0, 0): ((0, 1),)},
            generators=((2,),),
        )


def test_element_model_mismatch():
    with pytest.raises(ValueError):
        cyclic_ring(2).element((1,)) * cyclic_ring(3).element((1,))


# ---------------------------------------------------------------------------
# substitution tuples
# ---------------------------------------------------------------------------

def test_generator_tuples_dense_families():
    assert sum(1 for _ in generator_tuples(cyclic_ring(4), 3)) == 1
    assert sum(1 for _ in generator_tuples(ut2(2, 2), 3)) == 27


def test_generator_tuples_prune_overlapping_supports():
    # tuples of pairwise-disjoint subsets of k elements: (n+1)^k
    assert sum(1 for _ in generator_tuples(grassmann(3, 3), 2)) == 27
    assert sum(1 for _ in generator_tuples(grassmann(3, 2), 3)) == 16
    for tup in generator_tuples(grassmann(3, 3), 3):
        masks = [grassmann(3, 3).support_masks[i] for i in tup]
        assert masks[0] & masks[1] == 0
        assert (masks[0] | masks[1]) & masks[2] == 0


# ---------------------------------------------------------------------------
# polynomial evaluation
# ---------------------------------------------------------------------------

def test_evaluate_matches_direct_commutator():
    r = ut2(4, 2)
    a = r.element((1, 2, 1))
    b = r.element((0, 1, 1))
    assert evaluate(bracket_poly((1, 2)), [a, b]) == commutator_element(a, b)


@given(coords3, coords3, coords3)
def test_evaluate_triple_bracket_ut2(ca, cb, cc):
    r = ut2(4, 2)
    a, b, c = r.element(ca), r.element(cb), r.element(cc)
    direct = commutator_element(commutator_element(a, b), c)
    assert evaluate(bracket_poly((1, 2, 3)), [a, b, c]) == direct


# ---------------------------------------------------------------------------
# ring axioms on random elements
# ---------------------------------------------------------------------------

@given(coords3, coords3, coords3)
def test_ut2_axioms(ca, cb, cc):
    r = ut2(4, 2)
    a, b, c = r.element(ca), r.element(cb), r.element(cc)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert r.one * a == a and a * r.one == a
    assert 2 * (a + b) == 2 * a + 2 * b


@given(coords8, coords8)
def test_grassmann_axioms(ca, cb):
    r = grassmann(3, 3)
    a, b = r.element(ca), r.element(cb)
    assert (a * b) * a == a * (b * a)
    assert a * (a + b) == a * a + a * b
    assert r.one * a == a and a * r.one == a


@given(st.integers(0, 3), st.integers(0, 3))
def test_grassmann_generators_anticommute(i, j):
    r = grassmann(3, 3)
    gens = [r.basis_element(1 << k) for k in range(3)]
    gi, gj = gens[i % 3], gens[j % 3]
    assert (gi * gj + gj * gi).is_zero()
    assert (gi * gi).is_zero()


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "model",
    [
        cyclic_ring(6),
        ut2(2, 2),
        ut2(0, 0),
        grassmann(3, 3),
        direct_sum(cyclic_ring(2), grassmann(3, 2)),
    ],
    ids=lambda m: m.label,
)
def test_json_roundtrip(model):
    doc = model.to_json()
    rebuilt = RingModel.from_json(doc)
    assert rebuilt == model
    assert rebuilt.to_json() == doc


def test_json_rejects_tampered_known_family():
    doc = cyclic_ring(4).to_json()
    doc["table"] = [{"i": 0, "j": 0, "entries": [[0, 3]]}]
    with pytest.raises(ValueError, match="do not match"):
        RingModel.from_json(doc)


def test_json_custom_model_roundtrip():
    model = RingModel(
        label="square-zero",
        moduli=(4, 4),
        table={(0, 0): ((1, 1),)},
        generators=((1, 0), (0, 1)),
        family="custom",
    )
    rebuilt = RingModel.from_json(model.to_json())
    assert rebuilt == model
    assert rebuilt.mul_sparse({0: 1}, {0: 1}) == {1: 1}
