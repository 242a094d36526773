"""Monomial words, commutator expansion, and the proper sublattice."""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from pilattice.multilinear import (
    CommutatorWord,
    MultilinearPoly,
    bracket_poly,
    commutator,
    compose,
    decompose,
    identity_word,
    inverse,
    monomial_order,
    proper_basis,
    recompose,
)

# derangement numbers: rank of the proper sublattice in degrees 1..5
PROPER_RANKS = {1: 0, 2: 1, 3: 2, 4: 9, 5: 44}


def perm_strategy(n):
    return st.permutations(list(range(1, n + 1))).map(tuple)


def poly_strategy(n):
    return st.dictionaries(
        keys=perm_strategy(n),
        values=st.integers(-5, 5),
        max_size=6,
    ).map(lambda terms: MultilinearPoly(terms, range(1, n + 1)))


# ---------------------------------------------------------------------------
# words and permutation algebra
# ---------------------------------------------------------------------------

def test_monomial_order_is_lex():
    order = monomial_order(3)
    assert len(order) == 6
    assert order[0] == (1, 2, 3)
    assert order[-1] == (3, 2, 1)
    assert list(order) == sorted(order)


def test_compose_and_inverse_frozen():
    assert compose((2, 1, 3), (3, 1, 2)) == (3, 2, 1)
    assert inverse((2, 3, 1)) == (3, 1, 2)
    assert identity_word(4) == (1, 2, 3, 4)


@given(perm_strategy(4), perm_strategy(4))
def test_compose_inverse_laws(sigma, tau):
    assert compose(sigma, inverse(sigma)) == identity_word(4)
    assert compose(inverse(sigma), sigma) == identity_word(4)
    assert inverse(compose(sigma, tau)) == compose(inverse(tau), inverse(sigma))


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

def test_poly_validation():
    with pytest.raises(ValueError):
        MultilinearPoly({(1, 1): 1})
    with pytest.raises(ValueError):
        MultilinearPoly({(1, 2): 1, (1, 3): 1})
    with pytest.raises(ValueError):
        MultilinearPoly.monomial((1, 2)) + MultilinearPoly.monomial((1, 3))
    with pytest.raises(ValueError):
        MultilinearPoly.monomial((1, 2)) * MultilinearPoly.monomial((2,))


def test_poly_arithmetic_frozen():
    p = MultilinearPoly.monomial((1, 2)) - MultilinearPoly.monomial((2, 1))
    assert p.terms == {(1, 2): 1, (2, 1): -1}
    assert (3 * p).terms == {(1, 2): 3, (2, 1): -3}
    assert (p - p).is_zero()
    q = MultilinearPoly.monomial((3,))
    assert (p * q).terms == {(1, 2, 3): 1, (2, 1, 3): -1}
    assert p.degree == 2 and (p * q).degree == 3


def test_vector_roundtrip_frozen():
    p = MultilinearPoly({(1, 2, 3): 2, (3, 2, 1): -1}, range(1, 4))
    vec = p.to_vector(3)
    assert vec == [2, 0, 0, 0, 0, -1]
    assert MultilinearPoly.from_vector(vec, 3) == p


@given(st.lists(st.integers(-9, 9), min_size=24, max_size=24))
def test_vector_roundtrip_random(vec):
    p = MultilinearPoly.from_vector(vec, 4)
    assert p.to_vector(4) == vec


def test_act_renames():
    p = MultilinearPoly.monomial((1, 2))
    swapped = p.act((2, 1))
    assert swapped.terms == {(2, 1): 1}
    with pytest.raises(ValueError):
        p.act((1, 1))


@given(poly_strategy(4), perm_strategy(4), perm_strategy(4))
def test_act_is_a_right_composition_action(p, sigma, tau):
    assert p.act(compose(sigma, tau)) == p.act(tau).act(sigma)
    assert p.act(identity_word(4)) == p


@given(poly_strategy(3), poly_strategy(3), perm_strategy(3))
def test_act_is_linear(p, q, sigma):
    assert (p + q).act(sigma) == p.act(sigma) + q.act(sigma)
    assert (-p).act(sigma) == -(p.act(sigma))


# ---------------------------------------------------------------------------
# commutators
# ---------------------------------------------------------------------------

def test_bracket_frozen():
    assert bracket_poly((2, 1)).terms == {(2, 1): 1, (1, 2): -1}
    assert bracket_poly((3, 1, 2)).terms == {
        (3, 1, 2): 1,
        (1, 3, 2): -1,
        (2, 3, 1): -1,
        (2, 1, 3): 1,
    }
    with pytest.raises(ValueError):
        bracket_poly((1,))
    with pytest.raises(ValueError):
        bracket_poly((1, 1))


def test_jacobi_identity():
    total = (
        bracket_poly((1, 2, 3))
        + bracket_poly((2, 3, 1))
        + bracket_poly((3, 1, 2))
    )
    assert total.is_zero()


def test_commutator_antisymmetry():
    a = MultilinearPoly.monomial((1,))
    b = MultilinearPoly.monomial((2,))
    assert commutator(a, b) == -commutator(b, a)


@given(perm_strategy(4))
def test_bracket_expansion_signs(sigma):
    # every left-normed bracket expands with +-1 coefficients, 2^(k-1) terms
    poly = bracket_poly(sigma)
    assert len(poly.terms) == 8
    assert set(poly.terms.values()) <= {1, -1}
    # the defining word itself always appears with coefficient +1
    assert poly.terms[sigma] == 1


# ---------------------------------------------------------------------------
# the proper sublattice
# ---------------------------------------------------------------------------

def test_proper_ranks_follow_derangements():
    for n, rank in PROPER_RANKS.items():
        basis = proper_basis(n)
        assert len(basis.elements) == rank
        assert basis.lattice.rank == rank
        assert len(basis.matrix) == rank


def test_proper_basis_is_saturated():
    for n in (2, 3, 4):
        assert proper_basis(n).lattice.is_saturated()


def test_proper_membership_frozen():
    basis = proper_basis(4)
    inside = bracket_poly((2, 1)) * bracket_poly((4, 3))
    assert basis.contains(inside)
    coords = basis.coordinates(inside)
    assert coords is not None and any(coords)
    outside = MultilinearPoly.monomial((1, 2, 3, 4))
    assert not basis.contains(outside)
    assert basis.coordinates(outside) is None


def test_proper_coordinates_reconstruct():
    basis = proper_basis(4)
    rng = random.Random(7)
    for _ in range(25):
        coeffs = [rng.randint(-4, 4) for _ in basis.elements]
        total = MultilinearPoly.zero(range(1, 5))
        for c, elem in zip(coeffs, basis.elements):
            total = total + c * elem.expand()
        assert basis.coordinates(total) == coeffs


@given(perm_strategy(4))
def test_proper_lattice_is_renaming_stable(sigma):
    basis = proper_basis(4)
    for elem in basis.elements[:4]:
        moved = elem.expand().act(sigma)
        assert basis.contains(moved)


def test_commutator_word_validation():
    with pytest.raises(ValueError):
        CommutatorWord((2, 1), ())
    with pytest.raises(ValueError):
        CommutatorWord((1,), ((1, 2),))
    with pytest.raises(ValueError):
        CommutatorWord((), ((1,),))
    w = CommutatorWord((1, 3), ((4, 2),))
    assert w.degree == 4
    assert w.variables == frozenset({1, 2, 3, 4})
    assert str(w) == "x1x3[x4,x2]"


# ---------------------------------------------------------------------------
# decomposition into prefix * proper
# ---------------------------------------------------------------------------

def test_decompose_worked_example():
    comps = decompose(MultilinearPoly.monomial((2, 1)))
    assert [c.prefix for c in comps] == [(), (1, 2)]
    assert comps[0].proper.terms == {(2, 1): 1, (1, 2): -1}
    assert comps[1].proper.terms == {(): 1}
    assert recompose(comps, 2) == MultilinearPoly.monomial((2, 1))


def test_decompose_proper_input_is_one_component():
    p = bracket_poly((3, 1, 2))
    comps = decompose(p)
    assert len(comps) == 1
    assert comps[0].prefix == ()
    assert comps[0].proper == p


@settings(deadline=None)
@given(poly_strategy(4))
def test_decompose_recompose_roundtrip(p):
    comps = decompose(p)
    assert recompose(comps, 4) == p
    for comp in comps:
        if comp.proper.degree:
            assert proper_basis(comp.proper.degree).contains(comp.proper)


@settings(deadline=None, max_examples=25)
@given(poly_strategy(5))
def test_decompose_recompose_degree5(p):
    assert recompose(decompose(p), 5) == p
