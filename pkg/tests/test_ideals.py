import pytest
from hypothesis import given
from hypothesis import strategies as st

from parabolic.ideals import (
    PIdeal,
    all_canonical,
    canonicalize,
    contains,
    ideal_sum,
    is_prime,
    monomial_realize,
    prime_chain,
    product_contained,
    radical,
    realized_contains,
)

p = PIdeal.prime


def I(n, *terms):
    return canonicalize(n, terms)


def test_canonicalize_examples():
    assert canonicalize(2, [(1, 3), (0, 1)]) == I(2, (0, 1))
    assert canonicalize(2, [(1, 1), (0, 3)]).terms == ((1, 1), (0, 3))
    assert canonicalize(2, []).is_zero()
    assert canonicalize(2, [(2, 5)]).is_zero()


def test_canonicalize_rejects_bad_terms():
    with pytest.raises(ValueError):
        canonicalize(2, [(3, 1)])
    with pytest.raises(ValueError):
        canonicalize(2, [(0, 0)])
    with pytest.raises(ValueError):
        PIdeal(2, ((0, 1), (1, 2)))


def test_sum_examples():
    J = I(2, (1, 1), (0, 3))
    assert ideal_sum(J, PIdeal.zero(2)) == J
    assert ideal_sum(p(2, 1), I(2, (0, 3))) == J
    assert ideal_sum(J, J) == J
    with pytest.raises(ValueError):
        ideal_sum(p(2, 0), p(3, 0))


def test_containment_examples():
    assert contains(p(2, 0), p(2, 1))
    assert not contains(p(2, 1), I(2, (0, 3)))
    assert contains(p(3, 1), p(3, 1))
    assert contains(PIdeal.unit_ideal(2), p(2, 0))


def test_radical_examples():
    assert radical(I(2, (0, 3))) == p(2, 0)
    assert radical(I(2, (1, 2), (0, 5))) == p(2, 0)
    assert radical(PIdeal.zero(2)).is_zero()


def test_prime_examples():
    assert is_prime(p(2, 1))
    assert not is_prime(I(2, (0, 2)))
    assert not is_prime(I(2, (1, 1), (0, 3)))
    assert is_prime(PIdeal.zero(2))


def test_prime_chain():
    assert prime_chain(1) == [PIdeal.zero(1), p(1, 0)]
    chain = prime_chain(3)
    assert len(chain) == 4
    for lo, hi in zip(chain, chain[1:]):
        assert contains(hi, lo) and not contains(lo, hi)
        assert realized_contains(hi, lo, 1, 1) and not realized_contains(lo, hi, 1, 1)


def test_monomial_realize_examples():
    assert monomial_realize(PIdeal.zero(2), 1, 3) == set()
    assert len(monomial_realize(p(2, 0), 2, 1)) == 4
    assert monomial_realize(I(2, (1, 2)), 1, 2) == {(2, 0)}


IDEALS3 = all_canonical(3, 3)


def test_canonical_enumeration_is_complete_and_distinct():
    assert len(set(IDEALS3)) == len(IDEALS3)
    assert all(canonicalize(3, J.terms) == J for J in IDEALS3)


@given(st.sampled_from(IDEALS3), st.sampled_from(IDEALS3), st.sampled_from(IDEALS3))
def test_lattice_laws(a, b, c):
    assert ideal_sum(a, b) == ideal_sum(b, a)
    assert ideal_sum(ideal_sum(a, b), c) == ideal_sum(a, ideal_sum(b, c))
    assert contains(ideal_sum(a, b), a)
    if contains(c, a) and contains(c, b):
        assert contains(c, ideal_sum(a, b))


@given(st.sampled_from(IDEALS3), st.sampled_from(IDEALS3))
def test_containment_matches_monomial_realization(a, b):
    assert contains(a, b) == realized_contains(a, b, 1, 3)


@given(st.sampled_from(IDEALS3))
def test_radical_is_idempotent_prime_and_contains(a):
    r = radical(a)
    assert radical(r) == r and is_prime(r) and contains(r, a)


def test_powers_multiply():
    # p_i^a · p_i^b = p_i^(a+b) in the monomial realization
    for i in range(2):
        for a in (1, 2):
            for b in (1, 2):
                assert product_contained(I(2, (i, a + b)), I(2, (i, a)), I(2, (i, b)))
                assert not product_contained(I(2, (i, a + b + 1)), I(2, (i, a)), I(2, (i, b)))
