from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from parabolic.oracles import hook_oracle_dimension, lr_oracle, tabloid_oracle_character
from parabolic.partitions import (
    PartitionTuple,
    compositions_upto,
    dominance_leq,
    hook_dimension,
    lambda_factorial,
    lr_coefficient,
    lr_expand,
    mn_character,
    partitions,
    reverse,
    z_factor,
)


@pytest.mark.parametrize(
    "a, b, expected",
    [((1, 1), (2, 0), True), ((2, 0), (1, 1), False), ((1, 2, 0), (1, 2, 0), True)],
)
def test_dominance_examples(a, b, expected):
    assert dominance_leq(a, b) is expected


def test_dominance_arity_mismatch():
    with pytest.raises(ValueError):
        dominance_leq((1,), (1, 0))


@given(st.lists(st.integers(0, 3), min_size=1, max_size=4))
def test_dominance_reflexive(a):
    assert dominance_leq(a, a)


def test_dominance_is_prefix_sums():
    for a in compositions_upto(3, 3):
        for b in compositions_upto(3, 3):
            prefix = all(sum(a[: i + 1]) <= sum(b[: i + 1]) for i in range(3))
            assert dominance_leq(a, b) == prefix


@pytest.mark.parametrize(
    "lam, mu, expected",
    [((3,), (2, 1), 1), ((1, 1), (2,), -1), ((2, 1), (1, 1, 1), 2), ((2, 1), (3,), -1), ((2, 1), (2, 1), 0)],
)
def test_character_examples(lam, mu, expected):
    assert mn_character(lam, mu) == expected


def test_character_size_mismatch():
    with pytest.raises(ValueError):
        mn_character((2,), (1,))


@pytest.mark.parametrize("m", range(1, 6))
def test_character_matches_tabloid_oracle(m):
    for lam in partitions(m):
        for mu in partitions(m):
            assert mn_character(lam, mu) == tabloid_oracle_character(tuple(lam), tuple(mu))


@pytest.mark.parametrize("m", range(1, 6))
def test_column_orthogonality(m):
    parts = partitions(m)
    for mu in parts:
        for nu in parts:
            s = sum(mn_character(lam, mu) * mn_character(lam, nu) for lam in parts)
            assert s == (z_factor(mu) if mu == nu else 0)


@pytest.mark.parametrize("lam, expected", [((4,), 1), ((1, 1, 1), 1), ((2, 1), 2), ((3, 2), 5), ((2, 2), 2)])
def test_hook_dimension(lam, expected):
    assert hook_dimension(lam) == expected
    assert hook_oracle_dimension(lam) == expected


@pytest.mark.parametrize("m", range(1, 7))
def test_sum_of_squares(m):
    assert sum(hook_dimension(lam) ** 2 for lam in partitions(m)) == factorial(m)


@pytest.mark.parametrize(
    "lam, mu, nu, expected",
    [((1,), (1,), (2,), 1), ((1,), (1,), (1, 1), 1), ((1,), (1,), (3,), 0), ((2, 1), (2, 1), (3, 2, 1), 2)],
)
def test_lr_examples(lam, mu, nu, expected):
    assert lr_coefficient(lam, mu, nu) == expected


def test_lr_matches_induction_oracle():
    for total in range(1, 6):
        for i in range(total + 1):
            for lam in partitions(i):
                for mu in partitions(total - i):
                    for nu in partitions(total):
                        assert lr_coefficient(lam, mu, nu) == lr_oracle(tuple(lam), tuple(mu), tuple(nu))


@given(st.integers(0, 4), st.integers(0, 4), st.data())
def test_lr_symmetric_and_dimension_count(i, j, data):
    lam = data.draw(st.sampled_from(partitions(i)))
    mu = data.draw(st.sampled_from(partitions(j)))
    expansion = lr_expand(lam, mu)
    assert expansion == lr_expand(mu, lam)
    # dim Ind = binomial * dims
    total = sum(c * hook_dimension(nu) for nu, c in expansion.items())
    assert total == factorial(i + j) // (factorial(i) * factorial(j)) * hook_dimension(lam) * hook_dimension(mu)


@pytest.mark.parametrize(
    "mu, expected",
    [([(), ()], 1), ([(1, 1)], 2), ([(2, 1), (1, 1, 1)], 6)],
)
def test_lambda_factorial(mu, expected):
    assert lambda_factorial(mu) == expected


def test_z_factor_counts_centralizer():
    assert z_factor((2, 1, 1)) == 2 * 2
    assert Fraction(factorial(4), z_factor((2, 2))) == 3


def test_partition_tuple_basics():
    lam = PartitionTuple([(2, 1), (), (1,)])
    assert lam.sizes == (3, 0, 1) and lam.size == 4 and lam.n == 3
    assert reverse((1, 2, 3)) == (3, 2, 1)
    with pytest.raises(ValueError):
        PartitionTuple([(1, 2)])
