from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from parabolic.oracles import tensor_trace_oracle
from parabolic.partitions import PartitionTuple, partition_tuples_upto
from parabolic.symfunc import TensorSymElt, linear_class, power, trace_at

S = TensorSymElt.schur


def test_product_of_boxes():
    x = S([(1,)], 4)
    assert x * x == TensorSymElt(1, 4, {((2,),): 1, ((1, 1),): 1})


def test_unit_and_componentwise_product():
    x = S([(2, 1), (1,)], 5)
    assert TensorSymElt.one(2, 5) * x == x
    assert S([(1,), ()], 3) * S([(), (1,)], 3) == S([(1,), (1,)], 3)


def test_truncation_drops_high_degree():
    assert (S([(2,)], 3) * S([(2,)], 3)).is_zero()


def test_mismatched_rings_raise():
    with pytest.raises(ValueError):
        S([(1,)], 2) * S([(1,), ()], 2)
    with pytest.raises(ValueError):
        TensorSymElt(1, 2, {((1,), ()): 1})


@pytest.mark.parametrize(
    "x, mu, expected",
    [
        (S([(1,), ()], 2), [(1,), ()], 1),
        (S([(1, 1)], 2), [(2,)], -1),
        (TensorSymElt.zero(1, 2), [(2,)], 0),
        (S([(1, 1)], 2), [(1, 1)], 1),
    ],
)
def test_trace_examples(x, mu, expected):
    assert trace_at(x, mu) == expected


def test_trace_ignores_other_sizes():
    assert trace_at(S([(2,), ()], 2), [(1,), (1,)]) == 0


def _elements(n, bound):
    keys = partition_tuples_upto(n, bound)
    return st.dictionaries(st.sampled_from(keys), st.integers(-3, 3), max_size=3).map(lambda d: TensorSymElt(n, 2 * bound, d))


@given(_elements(2, 2), _elements(2, 2), st.data())
def test_product_traces_match_induction_oracle(x, y, data):
    mu = data.draw(st.sampled_from(partition_tuples_upto(2, 4)))
    assert trace_at(x * y, mu) == tensor_trace_oracle(x, y, mu)


@given(_elements(1, 2), _elements(1, 2), _elements(1, 2))
def test_ring_laws(x, y, z):
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == TensorSymElt.zero(1, 4)


def test_json_roundtrip():
    x = TensorSymElt(2, 3, {((1,), ()): Fraction(1, 2), ((), (2, 1)): -4})
    assert TensorSymElt.from_json(x.to_json(), 2, 3) == x


def test_linear_class_and_power():
    v = linear_class(2, [1, 2], 2)
    assert v == S([(1,), ()], 2) + S([(), (1,)], 2)
    sq = power(v, 2)
    assert sq.coefficient(PartitionTuple([(1,), (1,)])) == 2
    assert sq.coefficient(PartitionTuple([(2,), ()])) == 1
    assert power(v, 0) == TensorSymElt.one(2, 2)
