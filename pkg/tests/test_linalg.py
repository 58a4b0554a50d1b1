from fractions import Fraction

import sympy
from hypothesis import given
from hypothesis import strategies as st

from parabolic.linalg import RowEchelon, dense_rank, rank, triplets

entries = st.one_of(st.integers(-4, 4), st.fractions(min_value=-3, max_value=3, max_denominator=4))


@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_rank_matches_sympy(r, c, data):
    rows = [[data.draw(entries) for _ in range(c)] for _ in range(r)]
    assert dense_rank(rows) == sympy.Matrix(rows).rank()


def test_rank_examples():
    assert rank([]) == 0
    assert rank([{"a": 1, "b": 2}, {"a": 2, "b": 4}]) == 1
    assert rank([{"a": Fraction(1, 2)}, {"b": 3}, {"a": 1, "b": 1}]) == 2


def test_echelon_contains_and_pivots():
    ech = RowEchelon()
    assert ech.add({0: 1, 1: 1})
    assert ech.add({1: 1})
    assert not ech.add({0: 2, 1: 5})
    assert ech.contains({0: 3})
    assert ech.pivot_columns == [0, 1]


def test_triplets():
    rows = [("r", {"x": 2, "y": 0})]
    assert triplets(rows, {"r": 0}, {"x": 1, "y": 0}) == [[0, 1, 2]]
