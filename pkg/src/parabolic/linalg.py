"""Exact rank of sparse matrices by fraction-free row reduction.

Rows are dicts ``column -> value``.  Rational input is cleared to integers
first; each elimination step forms ``p*row - q*pivot`` and divides out the
content, so no fractions and no floating point ever appear.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping

Row = dict[Hashable, int]


def _integral(row: Mapping) -> Row:
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    out = {}
    for c, v in row.items():
        v = Fraction(v) * den
        if v:
            out[c] = int(v)
    return _primitive(out)


def _primitive(row: Row) -> Row:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


class RowEchelon:
    """Incrementally maintained echelon basis of a row space.

    Columns are ordered by a sort key (their natural order by default); each
    stored row is keyed by its leading column.
    """

    def __init__(self, order=None):
        self._order = order or (lambda c: c)
        self._pivots: dict[Hashable, Row] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def pivot_columns(self) -> list:
        return sorted(self._pivots, key=self._order)

    def _lead(self, row: Row):
        return min(row, key=self._order)

    def reduce(self, row: Mapping) -> Row:
        """Reduce ``row`` until its leading column is not a pivot column."""
        row = _integral(row)
        while row:
            lead = self._lead(row)
            pivot = self._pivots.get(lead)
            if pivot is None:
                return row
            p, q = pivot[lead], row[lead]
            g = gcd(p, q)
            p, q = p // g, q // g
            out = {c: p * v for c, v in row.items()}
            for c, v in pivot.items():
                nv = out.get(c, 0) - q * v
                if nv:
                    out[c] = nv
                else:
                    out.pop(c, None)
            row = _primitive(out)
        return row

    def add(self, row: Mapping) -> bool:
        """Insert a row; return True if it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        self._pivots[self._lead(row)] = row
        return True

    def contains(self, row: Mapping) -> bool:
        return not self.reduce(row)


def rank(rows: Iterable[Mapping], order=None) -> int:
    ech = RowEchelon(order)
    for row in rows:
        ech.add(row)
    return ech.rank


def dense_rank(matrix: Iterable[Iterable]) -> int:
    return rank(({j: v for j, v in enumerate(r) if v} for r in matrix))


def triplets(rows: Iterable[tuple[Hashable, Mapping]], row_index: Mapping, col_index: Mapping) -> list[list[int]]:
    """Serialize ``(row_key, {col_key: value})`` pairs as sorted ``[row, col, value]`` triplets."""
    out = []
    for rkey, entries in rows:
        for ckey, v in entries.items():
            if v:
                v = Fraction(v)
                if v.denominator != 1:
                    raise ValueError("triplet export requires integer entries")
                out.append([row_index[rkey], col_index[ckey], int(v)])
    return sorted(out)
