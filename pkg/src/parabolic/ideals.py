"""Equivariant ideals of the polynomial ring in variables ``x_{ij}`` (i in [n]).

``p_i`` is generated by the variables in rows ``1..n-i``, so ``p_n = 0`` and
``p_0`` is the maximal homogeneous ideal.  Every equivariant ideal is a sum of
powers ``p_i^a``; ``p_i^a ⊆ p_j^b`` exactly when ``j ≤ i`` and ``b ≤ a``.

A :class:`PIdeal` stores the irredundant terms ``(i, a)`` with indices strictly
decreasing and exponents strictly increasing.  Products are not given a
symbolic normal form; they are evaluated in the monomial realization.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class PIdeal:
    n: int
    terms: tuple[tuple[int, int], ...] = ()
    unit: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.unit and self.terms:
            raise ValueError("the unit ideal carries no terms")
        terms = tuple((int(i), int(a)) for i, a in self.terms)
        for i, a in terms:
            if not 0 <= i < self.n or a < 1:
                raise ValueError(f"term {(i, a)} is not canonical for n={self.n}")
        for (i1, a1), (i2, a2) in zip(terms, terms[1:]):
            if not (i1 > i2 and a1 < a2):
                raise ValueError(f"terms {terms} are not in canonical order")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def zero(cls, n: int) -> "PIdeal":
        return cls(n)

    @classmethod
    def unit_ideal(cls, n: int) -> "PIdeal":
        return cls(n, unit=True)

    @classmethod
    def prime(cls, n: int, i: int) -> "PIdeal":
        """``p_i``; ``p_n`` is the zero ideal."""
        return canonicalize(n, [(i, 1)])

    def is_zero(self) -> bool:
        return not self.terms and not self.unit

    def __str__(self) -> str:
        if self.unit:
            return "A"
        return "[" + ",".join(f"({i},{a})" for i, a in self.terms) + "]"

    def to_json(self) -> list[list[int]]:
        if self.unit:
            raise ValueError("the unit ideal has no array serialization")
        return [[i, a] for i, a in self.terms]

    @classmethod
    def from_json(cls, n: int, payload: Iterable[Sequence[int]]) -> "PIdeal":
        return canonicalize(n, [tuple(t) for t in payload])


def _dominated(t: tuple[int, int], s: tuple[int, int]) -> bool:
    """``p_t ⊆ p_s`` for single power terms."""
    return s[0] <= t[0] and s[1] <= t[1]


def canonicalize(n: int, raw: Iterable[Sequence[int]]) -> PIdeal:
    """Drop ``p_n`` terms and every term contained in another; sort canonically."""
    terms = set()
    for t in raw:
        i, a = int(t[0]), int(t[1])
        if not 0 <= i <= n:
            raise ValueError(f"index {i} out of range 0..{n}")
        if a < 1:
            raise ValueError(f"exponent {a} must be positive")
        if i < n:
            terms.add((i, a))
    kept = [t for t in terms if not any(s != t and _dominated(t, s) for s in terms)]
    return PIdeal(n, tuple(sorted(kept, reverse=True)))


def _same_n(I: PIdeal, J: PIdeal) -> None:
    if I.n != J.n:
        raise ValueError(f"ideals live in different rings (n={I.n} vs n={J.n})")


def ideal_sum(I: PIdeal, J: PIdeal) -> PIdeal:
    _same_n(I, J)
    if I.unit or J.unit:
        return PIdeal.unit_ideal(I.n)
    return canonicalize(I.n, I.terms + J.terms)


def contains(I: PIdeal, J: PIdeal) -> bool:
    """``J ⊆ I``: each generator term of ``J`` must sit inside one term of ``I``."""
    _same_n(I, J)
    if I.unit:
        return True
    if J.unit:
        return False
    return all(any(_dominated(t, s) for s in I.terms) for t in J.terms)


def radical(I: PIdeal) -> PIdeal:
    if I.unit or I.is_zero():
        return I
    return PIdeal.prime(I.n, min(i for i, _ in I.terms))


def is_prime(I: PIdeal) -> bool:
    if I.unit:
        return False
    return I.is_zero() or (len(I.terms) == 1 and I.terms[0][1] == 1)


def prime_chain(n: int) -> list[PIdeal]:
    """``[p_n = 0, p_{n-1}, ..., p_0]``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return [PIdeal.prime(n, i) for i in range(n, -1, -1)]


def all_canonical(n: int, max_exponent: int) -> list[PIdeal]:
    """Every proper ideal with indices ``< n`` and exponents ``≤ max_exponent``."""
    out = []
    for m in range(0, min(n, max_exponent) + 1):
        for idx in _decreasing(n, m):
            for exps in _increasing(max_exponent, m):
                out.append(PIdeal(n, tuple(zip(idx, exps))))
    return out


def _decreasing(n, m):
    return [tuple(sorted(c, reverse=True)) for c in combinations(range(n), m)]


def _increasing(top, m):
    return list(combinations(range(1, top + 1), m))


# ---------------------------------------------------------------------------
# monomial realization


def variables(n: int, k: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(1, k + 1)]


def monomials(n: int, k: int, D: int) -> list[Monomial]:
    """Exponent vectors (over :func:`variables` order) of total degree ``≤ D``."""
    nv = n * k
    out = []
    for deg in range(D + 1):
        for combo in combinations_with_replacement(range(nv), deg):
            e = [0] * nv
            for v in combo:
                e[v] += 1
            out.append(tuple(e))
    return out


def row_degrees(m: Monomial, n: int, k: int) -> list[int]:
    return [sum(m[i * k : (i + 1) * k]) for i in range(n)]


def monomial_in(I: PIdeal, m: Monomial, k: int) -> bool:
    """Membership of a monomial: its degree in rows ``1..n-i`` reaches ``a`` for some term."""
    if I.unit:
        return True
    rows = row_degrees(m, I.n, k)
    return any(sum(rows[: I.n - i]) >= a for i, a in I.terms)


def monomial_realize(I: PIdeal, k: int, D: int) -> set[Monomial]:
    """All monomials of degree ``≤ D`` in ``x_{ij}`` (``j ≤ k``) lying in ``I``."""
    if k < 1 or D < 1:
        raise ValueError("k and D must be positive")
    return {m for m in monomials(I.n, k, D) if monomial_in(I, m, k)}


def generators(I: PIdeal, k: int) -> set[Monomial]:
    """Minimal monomial generators of ``I`` in the truncated variable set."""
    if I.unit:
        return {tuple([0] * (I.n * k))}
    out = set()
    for i, a in I.terms:
        rows = I.n - i
        nv = rows * k
        for combo in combinations_with_replacement(range(nv), a):
            e = [0] * (I.n * k)
            for v in combo:
                e[v] += 1
            out.add(tuple(e))
    return out


def product_contained(I: PIdeal, J: PIdeal, K: PIdeal, k: int = 1) -> bool:
    """``J·K ⊆ I`` decided on products of monomial generators."""
    _same_n(I, J)
    _same_n(I, K)
    gj, gk = generators(J, k), generators(K, k)
    return all(monomial_in(I, tuple(x + y for x, y in zip(u, v)), k) for u in gj for v in gk)


def realized_contains(I: PIdeal, J: PIdeal, k: int, D: int) -> bool:
    """Containment read off the truncated monomial sets."""
    return monomial_realize(J, k, D) <= monomial_realize(I, k, D)
