"""The ring Λ^⊗n in the Schur basis, truncated by total degree.

An element is a finite map from n-tuples of partitions to rationals.  The
product is the componentwise Littlewood-Richardson product; any term whose
total degree exceeds the truncation bound is dropped.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import prod
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .partitions import Partition, PartitionTuple, lr_expand, mn_character

Scalar = int | Fraction


class TensorSymElt:
    """An element of ``Λ^⊗n`` with rational coefficients, truncated at ``degree_bound``."""

    __slots__ = ("n", "degree_bound", "_terms")

    def __init__(self, n: int, degree_bound: int, terms: Mapping | Iterable = ()):
        if n < 1:
            raise ValueError("arity must be at least 1")
        if degree_bound < 0:
            raise ValueError("degree bound must be nonnegative")
        self.n = n
        self.degree_bound = degree_bound
        clean: dict[PartitionTuple, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            key = PartitionTuple(key)
            if key.n != n:
                raise ValueError(f"key {key!r} has arity {key.n}, expected {n}")
            if key.size > degree_bound:
                continue
            clean[key] = clean.get(key, Fraction(0)) + Fraction(coeff)
        self._terms = {k: v for k, v in clean.items() if v}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int, degree_bound: int) -> "TensorSymElt":
        return cls(n, degree_bound)

    @classmethod
    def one(cls, n: int, degree_bound: int) -> "TensorSymElt":
        return cls(n, degree_bound, {PartitionTuple.empty(n): 1})

    @classmethod
    def schur(cls, lam: Sequence[Sequence[int]], degree_bound: int, coeff: Scalar = 1) -> "TensorSymElt":
        lam = PartitionTuple(lam)
        return cls(lam.n, degree_bound, {lam: coeff})

    # -- accessors ----------------------------------------------------------

    @property
    def terms(self) -> Mapping[PartitionTuple, Fraction]:
        return MappingProxyType(self._terms)

    def coefficient(self, lam) -> Fraction:
        return self._terms.get(PartitionTuple(lam), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        return max((k.size for k in self._terms), default=0)

    def __repr__(self) -> str:
        if not self._terms:
            return f"TensorSymElt(n={self.n}, N={self.degree_bound}, 0)"
        body = " + ".join(f"{c}*s{k.to_json()}" for k, c in sorted(self._terms.items()))
        return f"TensorSymElt(n={self.n}, N={self.degree_bound}, {body})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorSymElt):
            return NotImplemented
        return (self.n, self.degree_bound, self._terms) == (other.n, other.degree_bound, other._terms)

    def __hash__(self):
        return hash((self.n, self.degree_bound, frozenset(self._terms.items())))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "TensorSymElt") -> None:
        if self.n != other.n or self.degree_bound != other.degree_bound:
            raise ValueError(
                f"mismatched ring: (n={self.n}, N={self.degree_bound}) vs (n={other.n}, N={other.degree_bound})"
            )

    def __add__(self, other: "TensorSymElt") -> "TensorSymElt":
        self._check(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return TensorSymElt(self.n, self.degree_bound, out)

    def __neg__(self) -> "TensorSymElt":
        return TensorSymElt(self.n, self.degree_bound, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "TensorSymElt") -> "TensorSymElt":
        return self + (-other)

    def scale(self, c: Scalar) -> "TensorSymElt":
        return TensorSymElt(self.n, self.degree_bound, {k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorSymElt):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    # -- serialization ------------------------------------------------------

    def to_json(self) -> list[dict]:
        return [
            {"partition_tuple": k.to_json(), "numerator": v.numerator, "denominator": v.denominator}
            for k, v in sorted(self._terms.items())
        ]

    @classmethod
    def from_json(cls, payload: list[dict], n: int | None = None, degree_bound: int | None = None) -> "TensorSymElt":
        terms = [(PartitionTuple(t["partition_tuple"]), Fraction(t["numerator"], t.get("denominator", 1))) for t in payload]
        if n is None:
            if not terms:
                raise ValueError("cannot infer arity of an empty payload")
            n = terms[0][0].n
        if degree_bound is None:
            degree_bound = max((k.size for k, _ in terms), default=0)
        return cls(n, degree_bound, terms)


def _product_terms(lam: PartitionTuple, mu: PartitionTuple, bound: int) -> dict[PartitionTuple, int]:
    if lam.size + mu.size > bound:
        return {}
    per_component = [lr_expand(lam[i], mu[i]).items() for i in range(lam.n)]
    out = {}
    for combo in product(*per_component):
        key = PartitionTuple(nu for nu, _ in combo)
        out[key] = prod(c for _, c in combo)
    return out


def multiply(x: TensorSymElt, y: TensorSymElt) -> TensorSymElt:
    """Componentwise LR product, truncated at the shared degree bound."""
    x._check(y)
    out: dict[PartitionTuple, Fraction] = {}
    for lam, a in x._terms.items():
        for mu, b in y._terms.items():
            for nu, c in _product_terms(lam, mu, x.degree_bound).items():
                out[nu] = out.get(nu, 0) + a * b * c
    return TensorSymElt(x.n, x.degree_bound, out)


def trace_at(x: TensorSymElt, mu: Sequence[Sequence[int]]) -> Fraction:
    """``Σ_λ coeff(λ) Π_i χ^{λ^i}(μ^i)`` over keys whose sizes match ``mu`` componentwise."""
    mu = PartitionTuple(mu)
    if mu.n != x.n:
        raise ValueError(f"cycle type has arity {mu.n}, expected {x.n}")
    sizes = mu.sizes
    total = Fraction(0)
    for lam, coeff in x._terms.items():
        if lam.sizes != sizes:
            continue
        total += coeff * prod(mn_character(lam[i], mu[i]) for i in range(x.n))
    return total


def linear_class(n: int, factors: Iterable[int], degree_bound: int) -> TensorSymElt:
    """``Σ_{f ∈ factors} s_{(1) in factor f}`` (1-based factors), the class of a sum of graded pieces."""
    terms = {}
    for f in factors:
        key = [Partition()] * n
        key[f - 1] = Partition((1,))
        terms[PartitionTuple(key)] = terms.get(PartitionTuple(key), 0) + 1
    return TensorSymElt(n, degree_bound, terms)


def power(x: TensorSymElt, e: int) -> TensorSymElt:
    out = TensorSymElt.one(x.n, x.degree_bound)
    for _ in range(e):
        out = multiply(out, x)
    return out
