"""Enhanced Hilbert series and the Grothendieck group as a free Λ^⊗n-module.

A series lives in variables ``t_{ij}`` (``i ∈ [n]``, ``j ≥ 1``).  Its monomials
are stored as sorted tuples of ``(i, j, e)`` triples with ``e > 0``, and the
*size* of a monomial is ``Σ j·e``, the size of the cycle type it records.  All
series are truncated at size ``N``.

Indexing convention: t-row ``i`` is the ``i``-th tensor factor of Λ^⊗n, which
is the factor of the graded piece ``V_(n-i+1)``.  So the full ring ``A``
reaches every row, while ``A_d`` (generated by ``V_(n-d+1), …, V_(n)``) only
reaches rows ``1..d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Sequence

from .linalg import rank
from .partitions import PartitionTuple, lambda_factorial, partition_tuples, partition_tuples_upto
from .symfunc import TensorSymElt, multiply, trace_at

Monomial = tuple[tuple[int, int, int], ...]


def monomial_size(m: Monomial) -> int:
    return sum(j * e for _, j, e in m)


def monomial_of_cycle_type(mu: Sequence[Sequence[int]]) -> Monomial:
    """``t^μ = Π_{i,j} t_{ij}^{m_j(μ^i)}``."""
    mu = PartitionTuple(mu)
    return tuple(sorted((i + 1, j, m) for i, comp in enumerate(mu) for j, m in comp.multiplicities().items()))


def cycle_type_of_monomial(n: int, m: Monomial) -> PartitionTuple:
    comps: list[list[int]] = [[] for _ in range(n)]
    for i, j, e in m:
        comps[i - 1].extend([j] * e)
    return PartitionTuple(sorted(c, reverse=True) for c in comps)


def _merge(m1: Monomial, m2: Monomial) -> Monomial:
    out: dict[tuple[int, int], int] = {}
    for i, j, e in m1 + m2:
        out[(i, j)] = out.get((i, j), 0) + e
    return tuple(sorted((i, j, e) for (i, j), e in out.items()))


class EGFSeries:
    """A truncated power series in the ``t_{ij}`` with rational coefficients."""

    __slots__ = ("n", "N", "_terms")

    def __init__(self, n: int, N: int, terms: Mapping[Monomial, Fraction] | Iterable = ()):
        if n < 1 or N < 0:
            raise ValueError("need n ≥ 1 and N ≥ 0")
        self.n, self.N = n, N
        clean: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            m = tuple(sorted((int(i), int(j), int(e)) for i, j, e in m if e))
            if any(not 1 <= i <= n or j < 1 or e < 0 for i, j, e in m):
                raise ValueError(f"bad monomial {m}")
            if monomial_size(m) > N:
                continue
            clean[m] = clean.get(m, Fraction(0)) + Fraction(c)
        self._terms = {m: c for m, c in clean.items() if c}

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def coefficient(self, m: Iterable[Sequence[int]]) -> Fraction:
        return self._terms.get(tuple(sorted(tuple(t) for t in m)), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, EGFSeries):
            return NotImplemented
        return (self.n, self.N, self._terms) == (other.n, other.N, other._terms)

    def __hash__(self):
        return hash((self.n, self.N, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"EGFSeries(n={self.n}, N={self.N}, terms={len(self._terms)})"

    def _check(self, other: "EGFSeries") -> None:
        if (self.n, self.N) != (other.n, other.N):
            raise ValueError(f"mismatched series: (n={self.n}, N={self.N}) vs (n={other.n}, N={other.N})")

    def __add__(self, other: "EGFSeries") -> "EGFSeries":
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return EGFSeries(self.n, self.N, out)

    def __neg__(self) -> "EGFSeries":
        return EGFSeries(self.n, self.N, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "EGFSeries") -> "EGFSeries":
        return self + (-other)

    def __mul__(self, other: "EGFSeries") -> "EGFSeries":
        return series_multiply(self, other)

    @classmethod
    def one(cls, n: int, N: int) -> "EGFSeries":
        return cls(n, N, {(): 1})

    def to_json(self) -> list[dict]:
        return [
            {"exponents": [list(t) for t in m], "numerator": c.numerator, "denominator": c.denominator}
            for m, c in sorted(self._terms.items())
        ]

    @classmethod
    def from_json(cls, n: int, N: int, payload: Iterable[dict]) -> "EGFSeries":
        return cls(n, N, [(tuple(tuple(t) for t in d["exponents"]), Fraction(d["numerator"], d.get("denominator", 1))) for d in payload])

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in sorted(self._terms.items(), key=lambda kv: (monomial_size(kv[0]), kv[0])):
            mono = "*".join(f"t{i}{j}" + (f"^{e}" if e > 1 else "") for i, j, e in m) or "1"
            parts.append(f"{c}*{mono}" if c != 1 else mono)
        return " + ".join(parts)


def series_multiply(f: EGFSeries, g: EGFSeries) -> EGFSeries:
    f._check(g)
    out: dict[Monomial, Fraction] = {}
    for m1, c1 in f._terms.items():
        s1 = monomial_size(m1)
        for m2, c2 in g._terms.items():
            if s1 + monomial_size(m2) > f.N:
                continue
            m = _merge(m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
    return EGFSeries(f.n, f.N, out)


def exp_T(d: int, N: int, n: int) -> EGFSeries:
    """``exp(Σ_j t_{1j} + ⋯ + t_{dj})`` truncated at size ``N``: ``Σ_e Π t^e/e!`` over rows ``1..d``."""
    if not 1 <= d <= n:
        raise ValueError(f"d must lie in 1..{n}")
    cells = [(i, j) for i in range(1, d + 1) for j in range(1, N + 1)]
    terms: dict[Monomial, Fraction] = {}

    def rec(idx: int, budget: int, mono: list, coeff: Fraction):
        if idx == len(cells):
            terms[tuple(mono)] = coeff
            return
        i, j = cells[idx]
        for e in range(budget // j + 1):
            if e:
                mono.append((i, j, e))
            rec(idx + 1, budget - j * e, mono, coeff / factorial(e))
            if e:
                mono.pop()

    rec(0, N, [], Fraction(1))
    return EGFSeries(n, N, terms)


def series_from_traces(n: int, N: int, trace: Callable[[PartitionTuple], int | Fraction], sizes: Iterable[Sequence[int]] | None = None) -> EGFSeries:
    """``Σ_μ trace(μ)·t^μ/μ!`` over cycle-type tuples of size ``≤ N`` (or with the given size vectors)."""
    if sizes is None:
        mus: Iterable[PartitionTuple] = partition_tuples_upto(n, N)
    else:
        mus = (mu for s in sizes if sum(s) <= N for mu in partition_tuples(n, s))
    terms = {}
    for mu in mus:
        tr = trace(mu)
        if tr:
            terms[monomial_of_cycle_type(mu)] = Fraction(tr) / lambda_factorial(mu)
    return EGFSeries(n, N, terms)


def hseries_of_symelt(x: TensorSymElt, N: int) -> EGFSeries:
    """``Σ_μ Tr(c_μ | x)·t^μ/μ!``; only the size vectors present in ``x`` can contribute."""
    sizes = {lam.sizes for lam in x.terms}
    return series_from_traces(x.n, N, lambda mu: trace_at(x, mu), sorted(sizes))


@dataclass(frozen=True)
class KClass:
    """``Σ_d coeffs[d]·[A_d]``, ``d = 0..n``; coordinate ``d`` holds ``[V]`` for ``[A_d ⊗ V]``."""

    coeffs: tuple[TensorSymElt, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValueError("a class needs n+1 coordinates")
        n, bound = coeffs[0].n, coeffs[0].degree_bound
        if len(coeffs) != n + 1:
            raise ValueError(f"expected {n + 1} coordinates, got {len(coeffs)}")
        if any(c.n != n or c.degree_bound != bound for c in coeffs):
            raise ValueError("coordinates must share arity and truncation")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def n(self) -> int:
        return self.coeffs[0].n

    @property
    def degree_bound(self) -> int:
        return self.coeffs[0].degree_bound

    @classmethod
    def zero(cls, n: int, bound: int) -> "KClass":
        return cls(tuple(TensorSymElt.zero(n, bound) for _ in range(n + 1)))

    @classmethod
    def basis(cls, d: int, n: int, bound: int) -> "KClass":
        """``[A_d]``."""
        if not 0 <= d <= n:
            raise ValueError(f"d must lie in 0..{n}")
        return cls(tuple(TensorSymElt.one(n, bound) if i == d else TensorSymElt.zero(n, bound) for i in range(n + 1)))

    def __add__(self, other: "KClass") -> "KClass":
        return KClass(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def to_json(self) -> list[list[dict]]:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, n: int, bound: int, payload: Sequence[list[dict]]) -> "KClass":
        return cls(tuple(TensorSymElt.from_json(p, n, bound) for p in payload))


def kclass_scale(K: KClass, v: TensorSymElt) -> KClass:
    """``[V]·Σ_d c_d[A_d] = Σ_d (c_d·[V])[A_d]``."""
    if v.n != K.n or v.degree_bound != K.degree_bound:
        raise ValueError("scalar and class live over different rings")
    return KClass(tuple(multiply(c, v) for c in K.coeffs))


def hseries_of_class(K: KClass, N: int) -> EGFSeries:
    """``p_0 + Σ_d p_d·exp(T_d)`` with ``p_d`` the series of coordinate ``d``."""
    total = hseries_of_symelt(K.coeffs[0], N)
    for d in range(1, K.n + 1):
        if not K.coeffs[d].is_zero():
            total = total + series_multiply(hseries_of_symelt(K.coeffs[d], N), exp_T(d, N, K.n))
    return total


def independence_certificate(g: int, N: int, n: int) -> bool:
    """Whether the series of ``s_λ·[A_d]`` (``|λ| ≤ g``, ``0 ≤ d ≤ n``) are linearly independent at size ``N``."""
    if N < 2 * g + n:
        raise ValueError(f"N={N} is below the separation floor 2g+n={2 * g + n}")
    bound = g
    rows = []
    for d in range(n + 1):
        for lam in partition_tuples_upto(n, g):
            K = kclass_scale(KClass.basis(d, n, bound), TensorSymElt.schur(lam, bound))
            rows.append(dict(hseries_of_class(K, N).terms))
    return rank(rows) == len(rows)
