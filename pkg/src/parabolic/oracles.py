"""Brute-force oracles, deliberately independent of the fast paths.

* Characters come from explicit permutation actions on tabloids combined by the
  Jacobi-Trudi determinant; no rim hooks are removed anywhere.
* LR coefficients come from inducing characters over conjugacy classes, using
  the tabloid characters above.
* Induction-product characters of tensor-symmetric elements are computed by
  splitting cycle types, which is the Day-convolution trace formula.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import prod
from typing import Sequence

from .partitions import Partition, partitions, z_factor


def permutation_of_type(mu: Sequence[int]) -> tuple[int, ...]:
    """A concrete permutation of ``{0..m-1}`` (as an image tuple) with cycle type ``mu``."""
    perm = []
    start = 0
    for length in mu:
        for t in range(length):
            perm.append(start + (t + 1) % length)
        start += length
    return tuple(perm)


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation via the determinant of its permutation matrix.

    The matrix is reduced by row swaps only, which is the determinant's
    definition for a 0/1 permutation matrix.
    """
    rows = [[1 if perm[c] == r else 0 for c in range(len(perm))] for r in range(len(perm))]
    sign = 1
    for col in range(len(rows)):
        pivot = next(r for r in range(col, len(rows)) if rows[r][col])
        if pivot != col:
            rows[pivot], rows[col] = rows[col], rows[pivot]
            sign = -sign
    return sign


def _tabloids(alpha: tuple[int, ...], m: int):
    def rec(i, remaining):
        if i == len(alpha):
            yield ()
            return
        for row in combinations(sorted(remaining), alpha[i]):
            for rest in rec(i + 1, remaining - set(row)):
                yield (frozenset(row),) + rest

    return rec(0, set(range(m)))


@lru_cache(maxsize=None)
def tabloid_character(alpha: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Trace of a cycle-type-``mu`` permutation on Young's permutation module ``M^α``.

    Counts tabloids of row lengths ``alpha`` fixed by an explicit permutation.
    """
    m = sum(mu)
    if sum(alpha) != m or any(a < 0 for a in alpha):
        return 0
    perm = permutation_of_type(mu)
    fixed = 0
    for tab in _tabloids(alpha, m):
        if all(frozenset(perm[x] for x in row) == row for row in tab):
            fixed += 1
    return fixed


@lru_cache(maxsize=None)
def tabloid_oracle_character(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """``χ^λ(μ) = Σ_w sgn(w) · π_{λ+δ-w(δ)}(μ)`` (Jacobi-Trudi), each ``π`` by tabloids."""
    lam = tuple(Partition(lam))
    length = len(lam)
    if length == 0:
        return 1 if sum(mu) == 0 else 0
    total = 0
    for w in permutations(range(length)):
        alpha = tuple(lam[i] - i + w[i] for i in range(length))
        if any(a < 0 for a in alpha):
            continue
        total += permutation_sign(w) * tabloid_character(tuple(sorted(alpha, reverse=True)), tuple(mu))
    return total


def hook_oracle_dimension(lam: Sequence[int]) -> int:
    """Dimension by counting standard Young tableaux (removal of corners)."""
    return _syt(tuple(Partition(lam)))


@lru_cache(maxsize=None)
def _syt(lam: tuple[int, ...]) -> int:
    if not lam:
        return 1
    total = 0
    for r in range(len(lam)):
        if r == len(lam) - 1 or lam[r] > lam[r + 1]:
            shape = list(lam)
            shape[r] -= 1
            total += _syt(tuple(p for p in shape if p))
    return total


def _sub_multisets(mu: tuple[int, ...], size: int):
    """All sub-multisets of ``mu`` with the given total, paired with their complements."""
    counts = sorted(Counter(mu).items(), reverse=True)

    def rec(i, remaining):
        if i == len(counts):
            if remaining == 0:
                yield (), ()
            return
        part, mult = counts[i]
        for take in range(min(mult, remaining // part) + 1):
            for left, right in rec(i + 1, remaining - take * part):
                yield (part,) * take + left, (part,) * (mult - take) + right

    yield from rec(0, size)


def induced_character(chi_left, chi_right, b: int, mu: tuple[int, ...]) -> Fraction:
    """Character of ``Ind_{S_b × S_c}^{S_{b+c}}`` at cycle type ``mu``.

    ``chi_left``/``chi_right`` are callables on cycle types.
    """
    zm = z_factor(mu)
    total = Fraction(0)
    for alpha, beta in _sub_multisets(tuple(mu), b):
        total += Fraction(zm, z_factor(alpha) * z_factor(beta)) * chi_left(alpha) * chi_right(beta)
    return total


@lru_cache(maxsize=None)
def lr_oracle(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
    """``<Ind(χ^λ ⊠ χ^μ), χ^ν>`` computed from tabloid characters."""
    a, b = sum(lam), sum(mu)
    if sum(nu) != a + b:
        return 0
    total = Fraction(0)
    for rho in partitions(a + b):
        rho = tuple(rho)
        ind = induced_character(
            lambda al: tabloid_oracle_character(tuple(lam), al),
            lambda be: tabloid_oracle_character(tuple(mu), be),
            a,
            rho,
        )
        total += ind * tabloid_oracle_character(tuple(nu), rho) / z_factor(rho)
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral inner product {total}")
    return int(total)


def tensor_trace_oracle(x, y, mu) -> Fraction:
    """Trace of the induction product of ``x`` and ``y`` at a cycle-type tuple ``mu``.

    ``x``/``y`` are TensorSymElt values; the trace of each factor is read off via
    their own ``trace_at``.  The product character is assembled component by
    component with the split-the-cycle-type formula, never touching LR.
    """
    from .symfunc import trace_at  # local import keeps this module dependency-light

    n = len(mu)
    total = Fraction(0)
    size_choices = [range(sum(mu[i]) + 1) for i in range(n)]
    for bsizes in product(*size_choices):
        splits_per_comp = [list(_sub_multisets(tuple(mu[i]), bsizes[i])) for i in range(n)]
        for split in product(*splits_per_comp):
            alpha = tuple(s[0] for s in split)
            beta = tuple(s[1] for s in split)
            weight = prod(Fraction(z_factor(mu[i]), z_factor(alpha[i]) * z_factor(beta[i])) for i in range(n))
            total += weight * trace_at(x, alpha) * trace_at(y, beta)
    return total

