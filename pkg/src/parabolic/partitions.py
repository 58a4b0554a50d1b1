"""Partitions, tuples of partitions, symmetric-group characters and
Littlewood-Richardson coefficients.

Everything here is exact integer arithmetic.  Partitions are immutable tuple
subclasses so they hash, compare and serialize like the plain integer arrays
they wrap.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Zero parts are stripped on construction, so ``Partition((2, 1, 0))`` equals
    ``Partition((2, 1))``.  The empty partition is valid and has size 0.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        parts = [p for p in parts if p]
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts are not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > c) for c in range(self[0]))

    def multiplicities(self) -> dict[int, int]:
        """Map part ``j`` to the number of times it occurs."""
        return dict(Counter(self))

    def hook_lengths(self) -> list[int]:
        conj = self.conjugate()
        return [self[r] - c + conj[c] - r - 1 for r in range(len(self)) for c in range(self[r])]

    def contains(self, other: Sequence[int]) -> bool:
        """Young-diagram containment ``other ⊆ self``."""
        if len(other) > len(self):
            return False
        return all(o <= s for o, s in zip(other, self))


class PartitionTuple(tuple):
    """An n-tuple of partitions (components may be empty)."""

    __slots__ = ()

    def __new__(cls, components: Iterable[Iterable[int]]) -> "PartitionTuple":
        return super().__new__(cls, (c if isinstance(c, Partition) else Partition(c) for c in components))

    def __repr__(self) -> str:
        return f"PartitionTuple({[list(c) for c in self]})"

    @property
    def n(self) -> int:
        return len(self)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self)

    @property
    def size(self) -> int:
        return sum(c.size for c in self)

    @classmethod
    def empty(cls, n: int) -> "PartitionTuple":
        return cls([()] * n)

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self]


# Cycle types are read off the same data structure; the alias documents intent.
CycleTypeTuple = PartitionTuple


def composition(entries: Iterable[int]) -> tuple[int, ...]:
    """Validate and return an n-tuple of nonnegative integers."""
    out = tuple(int(e) for e in entries)
    if any(e < 0 for e in out):
        raise ValueError(f"composition entries must be nonnegative: {out}")
    return out


def reverse(a: Sequence[int]) -> tuple[int, ...]:
    """The reversal ``τ(a) = (a_n, ..., a_1)``."""
    return tuple(reversed(tuple(a)))


def dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff every prefix sum of ``a`` is at most the matching prefix sum of ``b``."""
    if len(a) != len(b):
        raise ValueError(f"arity mismatch: {len(a)} vs {len(b)}")
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def _partitions(m: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if m == 0:
        return ((),)
    out = []
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(m: int) -> list[Partition]:
    """All partitions of ``m`` in reverse lexicographic order."""
    if m < 0:
        return []
    return [Partition(p) for p in _partitions(m, m)]


def compositions(n: int, total: int) -> Iterator[tuple[int, ...]]:
    """All n-tuples of nonnegative integers summing to ``total`` (lex order)."""
    if n == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in compositions(n - 1, total - first):
            yield (first,) + rest


def compositions_upto(n: int, bound: int) -> list[tuple[int, ...]]:
    return [c for t in range(bound + 1) for c in compositions(n, t)]


def partition_tuples(n: int, sizes: Sequence[int]) -> Iterator[PartitionTuple]:
    """All tuples whose i-th component is a partition of ``sizes[i]``."""
    if len(sizes) != n:
        raise ValueError("sizes must have length n")

    def rec(i):
        if i == n:
            yield ()
            return
        for p in partitions(sizes[i]):
            for rest in rec(i + 1):
                yield (p,) + rest

    for comps in rec(0):
        yield PartitionTuple(comps)


def partition_tuples_of_total(n: int, total: int) -> Iterator[PartitionTuple]:
    for sizes in compositions(n, total):
        yield from partition_tuples(n, sizes)


def partition_tuples_upto(n: int, bound: int) -> list[PartitionTuple]:
    return [lam for t in range(bound + 1) for lam in partition_tuples_of_total(n, t)]


# ---------------------------------------------------------------------------
# numerical invariants


def hook_dimension(lam: Sequence[int]) -> int:
    """Dimension of the Specht module ``M_λ`` by the hook length formula."""
    lam = Partition(lam)
    return factorial(lam.size) // prod(lam.hook_lengths())


def z_factor(mu: Sequence[int]) -> int:
    """Centralizer order ``Π j^{m_j} m_j!`` of a permutation of cycle type ``mu``."""
    return prod(j**m * factorial(m) for j, m in Counter(mu).items())


def lambda_factorial(mu: Iterable[Sequence[int]]) -> int:
    """``Π_{i,j} m_j(μ^i)!`` for a tuple of cycle types."""
    return prod(factorial(m) for comp in mu for m in Counter(comp).values())


def mn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Irreducible character ``χ^λ`` at a permutation of cycle type ``mu``.

    Murnaghan-Nakayama recursion on beta-sets; removing a rim hook of length
    ``r`` moves one bead down by ``r`` and the sign counts the beads jumped.
    """
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{list(lam)}| != |{list(mu)}|")
    return _mn(tuple(lam), tuple(mu))


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beads:
            continue
        jumped = sum(1 for c in beta if target < c < b)
        moved = sorted((beads - {b}) | {target}, reverse=True)
        shape = tuple(x - (length - 1 - i) for i, x in enumerate(moved))
        shape = tuple(p for p in shape if p)
        total += (-1) ** jumped * _mn(shape, rest)
    return total


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Multiplicity of ``s_ν`` in ``s_λ s_μ``.

    Counts semistandard fillings of the skew shape ``ν/λ`` with content ``μ``
    whose reverse reading word (right to left, top to bottom) is a lattice word.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if nu.size != lam.size + mu.size or not nu.contains(lam) or not nu.contains(mu):
        return 0
    return _lr(tuple(lam), tuple(mu), tuple(nu))


@lru_cache(maxsize=None)
def _lr(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
    lam_ext = lam + (0,) * (len(nu) - len(lam))
    # cells in reading order: rows top to bottom, each row right to left
    cells = [(r, c) for r in range(len(nu)) for c in range(nu[r] - 1, lam_ext[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(mu) + 1)

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        hi = len(mu)
        # row weakly increases left to right, so reading leftwards values weakly decrease
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        above = filling.get((r - 1, c))
        if above is not None:
            lo = above + 1
        found = 0
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            found += rec(idx + 1)
            del filling[(r, c)]
            counts[v] -= 1
        return found

    return rec(0)


@lru_cache(maxsize=None)
def _lr_expand(lam: tuple[int, ...], mu: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    total = sum(lam) + sum(mu)
    out = []
    for nu in _partitions(total, total):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out.append((nu, c))
    return tuple(out)


def lr_expand(lam: Sequence[int], mu: Sequence[int]) -> dict[Partition, int]:
    """The product ``s_λ s_μ`` as a map from ``ν`` to ``c^ν_{λμ}``."""
    return {Partition(nu): c for nu, c in _lr_expand(tuple(Partition(lam)), tuple(Partition(mu)))}
