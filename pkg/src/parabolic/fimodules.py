"""Dimension functions of FI(n)-modules: principal projectives, simples,
isotypic projective covers, and the Day convolution tensor product.

The Day convolution here is the one induced by disjoint union on FI(n), i.e.
the left Kan extension of ``M ⊠ N`` along ``⊔``.  On principal projectives it
gives ``P_a ⊗ P_b = P_{a+b}``.  It is *not* the pointwise convolution
``Σ_{b+b'=c} Π binom(c_i, b_i) dim M(b) dim N(b')`` of the underlying
FB^⊗n-modules; that one is :func:`fb_convolution_dim` and only agrees with the
FI(n) product on pairs of simples.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb, prod
from typing import Sequence, Union

from .categories import (
    FB,
    FI,
    WeightedInjection,
    automorphism_count,
    elements,
    enumerate_homs,
    hom_count,
    iter_homs,
)
from .partitions import PartitionTuple, composition, compositions_upto, hook_dimension


@dataclass(frozen=True)
class PrincipalProjectiveSpec:
    base: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "base", composition(self.base))

    @property
    def n(self) -> int:
        return len(self.base)

    def to_json(self) -> dict:
        return {"principal": list(self.base)}


@dataclass(frozen=True)
class SimpleModuleSpec:
    label: PartitionTuple

    def __post_init__(self):
        object.__setattr__(self, "label", PartitionTuple(self.label))

    @property
    def n(self) -> int:
        return self.label.n

    @property
    def support(self) -> tuple[int, ...]:
        return self.label.sizes

    def to_json(self) -> dict:
        return {"simple": self.label.to_json()}


Spec = Union[PrincipalProjectiveSpec, SimpleModuleSpec]
# A module spec is one spec or a formal sum given as (multiplicity, spec) pairs.
ModuleSpec = Union[Spec, Sequence[tuple[int, Spec]]]


def spec_from_json(payload: dict) -> Spec:
    if "principal" in payload:
        return PrincipalProjectiveSpec(tuple(payload["principal"]))
    if "simple" in payload:
        return SimpleModuleSpec(PartitionTuple(payload["simple"]))
    raise ValueError(f"unknown module spec {payload!r}")


def _terms(m: ModuleSpec) -> list[tuple[int, Spec]]:
    if isinstance(m, (PrincipalProjectiveSpec, SimpleModuleSpec)):
        return [(1, m)]
    return [(int(c), s) for c, s in m]


def principal_dim(a: Sequence[int], s: Sequence[int]) -> int:
    """``dim P_a(s) = |Hom_FI(n)(a, s)|``."""
    return hom_count(FI, a, s)


def simple_dim(lam: Sequence[Sequence[int]], b: Sequence[int]) -> int:
    lam = PartitionTuple(lam)
    b = composition(b)
    if len(b) != lam.n:
        raise ValueError("arity mismatch")
    if lam.sizes != b:
        return 0
    return prod(hook_dimension(c) for c in lam)


def isotypic_projective_dim(lam: Sequence[Sequence[int]], s: Sequence[int]) -> int:
    """Multiplicity of ``M_λ`` in the permutation module ``C[Hom(a, s)]``, ``a = (|λ^i|)``.

    ``S_a`` acts freely on injections out of ``a``, so the multiplicity is
    ``dim M_λ · |Hom(a, s)| / |S_a|``.
    """
    lam = PartitionTuple(lam)
    a = lam.sizes
    total = prod(hook_dimension(c) for c in lam) * principal_dim(a, s)
    q, r = divmod(total, automorphism_count(a))
    if r:
        raise ArithmeticError(f"non-integral multiplicity for {lam!r} at {s}")
    return q


def dim(m: ModuleSpec, c: Sequence[int]) -> int:
    total = 0
    for mult, spec in _terms(m):
        if isinstance(spec, PrincipalProjectiveSpec):
            total += mult * principal_dim(spec.base, c)
        else:
            total += mult * simple_dim(spec.label, c)
    return total


def _pair_dim(x: Spec, y: Spec, c: tuple[int, ...]) -> int:
    if isinstance(x, SimpleModuleSpec) and isinstance(y, PrincipalProjectiveSpec):
        x, y = y, x
    if isinstance(x, PrincipalProjectiveSpec) and isinstance(y, PrincipalProjectiveSpec):
        return principal_dim(tuple(p + q for p, q in zip(x.base, y.base)), c)
    if isinstance(x, PrincipalProjectiveSpec):
        # P_a ⊗ M_μ(c): bijections a ⊔ b -> c, weight-preserving on b, modulo S_b.
        b = y.support
        rest = tuple(ci - bi for ci, bi in zip(c, b))
        if any(r < 0 for r in rest):
            return 0
        placements = prod(comb(ci, bi) for ci, bi in zip(c, b))
        return simple_dim(y.label, b) * placements * hom_count(FB, x.base, rest)
    # simple ⊗ simple is the induced representation, supported at a + b only
    a, b = x.support, y.support
    if tuple(p + q for p, q in zip(a, b)) != c:
        return 0
    return simple_dim(x.label, a) * simple_dim(y.label, b) * prod(comb(ci, ai) for ci, ai in zip(c, a))


def day_tensor_dim(m: ModuleSpec, n_: ModuleSpec, c: Sequence[int]) -> int:
    """``dim (M ⊗ N)(c)`` for the Day convolution on FI(n), bilinear in formal sums."""
    c = composition(c)
    total = 0
    for mx, x in _terms(m):
        for my, y in _terms(n_):
            if x.n != len(c) or y.n != len(c):
                raise ValueError("arity mismatch")
            total += mx * my * _pair_dim(x, y, c)
    return total


def fb_convolution_dim(m: ModuleSpec, n_: ModuleSpec, c: Sequence[int]) -> int:
    """Pointwise convolution of the underlying FB^⊗n-modules (the induction-product count)."""
    c = composition(c)
    total = 0
    for b in product(*(range(ci + 1) for ci in c)):
        rest = tuple(ci - bi for ci, bi in zip(c, b))
        total += prod(comb(ci, bi) for ci, bi in zip(c, b)) * dim(m, b) * dim(n_, rest)
    return total


# ---------------------------------------------------------------------------
# brute-force coend


def fi_generating_morphisms(A: tuple[int, ...], bound: int) -> list[WeightedInjection]:
    """Morphisms out of ``A`` generating FI(n) (targets of size ``≤ bound``).

    Adding one new element, raising the last element of a weight by one, and
    swapping adjacent elements of equal weight.  Every weight-non-decreasing
    injection is a composite of these.
    """
    n = len(A)
    out = []
    ident = {x: x for x in elements(A)}
    for i in range(n):
        if sum(A) < bound:
            A2 = tuple(x + (j == i) for j, x in enumerate(A))
            out.append(WeightedInjection(A, A2, tuple(ident[x] for x in elements(A))))
        if i + 1 < n and A[i]:
            A2 = tuple(x - (j == i) + (j == i + 1) for j, x in enumerate(A))
            last = (i + 1, A[i])
            images = [(i + 2, A2[i + 1]) if x == last else x for x in elements(A)]
            out.append(WeightedInjection(A, A2, tuple(images)))
        for p in range(1, A[i]):
            swap = {(i + 1, p): (i + 1, p + 1), (i + 1, p + 1): (i + 1, p)}
            out.append(WeightedInjection(A, A, tuple(swap.get(x, x) for x in elements(A))))
    return out


def _positions(f: WeightedInjection) -> tuple[int, ...]:
    index = {y: i for i, y in enumerate(elements(f.target))}
    return tuple(index[y] for y in f.images)


@lru_cache(maxsize=None)
def _union_positions(A: tuple[int, ...], B: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Where the elements of ``A`` and of ``B`` sit inside ``A ⊔ B``."""
    inA, inB = [], []
    pos = 0
    for x, y in zip(A, B):
        inA.extend(range(pos, pos + x))
        inB.extend(range(pos + x, pos + x + y))
        pos += x + y
    return tuple(inA), tuple(inB)


@lru_cache(maxsize=None)
def _hom_positions(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(_positions(h) for h in iter_homs(FI, x, y))


@lru_cache(maxsize=None)
def _generator_positions(A: tuple[int, ...], bound: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    return tuple((g.target, _positions(g)) for g in fi_generating_morphisms(A, bound))


@lru_cache(maxsize=None)
def _pullback_index(A, B, u, A2, v, B2) -> tuple[int, ...]:
    """Index array ``idx`` with ``φ ∘ (u ⊔ v) = (φ[i] for i in idx)``."""
    inA, inB = _union_positions(A, B)
    inA2, inB2 = _union_positions(A2, B2)
    out = [0] * (len(inA) + len(inB))
    for p, pos in enumerate(inA):
        out[pos] = inA2[u[p]]
    for q, pos in enumerate(inB):
        out[pos] = inB2[v[q]]
    return tuple(out)


def day_principal_dim_bruteforce(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> int:
    """``dim (P_a ⊗ P_b)(c)`` as the number of classes of the coend

        ∫^{A,B} Hom(A ⊔ B, c) × Hom(a, A) × Hom(b, B)

    under ``(φ∘(u ⊔ v), f, g) ~ (φ, u∘f, v∘g)``.  The relation is generated by
    ``u`` and ``v`` separately, each running over a generating set of morphisms.
    Morphisms are handled as tuples of target positions.
    """
    a, b, c = composition(a), composition(b), composition(c)
    n = len(c)
    size = sum(c)
    objects = compositions_upto(n, size)
    H = _hom_positions

    def plus(x, y):
        return tuple(p + q for p, q in zip(x, y))

    ids: dict = {}
    parent: list[int] = []

    def node(t) -> int:
        i = ids.get(t)
        if i is None:
            i = ids[t] = len(parent)
            parent.append(i)
        return i

    def find(i: int) -> int:
        root = i
        while parent[root] != root:
            root = parent[root]
        while parent[i] != root:
            parent[i], i = root, parent[i]
        return root

    def union(i: int, j: int) -> None:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj

    pairs = [(A, B) for A in objects for B in objects if sum(A) + sum(B) <= size and H(a, A) and H(b, B)]
    for A, B in pairs:
        for phi in H(plus(A, B), c):
            for f in H(a, A):
                for g in H(b, B):
                    node((A, B, phi, f, g))
    for A, B in pairs:
        idA, idB = tuple(range(sum(A))), tuple(range(sum(B)))
        for A2, u in _generator_positions(A, size - sum(B)):
            idx = _pullback_index(A, B, u, A2, idB, B)
            for phi in H(plus(A2, B), c):
                left = tuple([phi[i] for i in idx])
                for f in H(a, A):
                    uf_ = tuple([u[i] for i in f])
                    for g in H(b, B):
                        union(ids[(A, B, left, f, g)], ids[(A2, B, phi, uf_, g)])
        for B2, v in _generator_positions(B, size - sum(A)):
            idx = _pullback_index(A, B, idA, A, v, B2)
            for phi in H(plus(A, B2), c):
                left = tuple([phi[i] for i in idx])
                for f in H(a, A):
                    for g in H(b, B):
                        union(ids[(A, B, left, f, g)], ids[(A, B2, phi, f, tuple([v[i] for i in g]))])
    return sum(1 for i in range(len(parent)) if find(i) == i)


def isotypic_dim_by_characters(lam: Sequence[Sequence[int]], s: Sequence[int]) -> int:
    """Multiplicity via ``<χ_perm, χ^λ>`` with fixed points counted by enumeration."""
    from fractions import Fraction
    from itertools import permutations

    from .oracles import tabloid_oracle_character

    lam = PartitionTuple(lam)
    a = lam.sizes
    homs = enumerate_homs(FI, a, s)
    total = Fraction(0)
    group = list(product(*(permutations(range(ai)) for ai in a)))
    for g in group:
        # g acts on a; the permutation action on Hom(a, s) is precomposition by g
        def act(x):
            w, p = x
            return (w, g[w - 1][p - 1] + 1)

        fixed = sum(1 for h in homs if all(h(act(x)) == h(x) for x in elements(a)))
        if not fixed:
            continue
        char = 1
        for i, ai in enumerate(a):
            cycle_type = _cycle_type(g[i])
            char *= tabloid_oracle_character(tuple(lam[i]), cycle_type)
        total += fixed * char
    total /= len(group)
    if total.denominator != 1:
        raise ArithmeticError("non-integral character inner product")
    return int(total)


def _cycle_type(perm: Sequence[int]) -> tuple[int, ...]:
    seen = set()
    out = []
    for s0 in range(len(perm)):
        if s0 in seen:
            continue
        length = 0
        x = s0
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        out.append(length)
    return tuple(sorted(out, reverse=True))
