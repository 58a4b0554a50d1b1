"""A finite model of the flagged space ``V`` and of the modules built from it.

``V`` has basis ``e_{ij}`` with row ``i ∈ [n]`` and column ``j ∈ [k]``; the flag is
``V_i = span{e_{i'j} : i' ≤ i}`` and ``V_(i)`` is the graded piece of row ``i``.
Polynomial variables ``x_{ij}`` carry the same labels, so a *cell* ``(i, j)``
names both.

Every module here is ``(polynomials) ⊗ (tensor factors)``, each tensor factor
being a coordinate subquotient of ``V``: a contiguous band of rows, optionally
with one excluded cell.  A basis key is ``(mono, tensor)`` where ``mono`` is a
sorted tuple of cells (with repetition) and ``tensor`` has one cell per factor.

Tensor factors follow the weight-major listing of the weighted set ``a``; the
factor of a weight-``i`` element is

* ``V_{n-i+1}`` (rows ``1..n-i+1``) in ``W_a`` and ``Q_a = A ⊗ W_a``,
* ``V/V_{n-i}`` (rows ``n-i+1..n``) in ``T_{d,a}``,
* ``V_(n-i+1)`` in ``K_{d,a}``, except weight ``d`` which is ``W_d/V_{n-d}``
  (row ``n-d+1`` without the cell ``(n-d+1, 1)``).

The parabolic Lie algebra is spanned by elementary matrices ``E = (tgt, src)``
sending ``e_src`` to ``e_tgt`` with ``row(tgt) ≤ row(src)``; it acts by
derivations.  Whenever an image cell is not in a factor's band it is zero in
the quotient, which is how quotient factors and ``A_d`` are realized.

Basis order: monomials by degree, then lexicographically; tensors
lexicographically, factor by factor.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from math import prod
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .categories import (
    FI,
    CategoryFlavor,
    WeightedInjection,
    elements,
    inward_objects,
    iter_homs,
)
from .linalg import RowEchelon
from .partitions import PartitionTuple, composition

Cell = tuple[int, int]
Key = tuple[tuple[Cell, ...], tuple[Cell, ...]]
Generator = tuple[Cell, Cell]  # (tgt, src)


# ---------------------------------------------------------------------------
# model and weights


@dataclass(frozen=True)
class FlagModel:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise ValueError("n and k must be positive")

    def cells(self, lo: int = 1, hi: int | None = None) -> list[Cell]:
        hi = self.n if hi is None else hi
        return [(r, c) for r in range(lo, hi + 1) for c in range(1, self.k + 1)]

    def flag_dim(self, i: int) -> int:
        """``dim V_i``."""
        return i * self.k


@dataclass(frozen=True)
class WeightMatrix:
    """A finitely supported ``n × ∞`` matrix of multiplicities, stored sparsely."""

    entries: tuple[tuple[Cell, int], ...]

    def __post_init__(self):
        clean = Counter()
        for cell, m in self.entries:
            if m < 0:
                raise ValueError("weights are nonnegative")
            if m:
                clean[tuple(cell)] += m
        object.__setattr__(self, "entries", tuple(sorted(clean.items())))

    @classmethod
    def from_cells(cls, cells: Iterable[Cell]) -> "WeightMatrix":
        return cls(tuple(Counter(cells).items()))

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]]) -> "WeightMatrix":
        return cls(tuple(((i + 1, j + 1), m) for i, row in enumerate(rows) for j, m in enumerate(row)))

    def as_dict(self) -> dict[Cell, int]:
        return dict(self.entries)

    def to_matrix(self, n: int, k: int) -> list[list[int]]:
        out = [[0] * k for _ in range(n)]
        for (r, c), m in self.entries:
            if r > n or c > k:
                raise ValueError(f"cell {(r, c)} outside an {n}x{k} model")
            out[r - 1][c - 1] = m
        return out

    @property
    def size(self) -> int:
        return sum(m for _, m in self.entries)


def weight_of_tuple(a: Sequence[int]) -> WeightMatrix:
    """``λ(a)``: row ``r`` holds ``a_{n-r+1}`` ones in its first columns (the weight of ``ε_a``)."""
    a = composition(a)
    n = len(a)
    return WeightMatrix.from_cells((r, c) for r in range(1, n + 1) for c in range(1, a[n - r] + 1))


def generator_vector(a: Sequence[int]) -> tuple[Cell, ...]:
    """``ε_a``: the weight-``i`` elements carry ``e_{n-i+1,1}, e_{n-i+1,2}, ...``."""
    a = composition(a)
    n = len(a)
    return tuple((n - w + 1, p) for w, p in elements(a))


# ---------------------------------------------------------------------------
# modules


@dataclass(frozen=True)
class Factor:
    """Coordinate subquotient of ``V``: rows ``lo..hi``, minus ``excluded`` if given."""

    lo: int
    hi: int
    excluded: Cell | None = None

    def allows(self, cell: Cell) -> bool:
        return self.lo <= cell[0] <= self.hi and cell != self.excluded

    def cells(self, k: int) -> list[Cell]:
        return [(r, c) for r in range(self.lo, self.hi + 1) for c in range(1, k + 1) if (r, c) != self.excluded]


@dataclass(frozen=True)
class TruncatedModule:
    """``(polynomials in rows poly_lo..n, degree ≤ D) ⊗ factors``; ``poly_lo=None`` means no polynomials."""

    kind: str
    model: FlagModel
    factors: tuple[Factor, ...]
    poly_lo: int | None = None
    D: int = 0
    label: tuple = ()

    @property
    def n(self) -> int:
        return self.model.n

    @property
    def k(self) -> int:
        return self.model.k

    def poly_allows(self, cell: Cell) -> bool:
        return self.poly_lo is not None and self.poly_lo <= cell[0] <= self.n

    def poly_cells(self) -> list[Cell]:
        if self.poly_lo is None:
            return []
        return self.model.cells(self.poly_lo)

    def monomials(self, D: int | None = None) -> list[tuple[Cell, ...]]:
        D = self.D if D is None else D
        cells = self.poly_cells()
        out = [()]
        if cells:
            for deg in range(1, D + 1):
                out.extend(combinations_with_replacement(cells, deg))
        return out

    def tensors(self) -> Iterator[tuple[Cell, ...]]:
        return product(*(f.cells(self.k) for f in self.factors))

    def basis(self) -> Iterator[Key]:
        for mono in self.monomials():
            for t in self.tensors():
                yield (mono, t)

    def dim(self) -> int:
        return len(self.monomials()) * prod(len(f.cells(self.k)) for f in self.factors)

    def contains(self, key: Key) -> bool:
        mono, t = key
        if len(t) != len(self.factors) or len(mono) > self.D:
            return False
        if any(not self.poly_allows(c) or c[1] > self.k for c in mono):
            return False
        return all(f.allows(c) and c[1] <= self.k for f, c in zip(self.factors, t))

    @staticmethod
    def weight(key: Key) -> WeightMatrix:
        mono, t = key
        return WeightMatrix.from_cells(mono + t)

    def basis_of_weight(self, w: WeightMatrix | Mapping[Cell, int]) -> list[Key]:
        """Basis keys of weight exactly ``w``, found by placing tensor factors first."""
        remaining = dict(w.as_dict() if isinstance(w, WeightMatrix) else w)
        if any(c[1] > self.k for c in remaining):
            return []
        out: list[Key] = []
        chosen: list[Cell] = []

        def rec(idx: int):
            if idx == len(self.factors):
                mono = tuple(sorted(c for c, m in remaining.items() for _ in range(m)))
                if not mono or (len(mono) <= self.D and all(self.poly_allows(c) for c in mono)):
                    out.append((mono, tuple(chosen)))
                return
            f = self.factors[idx]
            for cell in sorted(remaining):
                if remaining[cell] and f.allows(cell):
                    remaining[cell] -= 1
                    chosen.append(cell)
                    rec(idx + 1)
                    chosen.pop()
                    remaining[cell] += 1

        rec(0)
        return sorted(out)

    def act(self, E: Generator, key: Key) -> dict[Key, int]:
        """Derivation action of the elementary matrix ``E = (tgt, src)``."""
        tgt, src = E
        mono, t = key
        out: dict[Key, int] = {}
        m = mono.count(src)
        if m and self.poly_allows(tgt):
            i = mono.index(src)
            new = tuple(sorted(mono[:i] + mono[i + 1 :] + (tgt,)))
            out[(new, t)] = m
        for pos, cell in enumerate(t):
            if cell == src and self.factors[pos].allows(tgt):
                nk = (mono, t[:pos] + (tgt,) + t[pos + 1 :])
                out[nk] = out.get(nk, 0) + 1
        return out


def W_module(model: FlagModel, a: Sequence[int]) -> TruncatedModule:
    a = composition(a)
    n = model.n
    return TruncatedModule("W", model, tuple(Factor(1, n - w + 1) for w, _ in elements(a)), label=(a,))


def Q_module(model: FlagModel, a: Sequence[int], D: int) -> TruncatedModule:
    a = composition(a)
    n = model.n
    return TruncatedModule("Q", model, tuple(Factor(1, n - w + 1) for w, _ in elements(a)), 1, D, (a,))


def Ad_module(model: FlagModel, d: int, a: Sequence[int], D: int) -> TruncatedModule:
    """``A_d^{≤D} ⊗ W_a`` with ``A_d = A/p_d`` in the variables of rows ``n-d+1..n``."""
    a = composition(a)
    n = model.n
    return TruncatedModule("AdW", model, tuple(Factor(1, n - w + 1) for w, _ in elements(a)), n - d + 1, D, (d, a))


def T_module(model: FlagModel, d: int, a: Sequence[int]) -> TruncatedModule:
    a = composition(a)
    n = model.n
    _check_d(d, n)
    return TruncatedModule("T", model, tuple(Factor(n - w + 1, n) for w, _ in elements(a)), label=(d, a))


def K_module(model: FlagModel, d: int, a: Sequence[int]) -> TruncatedModule:
    a = composition(a)
    n = model.n
    _check_d(d, n)
    factors = []
    for w, _ in elements(a):
        r = n - w + 1
        factors.append(Factor(r, r, (r, 1) if w == d else None))
    return TruncatedModule("K", model, tuple(factors), label=(d, a))


def _check_d(d: int, n: int) -> None:
    if not 1 <= d <= n:
        raise ValueError(f"d must lie in 1..{n}")


def weight_space_dim(M: TruncatedModule, w: WeightMatrix) -> int:
    return len(M.basis_of_weight(w))


# ---------------------------------------------------------------------------
# Lie algebra


def parabolic_generators(model: FlagModel) -> list[Generator]:
    """Elementary matrices ``e_src ↦ e_tgt`` with ``row(tgt) ≤ row(src)``."""
    cells = model.cells()
    return [(t, s) for t in cells for s in cells if t[0] <= s[0]]


def stabilizer_generators(model: FlagModel, d: int) -> list[Generator]:
    """Those parabolic generators that fix ``ξ_d``: nothing may land on ``e_{n-d+1,1}``."""
    _check_d(d, model.n)
    special = (model.n - d + 1, 1)
    return [E for E in parabolic_generators(model) if E[0] != special]


# ---------------------------------------------------------------------------
# linear maps


LinearRule = Callable[[Key], Mapping[Key, int]]


class LinearMap:
    """A linear map given on basis keys; images are cached."""

    def __init__(self, domain: TruncatedModule, codomain: TruncatedModule, rule: LinearRule, name: str = ""):
        self.domain = domain
        self.codomain = codomain
        self._rule = rule
        self._cache: dict[Key, dict[Key, int]] = {}
        self.name = name

    def image(self, key: Key) -> dict[Key, int]:
        if key not in self._cache:
            self._cache[key] = {k: v for k, v in self._rule(key).items() if v}
        return self._cache[key]

    def apply(self, vec: Mapping[Key, int]) -> dict[Key, int]:
        out: dict[Key, int] = {}
        for key, c in vec.items():
            for k2, v in self.image(key).items():
                nv = out.get(k2, 0) + c * v
                if nv:
                    out[k2] = nv
                else:
                    out.pop(k2, None)
        return out

    def then(self, other: "LinearMap") -> "LinearMap":
        """``other ∘ self``."""
        return LinearMap(self.domain, other.codomain, lambda key: other.apply(self.image(key)), f"{other.name}∘{self.name}")

    def to_triplets(self) -> list[list[int]]:
        dom = list(self.domain.basis())
        cod = {k: i for i, k in enumerate(self.codomain.basis())}
        col = {k: i for i, k in enumerate(dom)}
        # rows index the codomain, columns the domain
        entries = []
        for key in dom:
            for k2, v in self.image(key).items():
                entries.append([cod[k2], col[key], v])
        return sorted(entries)

    def agrees_with(self, other: "LinearMap", keys: Iterable[Key] | None = None) -> bool:
        keys = self.domain.basis() if keys is None else keys
        return all(self.image(k) == other.image(k) for k in keys)


def identity_map(M: TruncatedModule) -> LinearMap:
    return LinearMap(M, M, lambda key: {key: 1}, "id")


def _cells_of(vec: Mapping[Key, int]) -> set[Cell]:
    out = set()
    for mono, t in vec:
        out.update(mono)
        out.update(t)
    return out


def lie_equivariance_check(
    f: LinearMap, generators: Sequence[Generator] | None = None, keys: Iterable[Key] | None = None
) -> bool:
    """``f(E·u) = E·f(u)`` for every generator ``E`` and basis key ``u``.

    Both sides vanish when ``src(E)`` occurs neither in ``u`` nor in ``f(u)``;
    those pairs are skipped.
    """
    return first_equivariance_failure(f, generators, keys) is None


def first_equivariance_failure(
    f: LinearMap, generators: Sequence[Generator] | None = None, keys: Iterable[Key] | None = None
) -> tuple[Generator, Key] | None:
    if generators is None:
        generators = default_generators(f.domain)
    by_src: dict[Cell, list[Generator]] = {}
    for E in generators:
        by_src.setdefault(E[1], []).append(E)
    for key in f.domain.basis() if keys is None else keys:
        fu = f.image(key)
        for src in set(key[0]) | set(key[1]) | _cells_of(fu):
            for E in by_src.get(src, ()):
                lhs = f.apply(f.domain.act(E, key))
                rhs: dict[Key, int] = {}
                for k2, v in fu.items():
                    for k3, w in f.codomain.act(E, k2).items():
                        nv = rhs.get(k3, 0) + v * w
                        if nv:
                            rhs[k3] = nv
                        else:
                            rhs.pop(k3, None)
                if lhs != rhs:
                    return E, key
    return None


def default_generators(M: TruncatedModule) -> list[Generator]:
    if M.kind in ("T", "K"):
        return stabilizer_generators(M.model, M.label[0])
    return parabolic_generators(M.model)


# ---------------------------------------------------------------------------
# f_sigma


def _check_fi(sigma: WeightedInjection) -> None:
    if not isinstance(sigma, WeightedInjection) or not sigma.belongs_to(FI):
        raise ValueError("σ must be a morphism of FI(n)")


def f_sigma_rule(sigma: WeightedInjection) -> LinearRule:
    """``p ⊗ v_1 ⊗ ⋯ ⊗ v_|a|  ↦  p·Π_{y ∉ im σ} x(v_y) ⊗ ⊗_{x ∈ b} v_{σ(x)}``."""
    _check_fi(sigma)
    a = sigma.target
    pos = {y: i for i, y in enumerate(elements(a))}
    matched = [pos[y] for y in sigma.images]
    unmatched = [pos[y] for y in elements(a) if y not in sigma.image()]

    def rule(key: Key) -> dict[Key, int]:
        mono, t = key
        new_mono = tuple(sorted(mono + tuple(t[i] for i in unmatched)))
        return {(new_mono, tuple(t[i] for i in matched)): 1}

    return rule


def build_f_sigma(sigma: WeightedInjection, k: int, D: int) -> LinearMap:
    """``f_σ : Q_a^{≤D} → Q_b^{≤D+|a|-|b|}`` for ``σ : b → a`` in FI(n)."""
    _check_fi(sigma)
    a, b = sigma.target, sigma.source
    if k < max(a + b + (0,)):
        raise ValueError("model too small for σ")
    model = FlagModel(sigma.n, k)
    dom = Q_module(model, a, D)
    cod = Q_module(model, b, D + sum(a) - sum(b))
    return LinearMap(dom, cod, f_sigma_rule(sigma), "f_sigma")


def f_sigma_generator_image(sigma: WeightedInjection) -> Key:
    """``f_σ(v_a)`` as a single basis key of ``Q_b``."""
    return next(iter(f_sigma_rule(sigma)(((), generator_vector(sigma.target))).keys()))


def hom_dim_Q(a: Sequence[int], b: Sequence[int], k: int, D: int) -> int:
    """``dim Hom_A(Q_a, Q_b)`` as the ``λ(a)``-weight space of ``Q_b^{≤D}``."""
    a, b = composition(a), composition(b)
    if len(a) != len(b):
        raise ValueError("arity mismatch")
    if sum(a) < sum(b):
        return 0
    if k < max(a + b + (0,)) + 1:
        raise ValueError(f"k={k} is below the floor max entry + 1 = {max(a + b + (0,)) + 1}")
    if D < sum(a) - sum(b):
        raise ValueError(f"D={D} is below the floor |a|-|b| = {sum(a) - sum(b)}")
    return weight_space_dim(Q_module(FlagModel(len(a), k), b, D), weight_of_tuple(a))


def f_sigma_basis_rank(a: Sequence[int], b: Sequence[int], k: int, D: int) -> tuple[int, int, int]:
    """``(number of σ, rank of their images f_σ(v_a), λ(a)-weight-space dimension)``."""
    a, b = composition(a), composition(b)
    images = [f_sigma_generator_image(s) for s in iter_homs(FI, b, a)]
    ech = RowEchelon()
    for key in images:
        ech.add({key: 1})
    M = Q_module(FlagModel(len(a), k), b, D)
    wsp = set(M.basis_of_weight(weight_of_tuple(a)))
    if not set(images) <= wsp:
        return len(images), -1, len(wsp)
    return len(images), ech.rank, len(wsp)


def tensor_keys(ka: Key, kb: Key, a: Sequence[int], b: Sequence[int]) -> Key:
    """Identify ``Q_a ⊗ Q_b`` with ``Q_{a+b}``: per weight, a's factors then b's."""
    (ma, ta), (mb, tb) = ka, kb
    out = []
    ia = ib = 0
    for w in range(len(a)):
        out.extend(ta[ia : ia + a[w]])
        out.extend(tb[ib : ib + b[w]])
        ia += a[w]
        ib += b[w]
    return (tuple(sorted(ma + mb)), tuple(out))


# ---------------------------------------------------------------------------
# the functor T_d


def _check_cd(d: int, psi: WeightedInjection) -> None:
    if not isinstance(psi, WeightedInjection) or not psi.belongs_to(CategoryFlavor("c", d)):
        raise ValueError(f"not a morphism of C_{d}")


def build_Td_morphism(d: int, psi: WeightedInjection, k: int) -> LinearMap:
    """``T_{d,a} → T_{d,b}`` for a ``C_d`` morphism ``ψ : b → a``.

    The factor of ``ψ(x)`` is sent to the factor of ``x`` by the natural quotient;
    each factor of ``a`` outside the image of ``ψ`` is evaluated by ``ξ_d``.
    """
    _check_d(d, psi.n)
    _check_cd(d, psi)
    b, a = psi.source, psi.target
    model = FlagModel(psi.n, k)
    dom, cod = T_module(model, d, a), T_module(model, d, b)
    pos = {y: i for i, y in enumerate(elements(a))}
    matched = [pos[y] for y in psi.images]
    unmatched = [pos[y] for y in elements(a) if y not in psi.image()]
    special = (psi.n - d + 1, 1)

    def rule(key: Key) -> dict[Key, int]:
        _, t = key
        if any(t[i] != special for i in unmatched):
            return {}
        out = tuple(t[i] for i in matched)
        if all(f.allows(c) for f, c in zip(cod.factors, out)):
            return {((), out): 1}
        return {}

    return LinearMap(dom, cod, rule, "T_d")


def lowering_generators(d: int, a: Sequence[int]) -> list[WeightedInjection]:
    """For each element ``x`` of weight ``i ≥ 2``: the bijection from ``a`` with ``x`` moved to weight ``i-1``."""
    a = composition(a)
    out = []
    for w, p in elements(a):
        if w < 2:
            continue
        b = list(a)
        b[w - 1] -= 1
        b[w - 2] += 1
        b = tuple(b)
        images = []
        for ww, pp in elements(b):
            if ww == w - 1 and pp == b[w - 2]:
                images.append((w, p))
            elif ww == w:
                images.append((w, pp if pp < p else pp + 1))
            else:
                images.append((ww, pp))
        out.append(WeightedInjection(b, a, tuple(images)))
    return out


def dropping_generators(d: int, a: Sequence[int]) -> list[WeightedInjection]:
    """For each element ``x`` of weight ``d``: the inclusion of ``a`` minus ``x``."""
    a = composition(a)
    out = []
    for p in range(1, a[d - 1] + 1):
        b = list(a)
        b[d - 1] -= 1
        b = tuple(b)
        images = [(ww, pp + 1 if ww == d and pp >= p else pp) for ww, pp in elements(b)]
        out.append(WeightedInjection(b, a, tuple(images)))
    return out


def kernel_generators(d: int, a: Sequence[int]) -> list[WeightedInjection]:
    """Non-isomorphisms into ``a`` through which every non-isomorphism factors."""
    return lowering_generators(d, a) + dropping_generators(d, a)


def non_isomorphisms(d: int, a: Sequence[int]) -> list[WeightedInjection]:
    a = composition(a)
    flavor = CategoryFlavor("c", d)
    return [psi for b in inward_objects(d, a) for psi in iter_homs(flavor, b, a) if not psi.is_isomorphism()]


def _joint_kernel_dim(d: int, a: Sequence[int], k: int, morphisms: Sequence[WeightedInjection]) -> int:
    a = composition(a)
    model = FlagModel(len(a), k)
    T = T_module(model, d, a)
    maps = [build_Td_morphism(d, psi, k) for psi in morphisms]
    ech = RowEchelon()
    for key in T.basis():
        column = {}
        for idx, f in enumerate(maps):
            for k2, v in f.image(key).items():
                column[(idx, k2)] = v
        if column:
            ech.add(column)
    return T.dim() - ech.rank


def kernel_intersection_dim(d: int, a: Sequence[int], k: int) -> int:
    """``dim K_{d,a}`` from the lowering and dropping generators."""
    if k < 2:
        raise ValueError("k must be at least 2")
    a = composition(a)
    _check_d(d, len(a))
    return _joint_kernel_dim(d, a, k, kernel_generators(d, a))


def kernel_intersection_dim_all(d: int, a: Sequence[int], k: int) -> int:
    """Same dimension with the intersection taken over every non-isomorphism."""
    a = composition(a)
    _check_d(d, len(a))
    return _joint_kernel_dim(d, a, k, non_isomorphisms(d, a))


def kernel_formula(d: int, a: Sequence[int], k: int) -> int:
    a = composition(a)
    return k ** (sum(a) - a[d - 1]) * (k - 1) ** a[d - 1]


# ---------------------------------------------------------------------------
# Φ_d on presentations


@dataclass(frozen=True)
class Presentation:
    """``F_1 → F_0`` with ``F_0 = ⊕_s A_d ⊗ W_{a_s}``.

    ``relations`` are the images of a basis of generators of ``F_1``, written as
    maps ``(s, mono, tensor) -> coefficient``; ``A_d``-linearity determines the
    rest of the map.
    """

    n: int
    d: int
    k: int
    summands: tuple[tuple[int, ...], ...]
    relations: tuple[tuple[tuple[tuple[int, tuple[Cell, ...], tuple[Cell, ...]], int], ...], ...] = field(default=())

    @classmethod
    def build(cls, n, d, k, summands, relations=()) -> "Presentation":
        summands = tuple(composition(a) for a in summands)
        rels = tuple(tuple(sorted((key, int(v)) for key, v in dict(r).items() if v)) for r in relations)
        return cls(n, d, k, summands, rels)

    def target_basis(self) -> list[tuple[int, tuple[Cell, ...]]]:
        model = FlagModel(self.n, self.k)
        return [(s, t) for s, a in enumerate(self.summands) for t in W_module(model, a).tensors()]


def evaluate_at_xi(d: int, n: int, mono: Sequence[Cell]) -> int:
    """The point ``ξ_d``: ``x_{n-d+1,1} ↦ 1``, every other variable ``↦ 0``."""
    special = (n - d + 1, 1)
    return int(all(c == special for c in mono))


def phi_d_of_presentation(p: Presentation) -> dict:
    """``Φ_d(coker) = F_0/m_d F_0`` modulo the evaluated relations."""
    _check_d(p.d, p.n)
    ech = RowEchelon()
    for rel in p.relations:
        row = {}
        for (s, mono, t), v in rel:
            if any(c[0] <= p.n - p.d for c in mono):
                continue  # zero in A_d
            val = evaluate_at_xi(p.d, p.n, mono)
            if val:
                row[(s, t)] = row.get((s, t), 0) + v * val
        row = {c: v for c, v in row.items() if v}
        if row:
            ech.add(row)
    target = p.target_basis()
    leads = set(ech.pivot_columns)
    return {
        "target_dim": len(target),
        "rank": ech.rank,
        "dim": len(target) - ech.rank,
        "complement": [key for key in target if key not in leads],
    }


def free_presentation(n: int, d: int, k: int, a: Sequence[int]) -> Presentation:
    return Presentation.build(n, d, k, [a])


def redundant_presentation(n: int, d: int, k: int, a: Sequence[int]) -> Presentation:
    """``W ⊕ W`` modulo the second copy."""
    model = FlagModel(n, k)
    rels = [{(1, (), t): 1} for t in W_module(model, a).tensors()]
    return Presentation.build(n, d, k, [a, a], rels)


def torsion_presentation(n: int, d: int, k: int, power: int = 1) -> Presentation:
    """``A_d / (x_{n-d+1,j})^power``, a quotient killed by ``Φ_d``."""
    row = n - d + 1
    cells = [(row, j) for j in range(1, k + 1)]
    rels = [{(0, mono, ()): 1} for mono in combinations_with_replacement(cells, power)]
    return Presentation.build(n, d, k, [(0,) * n], rels)


def principal_relation_presentation(n: int, d: int, k: int, cell: Cell) -> Presentation:
    """``A_d / (x_cell)`` for a single variable."""
    return Presentation.build(n, d, k, [(0,) * n], [{(0, (cell,), ()): 1}])


def f_sigma_presentation(d: int, sigma: WeightedInjection, k: int) -> Presentation:
    """Cokernel of ``A_d ⊗ f_σ : A_d ⊗ W_a → A_d ⊗ W_b``."""
    rule = f_sigma_rule(sigma)
    model = FlagModel(sigma.n, k)
    rels = []
    for t in W_module(model, sigma.target).tensors():
        ((mono, out),) = rule(((), t)).keys()
        rels.append({(0, mono, out): 1})
    return Presentation.build(sigma.n, d, k, [sigma.source], rels)


def f_sigma_cokernel_formula(d: int, sigma: WeightedInjection, k: int) -> int:
    """``dim Φ_d(coker f_σ)`` in closed form.

    The evaluated map is zero when an unmatched element has weight ``> d``;
    otherwise its image is the coordinate subspace ``⊗_x V_{n-wt(σ(x))+1}``.
    """
    n = sigma.n
    b = sigma.source
    full = prod(((n - w + 1) * k) ** b[w - 1] for w in range(1, n + 1))
    unmatched = [y for y in elements(sigma.target) if y not in sigma.image()]
    if any(w > d for w, _ in unmatched):
        return full
    return full - prod((n - y[0] + 1) * k for y in sigma.images)


# ---------------------------------------------------------------------------
# traces of permutations on weight spaces


def cycle_type_weight(mu: Sequence[Sequence[int]]) -> WeightMatrix:
    """Row ``n-i+1`` carries ``|μ^i|`` ones: the multilinear weight read off by FB-factor ``i``."""
    mu = PartitionTuple(mu)
    n = mu.n
    return WeightMatrix.from_cells((n - i, c) for i, s in enumerate(mu.sizes) for c in range(1, s + 1))


def _permutation_of_cycle_type(parts: Sequence[int]) -> dict[int, int]:
    perm = {}
    start = 1
    for part in parts:
        for j in range(part):
            perm[start + j] = start + (j + 1) % part
        start += part
    return perm


def permutation_trace(M: TruncatedModule, mu: Sequence[Sequence[int]]) -> int:
    """Trace of the permutation of cycle type ``μ^i`` on the columns of row ``n-i+1``, restricted to
    the matching multilinear weight space.  Permutations permute basis keys, so the trace counts
    fixed keys."""
    mu = PartitionTuple(mu)
    n = mu.n
    perms = {n - i: _permutation_of_cycle_type(mu[i]) for i in range(n)}

    def move(c: Cell) -> Cell:
        return (c[0], perms[c[0]].get(c[1], c[1]))

    fixed = 0
    for mono, t in M.basis_of_weight(cycle_type_weight(mu)):
        if tuple(sorted(move(c) for c in mono)) == mono and tuple(move(c) for c in t) == t:
            fixed += 1
    return fixed
