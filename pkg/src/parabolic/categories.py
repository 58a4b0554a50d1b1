"""The categories FB(n), FB^⊗n, FI(n) and C_d of [n]-weighted finite sets.

Objects are skeletal: the tuple ``a = (a_1, ..., a_n)`` stands for the weighted
set whose weight-i elements are ``(i, 1), ..., (i, a_i)``.  Elements are always
listed weight-major, index-minor; that order fixes both the tensor-factor order
used by the flag model and the lexicographic enumeration order of morphisms.

A morphism stores, for each source element in that order, its image.  Weights
never decrease along a morphism.  ``C_d`` morphisms are moreover onto the
target elements of weight ``< d``; ``FI(n)`` is ``C_1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence

from .partitions import composition, compositions_upto, dominance_leq, reverse

Element = tuple[int, int]


def elements(a: Sequence[int]) -> list[Element]:
    """Elements ``(weight, index)`` of the weighted set ``a``, both 1-based."""
    return [(i + 1, p + 1) for i, ai in enumerate(a) for p in range(ai)]


def element_position(a: Sequence[int], x: Element) -> int:
    """0-based position of element ``x`` in the canonical listing of ``a``."""
    w, p = x
    if not (1 <= w <= len(a) and 1 <= p <= a[w - 1]):
        raise ValueError(f"{x} is not an element of {tuple(a)}")
    return sum(a[: w - 1]) + p - 1


@dataclass(frozen=True)
class CategoryFlavor:
    """One of ``fb`` (FB(n)), ``fbt`` (FB^⊗n) or ``c`` (C_d; FI(n) is ``c`` with d=1)."""

    kind: str
    d: int = 1

    def __post_init__(self):
        if self.kind not in ("fb", "fbt", "c"):
            raise ValueError(f"unknown category kind {self.kind!r}")
        if self.d < 1:
            raise ValueError("d must be at least 1")

    @classmethod
    def parse(cls, name: str, d: int | None = None) -> "CategoryFlavor":
        name = name.lower()
        if name == "fi":
            return FI
        if name == "fb":
            return FB
        if name in ("fbt", "fb-tensor"):
            return FBT
        if name in ("c", "cd"):
            return cls("c", d or 1)
        if name.startswith("c") and name[1:].isdigit():
            return cls("c", int(name[1:]))
        raise ValueError(f"unknown category {name!r}")

    def check_arity(self, n: int) -> None:
        if self.kind == "c" and self.d > n:
            raise ValueError(f"C_d needs d in [n]; got d={self.d}, n={n}")

    def __str__(self) -> str:
        if self.kind == "c":
            return "FI(n)" if self.d == 1 else f"C_{self.d}"
        return {"fb": "FB(n)", "fbt": "FB^n"}[self.kind]


FI = CategoryFlavor("c", 1)
FB = CategoryFlavor("fb")
FBT = CategoryFlavor("fbt")


@dataclass(frozen=True)
class WeightedInjection:
    """A weight-non-decreasing injection ``source -> target``."""

    source: tuple[int, ...]
    target: tuple[int, ...]
    images: tuple[Element, ...]

    def __post_init__(self):
        src, tgt = composition(self.source), composition(self.target)
        object.__setattr__(self, "source", src)
        object.__setattr__(self, "target", tgt)
        object.__setattr__(self, "images", tuple(tuple(x) for x in self.images))
        if len(src) != len(tgt):
            raise ValueError("source and target have different arity")
        if len(self.images) != sum(src):
            raise ValueError("one image per source element is required")
        seen = set()
        for x, y in zip(elements(src), self.images):
            element_position(tgt, y)
            if y in seen:
                raise ValueError(f"not injective: {y} hit twice")
            if y[0] < x[0]:
                raise ValueError(f"weight decreases: {x} -> {y}")
            seen.add(y)

    @property
    def n(self) -> int:
        return len(self.source)

    def __call__(self, x: Element) -> Element:
        return self.images[element_position(self.source, x)]

    def mapping(self) -> dict[Element, Element]:
        return dict(zip(elements(self.source), self.images))

    def image(self) -> set[Element]:
        return set(self.images)

    def is_bijection(self) -> bool:
        return sum(self.source) == sum(self.target)

    def is_weight_preserving(self) -> bool:
        return all(x[0] == y[0] for x, y in zip(elements(self.source), self.images))

    def is_isomorphism(self) -> bool:
        return self.is_bijection() and self.is_weight_preserving()

    def belongs_to(self, flavor: CategoryFlavor) -> bool:
        if flavor.kind == "fb":
            return self.is_bijection()
        if flavor.kind == "fbt":
            return self.is_isomorphism()
        hit = self.image()
        return all(y in hit for y in elements(self.target) if y[0] < flavor.d)

    @classmethod
    def identity(cls, a: Sequence[int]) -> "WeightedInjection":
        a = composition(a)
        return cls(a, a, tuple(elements(a)))

    def to_json(self) -> list[list[int]]:
        return [[x[0], x[1], y[0], y[1]] for x, y in zip(elements(self.source), self.images)]

    @classmethod
    def from_json(cls, source, target, quads) -> "WeightedInjection":
        table = {(q[0], q[1]): (q[2], q[3]) for q in quads}
        return cls(tuple(source), tuple(target), tuple(table[x] for x in elements(source)))


def compose(g: WeightedInjection, f: WeightedInjection) -> WeightedInjection:
    """``g ∘ f`` for ``f: x -> y`` and ``g: y -> z``."""
    if f.target != g.source:
        raise ValueError(f"not composable: target {f.target} != source {g.source}")
    return WeightedInjection(f.source, g.target, tuple(g(y) for y in f.images))


def disjoint_union(f: WeightedInjection, g: WeightedInjection) -> WeightedInjection:
    """``f ⊔ g : a+b -> c+d`` with the weight-i elements of ``a+b`` listed as a's then b's."""
    if f.n != g.n:
        raise ValueError("arity mismatch")
    src = tuple(x + y for x, y in zip(f.source, g.source))
    tgt = tuple(x + y for x, y in zip(f.target, g.target))

    fmap, gmap = f.mapping(), g.mapping()
    images = []
    for w, p in elements(src):
        if p <= f.source[w - 1]:
            images.append(fmap[(w, p)])
        else:
            y = gmap[(w, p - f.source[w - 1])]
            images.append((y[0], f.target[y[0] - 1] + y[1]))
    return WeightedInjection(src, tgt, tuple(images))


def _check_pair(flavor: CategoryFlavor, b: Sequence[int], a: Sequence[int]):
    b, a = composition(b), composition(a)
    if len(a) != len(b):
        raise ValueError(f"arity mismatch: {b} vs {a}")
    flavor.check_arity(len(a))
    return b, a


def iter_homs(flavor: CategoryFlavor, b: Sequence[int], a: Sequence[int]) -> Iterator[WeightedInjection]:
    """Morphisms ``b -> a`` in lexicographic order of their image lists."""
    b, a = _check_pair(flavor, b, a)
    src = elements(b)
    tgt = elements(a)
    if flavor.kind in ("fb", "fbt") and len(src) != len(tgt):
        return
    if len(src) > len(tgt):
        return
    must_cover = set()
    if flavor.kind == "c":
        must_cover = {y for y in tgt if y[0] < flavor.d}
    elif flavor.kind in ("fb", "fbt"):
        must_cover = set(tgt)
    used: set[Element] = set()
    chosen: list[Element] = []

    def rec(idx: int, uncovered: int):
        if uncovered > len(src) - idx:
            return
        if idx == len(src):
            yield WeightedInjection(b, a, tuple(chosen))
            return
        w = src[idx][0]
        for y in tgt:
            if y in used or y[0] < w:
                continue
            if flavor.kind == "fbt" and y[0] != w:
                continue
            used.add(y)
            chosen.append(y)
            yield from rec(idx + 1, uncovered - (y in must_cover))
            chosen.pop()
            used.discard(y)

    yield from rec(0, len(must_cover))


def enumerate_homs(flavor: CategoryFlavor, b: Sequence[int], a: Sequence[int]) -> list[WeightedInjection]:
    return list(iter_homs(flavor, b, a))


def fi_hom_count(b: Sequence[int], a: Sequence[int]) -> int:
    """Closed-form ``|Hom_FI(n)(b, a)|``: place heaviest elements first."""
    b, a = _check_pair(FI, b, a)
    count = 1
    free = 0
    for i in range(len(a) - 1, -1, -1):
        free += a[i]
        if b[i] > free:
            return 0
        count *= factorial(free) // factorial(free - b[i])
        free -= b[i]
    return count


@lru_cache(maxsize=None)
def _hom_count(flavor: CategoryFlavor, b: tuple[int, ...], a: tuple[int, ...]) -> int:
    if flavor == FI:
        return fi_hom_count(b, a)
    if flavor == FBT:
        return prod(factorial(x) for x in a) if a == b else 0
    return sum(1 for _ in iter_homs(flavor, b, a))


def hom_count(flavor: CategoryFlavor, b: Sequence[int], a: Sequence[int]) -> int:
    b, a = _check_pair(flavor, b, a)
    return _hom_count(flavor, b, a)


def hom_exists(flavor: CategoryFlavor, b: Sequence[int], a: Sequence[int]) -> bool:
    """Whether ``Hom(b, a)`` is nonempty.

    FI(n): ``τ(b) ≤ τ(a)`` in dominance order.  FB(n): additionally ``|b| = |a|``
    (the dominance condition is then Hall's matching condition).  FB^⊗n: ``b = a``.
    C_d: decided by searching for one morphism.
    """
    b, a = _check_pair(flavor, b, a)
    if flavor == FI:
        return dominance_leq(reverse(b), reverse(a))
    if flavor.kind == "fb":
        return sum(a) == sum(b) and dominance_leq(reverse(b), reverse(a))
    if flavor.kind == "fbt":
        return a == b
    return next(iter_homs(flavor, b, a), None) is not None


def automorphism_count(a: Sequence[int]) -> int:
    """``|S_a| = Π a_i!``."""
    return prod(factorial(x) for x in a)


def inward_objects(d: int, a: Sequence[int]) -> list[tuple[int, ...]]:
    """Objects ``b`` (sorted) with ``Hom_{C_d}(b, a)`` nonempty.

    Any morphism into ``a`` is injective, so ``|b| ≤ |a|``; that bounds the search.
    """
    a = composition(a)
    flavor = CategoryFlavor("c", d)
    flavor.check_arity(len(a))
    return sorted(b for b in compositions_upto(len(a), sum(a)) if hom_exists(flavor, b, a))
