import pytest
from hypothesis import given
from hypothesis import strategies as st

from parabolic.categories import (
    FB,
    FBT,
    FI,
    CategoryFlavor,
    WeightedInjection,
    compose,
    disjoint_union,
    elements,
    enumerate_homs,
    hom_count,
    hom_exists,
    inward_objects,
)
from parabolic.partitions import compositions_upto, dominance_leq, reverse


def brute_force_homs(flavor, b, a):
    """All maps of element lists, filtered by the defining conditions."""
    from itertools import permutations

    src, tgt = elements(b), elements(a)
    out = []
    for imgs in permutations(tgt, len(src)):
        if any(y[0] < x[0] for x, y in zip(src, imgs)):
            continue
        f = WeightedInjection(b, a, imgs)
        if f.belongs_to(flavor):
            out.append(f)
    return out


def test_hom_count_examples():
    assert hom_count(FI, (2, 0), (1, 1)) == 2
    assert hom_count(FI, (0, 0, 0), (1, 2, 0)) == 1
    assert hom_count(FB, (2,), (2,)) == 2
    assert hom_count(FI, (0, 1), (1, 0)) == 0


@pytest.mark.parametrize(
    "b, a, expected",
    [((0, 1), (1, 0), False), ((1, 1), (1, 1), True), ((2, 0), (1, 1), True)],
)
def test_hom_exists_examples(b, a, expected):
    assert hom_exists(FI, b, a) is expected


@pytest.mark.parametrize("flavor", [FI, FB, FBT, CategoryFlavor("c", 2)])
def test_enumeration_matches_brute_force(flavor):
    for a in compositions_upto(2, 3):
        for b in compositions_upto(2, 3):
            fast = sorted(f.images for f in enumerate_homs(flavor, b, a))
            slow = sorted(f.images for f in brute_force_homs(flavor, b, a))
            assert fast == slow
            assert hom_count(flavor, b, a) == len(slow)


def test_dominance_criterion():
    # a morphism b -> a exists iff the reversed tuples satisfy prefix dominance
    for n in (1, 2, 3):
        for a in compositions_upto(n, 3):
            for b in compositions_upto(n, 3):
                assert hom_exists(FI, b, a) == dominance_leq(reverse(b), reverse(a))


def test_identity_and_associativity():
    a, b, c = (1, 1), (1, 0), (0, 1)
    for h in enumerate_homs(FI, c, b):
        for g in enumerate_homs(FI, b, a):
            assert compose(WeightedInjection.identity(a), g) == g
            assert compose(g, WeightedInjection.identity(b)) == g
    objs = compositions_upto(2, 2)
    for x in objs:
        for y in objs:
            for z in objs:
                for w in objs:
                    for f in enumerate_homs(FI, x, y):
                        for g in enumerate_homs(FI, y, z):
                            for h in enumerate_homs(FI, z, w):
                                assert compose(h, compose(g, f)) == compose(compose(h, g), f)


def test_compose_rejects_mismatch():
    f = WeightedInjection.identity((1, 0))
    g = WeightedInjection.identity((0, 1))
    with pytest.raises(ValueError):
        compose(g, f)


@given(st.sampled_from(compositions_upto(2, 2)), st.sampled_from(compositions_upto(2, 2)))
def test_disjoint_union_of_identities(a, b):
    u = disjoint_union(WeightedInjection.identity(a), WeightedInjection.identity(b))
    assert u.is_isomorphism()
    assert u.source == tuple(x + y for x, y in zip(a, b))


def test_invalid_maps_raise():
    with pytest.raises(ValueError):
        WeightedInjection((0, 1), (1, 0), ((1, 1),))  # weight decreases
    with pytest.raises(ValueError):
        WeightedInjection((2,), (2,), ((1, 1), (1, 1)))  # not injective
    with pytest.raises(ValueError):
        CategoryFlavor.parse("c3").check_arity(2)


@pytest.mark.parametrize(
    "d, a, expected",
    [(1, (0,), {(0,)}), (1, (2,), {(0,), (1,), (2,)}), (2, (1, 0), {(1, 0)}), (2, (0, 0), {(0, 0)})],
)
def test_inward_objects(d, a, expected):
    assert set(inward_objects(d, a)) == expected


def test_inward_objects_match_hom_search():
    for n in (1, 2, 3):
        for d in range(1, n + 1):
            flavor = CategoryFlavor("c", d)
            for a in compositions_upto(n, 3):
                found = {b for b in compositions_upto(n, sum(a)) if hom_exists(flavor, b, a)}
                assert set(inward_objects(d, a)) == found


def test_json_roundtrip():
    for f in enumerate_homs(FI, (1, 1), (1, 2)):
        assert WeightedInjection.from_json(f.source, f.target, f.to_json()) == f
