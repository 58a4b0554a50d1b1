import pytest

from parabolic.categories import FI, CategoryFlavor, WeightedInjection, compose, disjoint_union, enumerate_homs, hom_count
from parabolic.flagmodel import (
    FlagModel,
    LinearMap,
    Q_module,
    T_module,
    W_module,
    WeightMatrix,
    build_f_sigma,
    build_Td_morphism,
    f_sigma_basis_rank,
    f_sigma_cokernel_formula,
    f_sigma_presentation,
    free_presentation,
    generator_vector,
    hom_dim_Q,
    identity_map,
    kernel_formula,
    kernel_intersection_dim,
    kernel_intersection_dim_all,
    lie_equivariance_check,
    parabolic_generators,
    phi_d_of_presentation,
    principal_relation_presentation,
    redundant_presentation,
    tensor_keys,
    torsion_presentation,
    weight_of_tuple,
    weight_space_dim,
)
from parabolic.partitions import compositions_upto


def test_weight_of_tuple_and_generator():
    assert weight_of_tuple((0, 1, 2)).to_matrix(3, 2) == [[1, 1], [1, 0], [0, 0]]
    assert generator_vector((0, 1, 2)) == ((2, 1), (1, 1), (1, 2))
    assert WeightMatrix.from_cells(generator_vector((2, 1))) == weight_of_tuple((2, 1))


def test_weight_space_examples():
    assert weight_space_dim(W_module(FlagModel(1, 2), (2,)), weight_of_tuple((2,))) == 2
    assert weight_space_dim(W_module(FlagModel(1, 2), (1,)), weight_of_tuple((2,))) == 0
    assert weight_space_dim(Q_module(FlagModel(1, 2), (0,), 1), weight_of_tuple((1,))) == 1


def test_weight_spaces_partition_the_basis():
    M = Q_module(FlagModel(2, 2), (1, 1), 2)
    from collections import Counter

    counts = Counter(M.weight(key) for key in M.basis())
    assert sum(counts.values()) == M.dim()
    for w, c in counts.items():
        assert weight_space_dim(M, w) == c


@pytest.mark.parametrize(
    "a, b, expected",
    [((1,), (0,), 1), ((2,), (2,), 2), ((1, 2), (1, 2), 2), ((1, 0), (0, 1), 0), ((0, 1), (1, 0), 1), ((1, 1), (2, 0), 2)],
)
def test_hom_dim_Q_examples(a, b, expected):
    k = max(a + b) + 1
    assert hom_dim_Q(a, b, k, sum(a)) == expected


def test_hom_dim_Q_matches_hom_count():
    for n in (1, 2):
        for a in compositions_upto(n, 3):
            for b in compositions_upto(n, 3):
                k = max(a + b) + 1
                assert hom_dim_Q(a, b, k, sum(a)) == hom_count(FI, b, a)


def test_hom_dim_Q_floors():
    with pytest.raises(ValueError):
        hom_dim_Q((2,), (1,), 2, 1)  # k below max entry + 1
    with pytest.raises(ValueError):
        hom_dim_Q((2,), (0,), 3, 1)  # D below |a| - |b|


def test_f_sigma_images_form_a_basis():
    for a in compositions_upto(2, 3):
        for b in compositions_upto(2, 3):
            if sum(b) > sum(a):
                continue
            count, rk, wsp = f_sigma_basis_rank(a, b, max(a + b) + 1, sum(a))
            assert count == rk == wsp


def test_f_sigma_worked_example():
    # b = (1,1,0) -> a = (0,1,2): weight-1 element to the weight-2 element, weight-2 element to the second weight-3 one
    sigma = WeightedInjection((1, 1, 0), (0, 1, 2), ((2, 1), (3, 2)))
    f = build_f_sigma(sigma, 3, 0)
    src = ((), ((2, 1), (1, 1), (1, 2)))
    assert f.image(src) == {(((1, 1),), ((2, 1), (1, 2))): 1}
    assert f.image(((), generator_vector((0, 1, 2)))) == {(((1, 1),), ((2, 1), (1, 2))): 1}


def test_f_sigma_identity_and_rejects_non_fi():
    f = build_f_sigma(WeightedInjection.identity((1, 1)), 2, 1)
    assert f.agrees_with(identity_map(f.domain))
    tau = WeightedInjection((1, 0), (2, 0), ((1, 2),))
    assert tau.belongs_to(FI)
    with pytest.raises(ValueError):
        build_f_sigma("not a map", 2, 0)


def test_f_sigma_functorial_and_monoidal():
    objs = compositions_upto(2, 2)
    for a in objs:
        for b in objs:
            for c in objs:
                for sigma in enumerate_homs(FI, b, a):
                    for pi in enumerate_homs(FI, c, b):
                        f_s = build_f_sigma(sigma, 3, 1)
                        f_p = build_f_sigma(pi, 3, 1 + sum(a) - sum(b))
                        assert f_s.then(f_p).agrees_with(build_f_sigma(compose(sigma, pi), 3, 1))
    s1 = enumerate_homs(FI, (1, 0), (1, 1))[0]
    s2 = enumerate_homs(FI, (0, 0), (0, 1))[0]
    union = build_f_sigma(disjoint_union(s1, s2), 3, 0)
    f1, f2 = build_f_sigma(s1, 3, 0), build_f_sigma(s2, 3, 0)
    for k1 in f1.domain.basis():
        for k2 in f2.domain.basis():
            ((i1, _),) = f1.image(k1).items()
            ((i2, _),) = f2.image(k2).items()
            assert union.image(tensor_keys(k1, k2, (1, 1), (0, 1))) == {tensor_keys(i1, i2, (1, 0), (0, 0)): 1}


def test_equivariance_check():
    M = Q_module(FlagModel(2, 2), (1, 0), 1)
    assert lie_equivariance_check(identity_map(M))
    for sigma in enumerate_homs(FI, (1, 0), (1, 1)):
        assert lie_equivariance_check(build_f_sigma(sigma, 2, 0))
    V = W_module(FlagModel(1, 2), (1,))
    swap = LinearMap(V, V, lambda key: {((), ((1, 2),)): 1} if key[1] == ((1, 1),) else {})
    assert not lie_equivariance_check(swap, parabolic_generators(V.model))


def test_Td_worked_example():
    # n = d = 3, b = (1,2,0) -> a = (0,2,2) in C_3; the second weight-3 element is unmatched
    psi = WeightedInjection((1, 2, 0), (0, 2, 2), ((2, 1), (2, 2), (3, 1)))
    assert psi.belongs_to(CategoryFlavor("c", 3))
    f = build_Td_morphism(3, psi, 3)
    assert [(fac.lo, fac.hi) for fac in f.domain.factors] == [(2, 3), (2, 3), (1, 3), (1, 3)]
    assert [(fac.lo, fac.hi) for fac in f.codomain.factors] == [(3, 3), (2, 3), (2, 3)]
    assert f.image(((), ((3, 1), (2, 2), (2, 3), (1, 1)))) == {((), ((3, 1), (2, 2), (2, 3))): 1}
    assert f.image(((), ((3, 1), (2, 2), (2, 3), (1, 2)))) == {}  # ξ_3 kills e_12
    assert f.image(((), ((2, 1), (2, 2), (2, 3), (1, 1)))) == {}  # V/V_1 -> V/V_2 kills row 2
    assert f.image(((), ((3, 1), (2, 2), (1, 3), (1, 1)))) == {}  # V -> V/V_1 kills row 1
    assert lie_equivariance_check(f)


def test_Td_identity_and_functoriality():
    d, k = 2, 2
    assert build_Td_morphism(d, WeightedInjection.identity((1, 1)), k).agrees_with(identity_map(T_module(FlagModel(2, k), d, (1, 1))))
    flavor = CategoryFlavor("c", d)
    objs = compositions_upto(2, 2)
    for a in objs:
        for b in objs:
            for c in objs:
                for psi in enumerate_homs(flavor, b, a):
                    for chi in enumerate_homs(flavor, c, b):
                        lhs = build_Td_morphism(d, psi, k).then(build_Td_morphism(d, chi, k))
                        assert lhs.agrees_with(build_Td_morphism(d, compose(psi, chi), k))


@pytest.mark.parametrize(
    "d, a, k, expected",
    [(1, (0,), 3, 1), (1, (1,), 3, 2), (2, (1, 1), 3, 6), (1, (2, 1), 2, 2), (2, (1, 2), 3, 12)],
)
def test_kernel_examples(d, a, k, expected):
    assert kernel_intersection_dim(d, a, k) == expected == kernel_formula(d, a, k)


def test_kernel_generators_match_all_non_isomorphisms():
    for n in (1, 2):
        for d in range(1, n + 1):
            for a in compositions_upto(n, 2):
                assert kernel_intersection_dim(d, a, 2) == kernel_intersection_dim_all(d, a, 2)


def test_phi_d_examples():
    for n, d, a in [(1, 1, (1,)), (2, 1, (1, 1)), (2, 2, (0, 2))]:
        dimV = W_module(FlagModel(n, 2), a).dim()
        assert phi_d_of_presentation(free_presentation(n, d, 2, a))["dim"] == dimV
        assert phi_d_of_presentation(redundant_presentation(n, d, 2, a))["dim"] == dimV
    assert phi_d_of_presentation(torsion_presentation(2, 1, 2))["dim"] == 0
    assert phi_d_of_presentation(torsion_presentation(2, 2, 2, 2))["dim"] == 0
    # x_{22} does not vanish at the point but is zero in the quotient ring data: only x_{n-d+1,1} survives
    assert phi_d_of_presentation(principal_relation_presentation(2, 1, 2, (2, 2)))["dim"] == 1
    assert phi_d_of_presentation(principal_relation_presentation(2, 1, 2, (2, 1)))["dim"] == 0


def test_phi_d_of_f_sigma_cokernels():
    for d in (1, 2):
        for a in compositions_upto(2, 2):
            for b in compositions_upto(2, 2):
                for sigma in enumerate_homs(FI, b, a):
                    got = phi_d_of_presentation(f_sigma_presentation(d, sigma, 2))["dim"]
                    assert got == f_sigma_cokernel_formula(d, sigma, 2)
