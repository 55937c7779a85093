import random

import pytest

from macomplex import (
    InputError,
    NonfaceFamily,
    NotApplicableError,
    SphereModel,
    boundary_simplex,
    classify,
    free_lie_ranks,
    full_subcomplex,
    growth_certificate,
    product_ranks,
    reconstruct,
    wedge_model,
)
from oracles import expand_rank_product, loop_space_series


def nonzero_ranks(series):
    return {k: v for k, v in enumerate(series.ranks) if v}


def test_single_odd_sphere_wedge():
    series = free_lie_ranks(SphereModel("wedge", (3,)), 12)
    assert nonzero_ranks(series) == {2: 1}


def test_single_even_sphere_wedge():
    # one even sphere: the generator and its self-bracket, nothing else
    series = free_lie_ranks(SphereModel("wedge", (4,)), 12)
    assert nonzero_ranks(series) == {3: 1, 6: 1}


def test_two_three_spheres():
    series = free_lie_ranks(SphereModel("wedge", (3, 3)), 8)
    assert series.rank(2) == 2 and series.rank(4) == 1 and series.rank(6) == 2


def test_mixed_wedge_recursion():
    series = free_lie_ranks(SphereModel("wedge", (3, 4)), 10)
    assert series.rank(2) == 1 and series.rank(3) == 1
    assert series.rank(4) == 0  # degree 4 is only reachable as a square
    expanded = expand_rank_product(series.ranks, 10)
    assert expanded == loop_space_series((3, 4), 10)


def test_recursion_consistency_random_wedges():
    rng = random.Random(30)
    for _ in range(20):
        dims = tuple(sorted(rng.randint(3, 7) for _ in range(rng.randint(1, 4))))
        N = rng.randint(8, 16)
        series = free_lie_ranks(SphereModel("wedge", dims), N)
        assert expand_rank_product(series.ranks, N) == loop_space_series(dims, N)
        assert all(r >= 0 for r in series.ranks)


def test_monotone_under_added_spheres():
    rng = random.Random(31)
    for _ in range(15):
        dims = sorted(rng.randint(3, 6) for _ in range(rng.randint(1, 3)))
        extra = rng.randint(3, 6)
        small = free_lie_ranks(SphereModel("wedge", tuple(dims)), 14)
        large = free_lie_ranks(SphereModel("wedge", tuple(sorted(dims + [extra]))), 14)
        assert all(a <= b for a, b in zip(small.ranks, large.ranks))


def test_product_ranks_examples():
    series = product_ranks(SphereModel("product", (3, 3)), 20)
    assert nonzero_ranks(series) == {2: 2}
    assert sum(series.ranks) == 2
    series = product_ranks(SphereModel("product", (5,)), 20)
    assert nonzero_ranks(series) == {4: 1}
    series = product_ranks(SphereModel("product", ()), 20)
    assert nonzero_ranks(series) == {}


def test_product_ranks_rejects_even_spheres():
    with pytest.raises(InputError):
        product_ranks(SphereModel("product", (4,)), 20)


def test_growth_certificate_examples():
    finite = growth_certificate(product_ranks(SphereModel("product", (3, 3)), 20))
    assert finite.kind == "finite" and finite.ratio is None

    single = growth_certificate(free_lie_ranks(SphereModel("wedge", (3,)), 20))
    assert single.kind == "finite"

    double = growth_certificate(free_lie_ranks(SphereModel("wedge", (3, 3)), 20))
    assert double.kind == "exponential"
    assert double.ratio is not None and double.ratio > 1.05

    with pytest.raises(InputError):
        growth_certificate(free_lie_ranks(SphereModel("wedge", (3, 3)), 8))


def test_growth_ratio_matches_closed_form():
    # loop homology of a two-sphere wedge doubles every second degree
    series = free_lie_ranks(SphereModel("wedge", (3, 3)), 24)
    sums = series.partial_sums()
    assert sums[24] > 2 * sums[12] > 2
    cert = growth_certificate(series)
    assert 1.2 < cert.ratio < 1.5


def test_two_equal_generators_match_necklace_counts():
    # two generators of the same even degree: the rank in degree 2j is the
    # number of binary necklaces of length j, (1/j) sum_{d|j} mu(d) 2^(j/d)
    from sympy import divisors
    from sympy.functions.combinatorial.numbers import mobius

    series = free_lie_ranks(SphereModel("wedge", (3, 3)), 24)
    for j in range(1, 13):
        necklaces = sum(mobius(d) * 2 ** (j // d) for d in divisors(j)) // j
        assert series.rank(2 * j) == necklaces
        assert series.rank(2 * j - 1) == 0


def test_wedge_model_of_c5_witness(c5):
    verdict = classify(c5)
    witness = full_subcomplex(c5, verdict.witness_vertices)
    model = wedge_model(witness)
    assert model.kind == "wedge"
    assert model.dims == (3, 3, 4)


def test_wedge_model_two_points():
    model = wedge_model(boundary_simplex(1))
    assert model.dims == (3,)


def test_wedge_model_path_complex():
    K = reconstruct(NonfaceFamily(3, [[1, 2], [2, 3]]))
    model = wedge_model(K)
    assert len(model.dims) >= 2
    assert model.dims == (3, 3, 4)


def test_wedge_model_requires_trivial_ring(c4):
    with pytest.raises(NotApplicableError):
        wedge_model(c4)


def test_free_lie_ranks_input_validation():
    with pytest.raises(InputError):
        free_lie_ranks(SphereModel("wedge", ()), 10)
    with pytest.raises(InputError):
        free_lie_ranks(SphereModel("product", (3,)), 10)
    with pytest.raises(InputError):
        free_lie_ranks(SphereModel("wedge", (2,)), 10)
