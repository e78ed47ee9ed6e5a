from random import Random

import pytest

from tck.betti_monomial import (
    betti_numbers,
    betti_numbers_taylor,
    check_theorem_bounds,
    cyclic_polytope_face_count,
    euler_check,
    initial_ideal,
    k_ab_threshold,
)
from tck.errors import NotGroebner, TooManyGenerators, Unsupported
from tck.semigroup_core import Binomial, compute_structure, mdivides, validate_semigroup
from tck.tangent_cone import Generator, GeneratorSet, tangent_cone_generators


def _gs(*triple):
    S = validate_semigroup(*triple)
    return S, tangent_cone_generators(S, compute_structure(S))


def test_betti_pinned_small_ideals():
    t = betti_numbers([(0, 2, 0), (0, 0, 10)])
    assert (t.beta0, t.beta1, t.beta2) == (2, 1, 0)
    t = betti_numbers([(0, 0, 3), (0, 3, 1), (0, 7, 0)])
    assert (t.beta0, t.beta1, t.beta2) == (3, 2, 0)
    # three pairwise-incomparable pure powers resolve like the Koszul complex
    t = betti_numbers([(2, 0, 0), (0, 2, 0), (0, 0, 2)])
    assert (t.beta0, t.beta1, t.beta2) == (3, 3, 1)
    assert betti_numbers([]) == betti_numbers_taylor([])
    t = betti_numbers([(0, 0, 1)])
    assert (t.beta0, t.beta1, t.beta2) == (1, 0, 0)


def test_betti_pinned_worked_example_initial_ideals():
    ideal_265 = [
        (0, 1, 2), (1, 0, 9), (0, 0, 11), (7, 0, 7), (13, 0, 5),
        (19, 0, 3), (0, 26, 0),
    ]
    t = betti_numbers(ideal_265)
    assert (t.beta0, t.beta1, t.beta2) == (7, 10, 4)
    ideal_332 = [
        (0, 0, 23), (0, 4, 8), (0, 42, 1), (0, 80, 0), (15, 0, 15), (30, 0, 7),
    ]
    t = betti_numbers(ideal_332)
    assert (t.beta0, t.beta1, t.beta2) == (6, 8, 3)


def test_betti_rejects_non_minimal_input():
    with pytest.raises(ValueError):
        betti_numbers([(0, 2, 0), (0, 4, 0)])
    with pytest.raises(ValueError):
        betti_numbers_taylor([(1, 0, 0), (1, 1, 0)])


def test_betti_generator_caps():
    fan = [(i, 70 - i, 0) for i in range(65)]
    with pytest.raises(TooManyGenerators):
        betti_numbers(fan)
    with pytest.raises(TooManyGenerators):
        betti_numbers_taylor([(i, 20 - i, 0) for i in range(13)])


def _random_minimal_ideal(rng, max_gens=8, max_exp=7):
    pool = set()
    while len(pool) < rng.randrange(2, max_gens + 1):
        m = (rng.randrange(0, max_exp), rng.randrange(0, max_exp), rng.randrange(0, max_exp))
        if m != (0, 0, 0):
            pool.add(m)
    return [m for m in pool if not any(o != m and mdivides(o, m) for o in pool)]


def test_koszul_agrees_with_taylor_reference():
    rng = Random(99)
    checked = 0
    for _ in range(250):
        gens = _random_minimal_ideal(rng)
        if len(gens) < 2:
            continue
        k = betti_numbers(gens, graded=True)
        t = betti_numbers_taylor(gens)
        assert (k.beta0, k.beta1, k.beta2) == (t.beta0, t.beta1, t.beta2), gens
        assert sorted(k.graded) == sorted(t.graded), gens
        checked += 1
    assert checked > 150


def test_taylor_rank_is_characteristic_free_here():
    rng = Random(100)
    for _ in range(60):
        gens = _random_minimal_ideal(rng, max_gens=6)
        if len(gens) < 2:
            continue
        t0 = betti_numbers_taylor(gens)
        tp = betti_numbers_taylor(gens, prime=65537)
        assert (t0.beta0, t0.beta1, t0.beta2) == (tp.beta0, tp.beta1, tp.beta2), gens


def test_euler_alternating_sums():
    assert euler_check([(0, 2, 0), (0, 0, 10)])["ok"]
    rng = Random(12)
    for _ in range(40):
        gens = _random_minimal_ideal(rng, max_gens=7)
        if len(gens) < 2:
            continue
        report = euler_check(gens)
        assert report["ok"], (gens, report["mismatches"])


def test_initial_ideal_golden():
    S, gs = _gs(160, 163, 170)
    assert sorted(initial_ideal(gs)) == [(0, 0, 16), (0, 10, 0)]
    S, gs = _gs(265, 280, 655)
    assert sorted(initial_ideal(gs)) == [
        (0, 0, 11), (0, 1, 2), (0, 26, 0), (1, 0, 9), (7, 0, 7),
        (13, 0, 5), (19, 0, 3),
    ]
    # pure monomial sets pass through unchanged
    S, gs = _gs(13, 20, 31)
    assert sorted(initial_ideal(gs)) == [(0, 0, 3), (0, 3, 1), (0, 7, 0)]


def test_initial_ideal_rejects_non_basis():
    fake = GeneratorSet(
        case_tag="NCI_EQ",
        generators=(
            Generator(form=Binomial((0, 3, 0), (2, 0, 1)), label="H",
                      coeffs=(0, 1), witness=(-2, 3, -1)),
            Generator(form=(0, 1, 2), label="YRZ", coeffs=(1, 0), witness=(0, 1, 2)),
        ),
    )
    with pytest.raises(NotGroebner):
        initial_ideal(fake)


def test_cyclic_polytope_face_counts():
    assert cyclic_polytope_face_count(1, 3, 7) == 15
    assert cyclic_polytope_face_count(2, 3, 7) == 10
    assert cyclic_polytope_face_count(1, 3, 3) == 3
    assert cyclic_polytope_face_count(0, 3, 5) == 5
    with pytest.raises(Unsupported):
        cyclic_polytope_face_count(1, 4, 7)
    with pytest.raises(Unsupported):
        cyclic_polytope_face_count(3, 3, 7)


def test_check_theorem_bounds_reports():
    S, gs = _gs(13, 20, 31)
    report = check_theorem_bounds(S, gs)
    assert report["ok"]
    assert (report["beta0"], report["beta1"], report["beta2"]) == (3, 2, 0)
    names = {c["name"]: c for c in report["checks"]}
    assert names["beta0_le_width_plus_1"]["limit"] == 13
    assert names["beta1_le_3_width_minus_3"]["limit"] == 33
    assert names["beta2_le_2_width_minus_3"]["limit"] == 21
    assert names["beta1_le_cyclic_edges"]["limit"] == 3
    assert names["beta2_le_cyclic_facets_minus_1"]["limit"] == 1

    S, gs = _gs(20, 30, 37)
    report = check_theorem_bounds(S, gs)
    assert report["ok"]
    assert (report["beta0"], report["beta1"], report["beta2"]) == (2, 1, 0)
    names = {c["name"]: c for c in report["checks"]}
    assert names["beta1_trivial_small_mu"]["limit"] == 1
    assert names["beta2_zero_small_mu"]["ok"]

    S, gs = _gs(265, 280, 655)
    report = check_theorem_bounds(S, gs)
    assert report["ok"]
    assert (report["beta0"], report["beta1"], report["beta2"]) == (7, 10, 4)
    names = {c["name"]: c for c in report["checks"]}
    assert names["beta1_le_cyclic_edges"]["limit"] == 15
    assert names["beta2_le_cyclic_facets_minus_1"]["limit"] == 9


def test_k_ab_threshold():
    S, gs = _gs(193, 200, 211)
    report = k_ab_threshold(S, gs)
    assert report == {
        "triple": [193, 200, 211], "k": 180, "applies": True,
        "expected_mu": 3, "mu": 3, "ok": True,
    }
    S, gs = _gs(160, 163, 170)
    report = k_ab_threshold(S, gs)
    assert report["k"] == 60
    assert report["applies"] and report["expected_mu"] == 2 and report["ok"]
    S, gs = _gs(13, 20, 31)
    report = k_ab_threshold(S, gs)
    assert report["k"] == 180
    assert not report["applies"]
    assert report["expected_mu"] is None and report["ok"]
