from random import Random

import pytest

from tck.errors import DegenerateDelta, GcdNotOne, NoSolution, NotMinimal, NotSorted
from tck.groebner_mini import Polynomial, buchberger, ideal_member
from tck.semigroup_core import (
    Binomial,
    StructureData,
    binomial_of,
    compute_structure,
    initial_form,
    mdivides,
    validate_semigroup,
)
from tck.tangent_cone import (
    HomogeneousCoeffs,
    build_A,
    build_B,
    mu_bound_check,
    solve_homogeneous_coeffs,
    tangent_cone_generators,
)


def _sd(*triple):
    S = validate_semigroup(*triple)
    return S, compute_structure(S)


def test_solve_homogeneous_coeffs_goldens():
    for triple, want in [
        ((332, 345, 450), (7, 3)),
        ((265, 280, 655), (4, 1)),
        ((480, 503, 1950), (20, 49)),
        ((160, 169, 460), (4, 5)),
    ]:
        S, sd = _sd(*triple)
        assert solve_homogeneous_coeffs(sd, S) == HomogeneousCoeffs(*want), triple


def test_solve_homogeneous_coeffs_rejects_other_cases():
    S, sd = _sd(13, 20, 31)
    with pytest.raises(ValueError):
        solve_homogeneous_coeffs(sd, S)


def test_solve_homogeneous_coeffs_no_solution():
    # a fabricated structure whose system has a non-integral solution
    S, sd = _sd(265, 280, 655)
    broken = StructureData(
        c1=sd.c1 + 1, c2=sd.c2, c3=sd.c3, r12=sd.r12, r13=sd.r13,
        r21=sd.r21, r23=sd.r23, r31=sd.r31, r32=sd.r32,
        w1=sd.w1, w2=sd.w2, delta1=sd.delta1, delta2=sd.delta2,
        case_tag=sd.case_tag,
    )
    with pytest.raises(NoSolution):
        solve_homogeneous_coeffs(broken, S)


def test_build_A_goldens():
    for triple, cap, want in [
        ((332, 345, 450), 2, [(1, 0), (3, 1)]),
        ((480, 503, 1950), 7, [(1, 0), (1, 1), (1, 2)]),
        ((160, 169, 460), 5, [(1, 0), (1, 1)]),
        ((265, 280, 655), 1, [(1, 0)]),
    ]:
        _, sd = _sd(*triple)
        assert build_A(sd, cap) == want, triple


def test_build_B_goldens():
    for triple, want in [
        ((332, 345, 450), [(0, 1), (1, 1), (2, 1)]),
        ((480, 503, 1950), [(0, 1), (1, 3), (2, 5)]),
        ((160, 169, 460), [(0, 1), (1, 2), (2, 3), (3, 4)]),
        ((265, 280, 655), [(0, 1), (1, 1), (2, 1), (3, 1)]),
    ]:
        _, sd = _sd(*triple)
        assert build_B(sd) == want, triple


def test_chain_machinery_rejects_wrong_case():
    _, sd = _sd(13, 20, 31)
    with pytest.raises(ValueError):
        build_A(sd, 3)
    with pytest.raises(ValueError):
        build_B(sd)


def test_build_B_degenerate_delta():
    _, sd = _sd(265, 280, 655)
    broken = StructureData(
        c1=sd.c1, c2=sd.c2, c3=sd.c3, r12=sd.r12, r13=sd.r13,
        r21=sd.r21, r23=sd.r23, r31=sd.r31, r32=sd.r32,
        w1=sd.w1, w2=sd.w2, delta1=sd.delta1, delta2=None,
        case_tag=sd.case_tag,
    )
    with pytest.raises(DegenerateDelta):
        build_B(broken)


# per golden triple: monomial exponents, the lone binomial (or None),
# and where the index machinery runs, (eta, epsilon, alpha_h, beta_h, A, B)
SET_GOLDENS = {
    (20, 30, 37): (
        {(0, 2, 0), (0, 0, 10)}, None, None),
    (20, 23, 30): (
        {(0, 10, 0), (0, 0, 2)}, None, None),
    (13, 20, 31): (
        {(0, 0, 3), (0, 3, 1), (0, 7, 0)}, None, None),
    (160, 163, 170): (
        {(0, 0, 16)}, Binomial((0, 10, 0), (7, 0, 3)), None),
    (193, 200, 211): (
        {(0, 7, 8), (0, 0, 15)}, Binomial((0, 18, 0), (11, 0, 7)), None),
    (332, 345, 450): (
        {(0, 0, 23), (0, 4, 8), (0, 42, 1), (0, 80, 0), (15, 0, 15), (30, 0, 7)},
        None,
        (5, 2, 7, 3, ((1, 0), (3, 1)), ((0, 1), (1, 1), (2, 1))),
    ),
    (480, 503, 1950): (
        {(3, 0, 7), (0, 0, 16), (0, 30, 9), (0, 60, 2), (74, 0, 5),
         (145, 0, 3), (0, 210, 0)},
        None,
        (3, 7, 20, 49, ((1, 0), (1, 1), (1, 2)), ((0, 1), (1, 3), (2, 5))),
    ),
    (160, 169, 460): (
        {(1, 0, 7), (0, 0, 8), (0, 20, 1), (25, 0, 6), (49, 0, 5), (73, 0, 4)},
        Binomial((0, 100, 0), (97, 0, 3)),
        (5, 6, 4, 5, ((1, 0), (1, 1)), ((0, 1), (1, 2), (2, 3), (3, 4))),
    ),
    (265, 280, 655): (
        {(0, 1, 2), (1, 0, 9), (0, 0, 11), (7, 0, 7), (13, 0, 5), (19, 0, 3)},
        Binomial((0, 26, 0), (25, 0, 1)),
        (9, 2, 4, 1, ((1, 0),), ((0, 1), (1, 1), (2, 1), (3, 1))),
    ),
}


def test_generator_set_goldens():
    for triple, (monos, binom, index_data) in SET_GOLDENS.items():
        S, sd = _sd(*triple)
        gs = tangent_cone_generators(S, sd)
        assert set(gs.monomials) == monos, triple
        assert gs.binomial == binom, triple
        assert gs.mu == len(monos) + (0 if binom is None else 1), triple
        if index_data is None:
            assert gs.A is None and gs.B is None
        else:
            eta, epsilon, alpha_h, beta_h, A, B = index_data
            assert (gs.eta, gs.epsilon) == (eta, epsilon), triple
            assert (gs.alpha_h, gs.beta_h) == (alpha_h, beta_h), triple
            assert gs.A == A and gs.B == B, triple


def test_generator_labels_golden():
    S, sd = _sd(332, 345, 450)
    gs = tangent_cone_generators(S, sd)
    assert gs.provenance == ["P(1,0)", "Q(0,1)", "Q(1,1)", "Q(2,1)", "P(3,1)", "G"]
    S, sd = _sd(265, 280, 655)
    gs = tangent_cone_generators(S, sd)
    assert gs.provenance == [
        "P(1,0)", "Q(0,1)", "ZC3", "Q(1,1)", "Q(2,1)", "Q(3,1)", "H"
    ]


def test_witnesses_reproduce_generators():
    for triple in SET_GOLDENS:
        S, sd = _sd(*triple)
        gs = tangent_cone_generators(S, sd)
        for g in gs.generators:
            u, v = g.coeffs
            vec = tuple(u * a + v * b for a, b in zip(sd.w1, sd.w2))
            assert vec == g.witness, (triple, g.label)
            assert sum(c * n for c, n in zip(vec, S.triple)) == 0
            assert initial_form(binomial_of(vec)) == g.form, (triple, g.label)


def test_golden_sets_are_inclusion_minimal():
    # dropping any single generator must shrink the ideal
    for triple in SET_GOLDENS:
        S, sd = _sd(*triple)
        gs = tangent_cone_generators(S, sd)
        polys = [g.polynomial() for g in gs.generators]
        cap = max(p.degree() for p in polys)
        for i, p in enumerate(polys):
            rest = polys[:i] + polys[i + 1 :]
            gb = buchberger(rest, degree_cap=cap)
            assert not ideal_member(p, gb), (triple, gs.generators[i].label)


def test_index_chain_values_decrease():
    # chain values stay positive and strictly decrease in both chains
    count = 0
    for n1 in range(2, 44):
        for n2 in range(n1 + 1, 45):
            for n3 in range(n2 + 1, 46):
                try:
                    S = validate_semigroup(n1, n2, n3)
                except (NotSorted, NotMinimal, GcdNotOne):
                    continue
                sd = compute_structure(S)
                if sd.case_tag not in ("CI_R21_ZERO", "CI_R12_ZERO_GT", "NCI_GT"):
                    continue
                gs = tangent_cone_generators(S, sd)
                if sd.case_tag == "CI_R21_ZERO":
                    X, Y = sd.r13, sd.c3
                elif sd.case_tag == "CI_R12_ZERO_GT":
                    X, Y = sd.c3, sd.r23
                else:
                    X, Y = sd.r13, sd.r23
                a_vals = [a * X - b * Y for a, b in gs.A]
                b_vals = [-g * X + s * Y for g, s in gs.B]
                assert all(v > 0 for v in a_vals + b_vals), S.triple
                assert a_vals == sorted(a_vals, reverse=True), S.triple
                assert b_vals == sorted(b_vals, reverse=True), S.triple
                assert a_vals[0] == X and b_vals[0] == Y
                count += 1
    assert count > 100


def test_set_shape_properties():
    rng = Random(8)
    triples = []
    for n1 in range(2, 58):
        for n2 in range(n1 + 1, 59):
            for n3 in range(n2 + 1, 60):
                try:
                    validate_semigroup(n1, n2, n3)
                except (NotSorted, NotMinimal, GcdNotOne):
                    continue
                triples.append((n1, n2, n3))
    for triple in rng.sample(triples, 300):
        S, sd = _sd(*triple)
        gs = tangent_cone_generators(S, sd)
        assert gs.mu >= 2
        monos = gs.monomials
        # pruning leaves no divisibility pair among the monomials
        for m in monos:
            assert not any(o != m and mdivides(o, m) for o in monos), triple
        assert len([g for g in gs.generators if isinstance(g.form, Binomial)]) <= 1
        forms = gs.forms()
        assert len(set(forms)) == len(forms)


def test_to_dict_golden():
    S, sd = _sd(160, 163, 170)
    gs = tangent_cone_generators(S, sd)
    d = gs.to_dict()
    assert d == {
        "monomials": [[0, 0, 16]],
        "binomial": {"plus": [0, 10, 0], "minus": [7, 0, 3]},
        "case": "CI_R12_ZERO_EQ",
        "mu": 2,
        "witnesses": [
            {"label": "H", "vector": [-7, 10, -3], "coeffs": [0, 1]},
            {"label": "ZC3", "vector": [17, 0, -16], "coeffs": [1, 0]},
        ],
    }


def test_mu_bound_check_reports():
    S, sd = _sd(265, 280, 655)
    gs = tangent_cone_generators(S, sd)
    report = mu_bound_check(S, gs, sd)
    assert report["ok"]
    assert report["mu"] == 7
    names = {c["name"]: c for c in report["checks"]}
    assert names["mu_le_width_plus_1"]["limit"] == 265
    assert names["mu_le_max_r_plus_3"]["limit"] == 12

    S, sd = _sd(332, 345, 450)
    gs = tangent_cone_generators(S, sd)
    report = mu_bound_check(S, gs, sd)
    assert report["ok"]
    names = {c["name"]: c for c in report["checks"]}
    assert names["mu_le_c3_plus_2"]["limit"] == 25

    S, sd = _sd(13, 20, 31)
    gs = tangent_cone_generators(S, sd)
    report = mu_bound_check(S, gs, sd)
    assert report["ok"]
    assert [c["name"] for c in report["checks"]] == ["mu_le_width_plus_1"]
