"""End-to-end acceptance suite.

Every expected value below is frozen; all comparisons are exact (the
entire library works over the integers).  One test per criterion:

1. the full polarization/duality chain for the running example;
2. its 0-th local cohomology entry under all three methods;
3. the modified running example: grid components, adeg, lc entry;
4. the squarefree shift and its duality compatibility;
5. the two multi-round decompositions and the right-shift test;
6. a 200-trial randomized property run with zero failures;
7. byte-identical reports from repeated seeded runs.
"""

import json

from borel_dual import (
    CorpusSpec,
    RationalSeries,
    adeg,
    alexander_dual,
    bpol_decomposition,
    bpol_ideal,
    decompose_strongly_stable,
    ideal_equiv,
    lc_series_via_components,
    lc_series_via_dual,
    lc_series_via_gamma,
    right_shift_check,
    run_suite,
    sigma_ideal,
    star_dual,
    transpose,
)
from borel_dual.cli import main, parse_ideal
from conftest import ideal

RUNNING = "x1^2, x1*x2, x1*x3, x2^2, x2*x3"
MODIFIED = "x1^2, x1*x2, x1*x3, x2^2, x2*x3^2"


def test_criterion_1_duality_chain_golden_strings():
    I = parse_ideal(RUNNING)
    J = bpol_ideal(I, 2)
    assert J.to_str() == "x1_1*x1_2, x1_1*x2_2, x1_1*x3_2, x2_1*x2_2, x2_1*x3_2"
    E = decompose_strongly_stable(I)
    assert bpol_decomposition(E) == [(1, 1), (1, 2, 2), (2, 2, 2)]
    D = alexander_dual(J)
    assert D.to_str() == "x1_1*x2_1, x1_1*x2_2*x3_2, x1_2*x2_2*x3_2"
    assert transpose(D).to_str("y") == "y1_1*y1_2, y1_1*y2_2*y2_3, y2_1*y2_2*y2_3"
    star = star_dual(I, 2)
    assert ", ".join(str(g) for g in star.gens).replace("x", "y") == "y1^2, y1*y2^2, y2^3"
    # and the defining identity itself
    assert bpol_ideal(star, 3) == transpose(D)


def test_criterion_2_lc_entry_zero_three_ways():
    I = parse_ideal(RUNNING)
    E = decompose_strongly_stable(I)
    expected = RationalSeries.make({-1: 2}, 0)
    assert lc_series_via_dual(I, 2).as_dict()[0] == expected
    assert lc_series_via_components(E, 3).as_dict()[0] == expected
    assert lc_series_via_gamma(bpol_decomposition(E), 3).as_dict()[0] == expected
    assert str(expected) == "2λ^-1"


def test_criterion_3_modified_example():
    I = parse_ideal(MODIFIED)
    E = decompose_strongly_stable(I)
    assert bpol_decomposition(E) == [(1, 1), (1, 2, 2), (1, 2, 3), (2, 2, 2)]
    assert adeg(E, 3).as_dict()[0] == 3
    expected = RationalSeries.make({-2: 1, -1: 2}, 0)
    assert lc_series_via_components(E, 3).as_dict()[0] == expected
    assert lc_series_via_dual(I, 3).as_dict()[0] == expected
    assert lc_series_via_gamma(bpol_decomposition(E), 3).as_dict()[0] == expected
    assert str(expected) == "λ^-2 + 2λ^-1"


def test_criterion_4_squarefree_shift():
    I = parse_ideal(RUNNING)
    sig = sigma_ideal(I, 2)
    assert str(sig) == "x1*x2, x1*x3, x1*x4, x2*x3, x2*x4"
    dual_of_shift = alexander_dual(sig)
    assert str(dual_of_shift) == "x1*x2, x1*x3*x4, x2*x3*x4"
    shift_of_dual = sigma_ideal(star_dual(I, 2), 3)
    assert str(shift_of_dual) == "x1*x2, x1*x3*x4, x2*x3*x4"
    assert ideal_equiv(dual_of_shift, shift_of_dual)


def test_criterion_5_decompositions_and_right_shift():
    I = parse_ideal("x1^3, x1^2*x2, x1*x2^2, x1*x2*x3^2, x1^2*x3^2")
    assert decompose_strongly_stable(I) == [(1,), (2, 1), (2, 2, 2), (3, 1, 2)]

    I2 = parse_ideal("x1^2, x1*x2, x2^3, x1*x3, x2^2*x3")
    E2 = decompose_strongly_stable(I2)
    assert E2 == [(1, 2), (1, 3, 1), (2, 1, 1)]
    assert right_shift_check(E2, 3)

    # the non-strongly-stable ideal (x1^3, x1^2 x2, x1 x2^2, x2^3, x1 x3)
    assert not right_shift_check([(1, 3), (2, 2, 1), (3, 1, 1)], 3)


def test_criterion_6_property_suite_200_trials():
    spec = CorpusSpec(seed=42, trials=200, n_range=(1, 3), d_range=(1, 3), gens_range=(1, 4))
    report = run_suite(spec)
    assert report.total_failures == 0, report.to_json()
    for name in (
        "decompose_borel_vs_oracle",
        "bpol_decomposition_vs_oracle",
        "grid_dual_identity",
        "star_dual_involution",
        "sigma_dual_compatibility",
        "sigma_decomposition_vs_oracle",
        "ek_vs_homology_oracle",
        "betti_preserved_by_bpol",
        "lc_three_way_agreement",
        "euler_consistency",
        "cm_via_dual_vs_direct",
        "deg_crosscheck",
        "colon_decomposition_identity",
        "grid_staircase_condition",
        "right_shift_equivalence",
        "adeg_top_shortcut",
    ):
        r = report.results[name]
        assert r.failed == 0, name
        assert r.passed > 0, name


def test_criterion_7_deterministic_reports(capsys):
    assert main(["verify", "--seed", "42", "--trials", "200"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", "--seed", "42", "--trials", "200"]) == 0
    second = capsys.readouterr().out
    assert first.encode() == second.encode()
    assert json.loads(first)["failures"] == 0
