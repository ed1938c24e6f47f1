"""Smoke tests for the python surface of the toolkit."""

from fractions import Fraction

import genproj as gp


def frac(s):
    return Fraction(s)


def test_norms_and_pairings():
    x = gp.finseq({1: "3", 2: "1"})
    assert gp.norm_l1(x) == "4"
    assert gp.norm_sup(gp.tailseq(["3", "1"], 0)) == "3"
    assert gp.pair(gp.tailseq(["3", "1"], 0), gp.finseq({1: "1"})) == "3"
    assert gp.pair_c(gp.finseq({1: "1"}, zero="1"), gp.tailseq(["5"], "2")) == "7"


def test_lyapunov_worked_value():
    got = gp.v_eval(gp.tailseq(["3", "1"], 0), gp.finseq({1: "1"}))
    assert got["value"] == "4"
    assert got["lower_bound"] == "4"
    assert got["upper_bound"] == "16"


def test_duality_box_shape():
    box = gp.duality_box(gp.finseq({1: "1"}))
    assert box["norm"] == "1"
    assert box["fixed"]["1"] == "1"
    assert gp.duality_contains(gp.finseq({1: "1"}), gp.tailseq([], "1"))
    assert gp.identical_points(gp.finseq({1: "1"}), gp.finseq({2: "1"}))
    assert not gp.identical_points(gp.finseq({1: "1"}), gp.finseq({1: "2"}))


def test_flat_dual_projects_onto_simplex():
    report = gp.solve("gproject", gp.hyperplane("1"), gp.tailseq([], "1"))
    assert report["value"] == "0"
    assert report["set_tag"] == "D(1)"
    assert gp.solution_set_contains(
        gp.hyperplane("1"), gp.tailseq([], "1"), gp.finseq({2: "1/2", 3: "1/2"})
    )


def test_sharp_dual_exact_optimum():
    report = gp.solve("gproject", gp.hyperplane("1"), gp.tailseq(["3", "1"], 0))
    assert frac(report["value"]) == Fraction(15, 4)
    assert report["truncation_stable"] is True


def test_metric_and_union_routes():
    metric = gp.solve("project", gp.hyperplane("1"), gp.finseq({1: "3"}))
    assert metric["value"] == "2"
    union = gp.solve("gmproject", gp.ball("1"), gp.finseq({i: "1/2" for i in range(1, 5)}))
    assert union["value"] == "1"
    assert union["set_tag"] == "D(1)"


def test_hilbert_route():
    report = gp.solve("project", gp.ball("1"), gp.finseq({1: "1", 2: "1"}), budget=2, l2=True)
    assert frac(report["value"]) == Fraction(1, 2)


def test_vi_and_c0():
    rep = gp.vi_sufficiency(
        gp.hyperplane("1"), gp.tailseq(["3", "1"], 0), gp.finseq({1: "1"})
    )
    assert rep["holds"] is False
    assert "violating_y" in rep

    in_p, in_pi = gp.c0_projections("1", gp.tailseq(["1"], 0))
    assert (in_p, in_pi) == (True, True)


def test_remez_levels():
    rep = gp.remez("t^2", 1)
    assert abs(rep["level"] - 0.125) < 1e-9
    assert rep["verified"] is True
    assert gp.maximizing_set("t*(1-t)") == [0.5]


def test_case_registry_roundtrip():
    ids = gp.list_cases()
    assert "ex2.4" in ids and len(ids) >= 15
    outcome = gp.run_case("lemma1.1")
    assert outcome["pass"] is True
    assert all(c["pass"] for c in outcome["checks"])
