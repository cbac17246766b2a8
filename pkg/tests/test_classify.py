from itertools import permutations

import pytest

from lensurgery.classify import (
    DEFAULT_ORDER,
    THEOREM_SET,
    Outcome,
    Verdict,
    classify,
    rerun_firing_check,
    scan,
)


def records(report, name, scope=None):
    return [r for r in report.trace if r.check_name == name and r.scope == scope]


def test_classify_seven():
    rep = classify(7)
    assert rep.verdict is Verdict.NOT_OBSTRUCTED
    assert rep.witness == "Figure 2 non-coherent banding"
    assert rep.n0 == 1


def test_classify_five_traces_both_failures():
    rep = classify(5)
    assert rep.obstructed
    lf, = records(rep, "linking_form")
    assert lf.outcome is Outcome.OBSTRUCTS
    assert lf.inputs["filling"] == "2/5" and lf.inputs["target"] == "1/5"
    n0, = records(rep, "n0_rule")
    assert n0.outcome is Outcome.OBSTRUCTS
    assert n0.inputs["N0"] == "-1/2"  # -k/4 at k = 2


def test_classify_nine_gcd():
    rep = classify(9)
    assert rep.firing_check == "gcd_filter"


def test_classify_minus_six():
    rep = classify(-6)
    assert not rep.obstructed
    quad, = records(rep, "quadratic", "+k")
    assert quad.inputs["roots"]["B2"] == [3]
    assert quad.inputs["k"] == 2
    assert any(r.outcome is Outcome.OBSTRUCTS for r in rep.trace if r.scope == "-k")
    fate, = records(rep, "sign_exhaustion")
    assert fate.inputs == {"+k": "survives", "-k": "definiteness"}


def test_classify_minus_eight_is_linking_form():
    rep = classify(-8)
    assert rep.firing_check == "linking_form"
    n0, = records(rep, "n0_rule")
    assert n0.inputs["N0"] == "1/1"
    assert not records(rep, "quadratic")  # N_0 < 2: the quadratic step does not apply


def test_classify_zero():
    rep = classify(0)
    assert rep.obstructed and rep.firing_check == "torsion_free"


def test_three_minus_k_side_is_inconclusive():
    rep = classify(3)
    assert not rep.obstructed
    quad, = records(rep, "quadratic", "-k")
    assert quad.outcome is Outcome.INCONCLUSIVE


def test_scan_examples():
    assert scan(-10, 10).not_obstructed == [-6, -2, -1, 1, 2, 3, 4, 7]
    assert scan(20, 30).not_obstructed == []
    assert scan(3, 3).not_obstructed == [3]
    assert scan(0, 0).reports == []
    with pytest.raises(ValueError):
        scan(1, 0)


def test_scan_summary():
    s = scan(-10, 10).summary()
    assert s["matches"] and s["expected"] == sorted(THEOREM_SET)
    assert scan(5, 8).expected == [7]


def test_soundness_against_theorem():
    for n in range(-500, 501):
        if n == 0:
            continue
        rep = classify(n)
        assert (not rep.obstructed) == (n in THEOREM_SET), n


def test_verdict_matches_unscoped_records():
    for n in range(-300, 301):
        rep = classify(n)
        unscoped = [r for r in rep.trace if r.scope is None]
        assert rep.obstructed == any(r.outcome is Outcome.OBSTRUCTS for r in unscoped)
        assert all(r.citation for r in rep.trace)
        if not rep.obstructed:
            assert rep.witness


def test_firing_check_reproduces():
    for n in range(-300, 301):
        rep = classify(n)
        if rep.obstructed:
            again = rerun_firing_check(rep)
            assert again.check_name == rep.firing_check
            assert again.outcome is Outcome.OBSTRUCTS


def test_rerun_needs_an_obstruction():
    with pytest.raises(ValueError):
        rerun_firing_check(classify(7))


@pytest.mark.parametrize("order", list(permutations(DEFAULT_ORDER)))
def test_order_changes_only_firing_check(order):
    for n in range(-120, 121):
        assert classify(n, order).verdict is classify(n).verdict


def test_order_can_change_firing_check():
    firing = {classify(5, o).firing_check for o in permutations(DEFAULT_ORDER)}
    assert firing == {"linking_form", "n0_rule"}


def test_order_must_be_permutation():
    with pytest.raises(ValueError):
        classify(5, ("linking_form",))


def test_essential_quadratic_guard():
    # N_0 >= 2 triggers the quadratic step on the 3k+1 branch
    rep = classify(13)
    assert rep.firing_check == "quadratic"
    assert rep.n0 == 2
    assert classify(7).n0 == 1 and not records(classify(7), "quadratic")


def test_report_to_dict():
    d = classify(-6).to_dict()
    assert d["verdict"] == "NotObstructed"
    assert d["N0"] == "1/1"
    assert {"check", "scope", "inputs", "outcome", "citation"} <= set(d["trace"][0])
