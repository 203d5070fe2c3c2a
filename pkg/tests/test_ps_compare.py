import json

import pytest

from puncthilb.ps_compare import (
    NOT_MONOMIAL,
    TYPE1,
    TYPE2,
    TYPE3,
    classify_monomial,
    counterexample_report,
    ps_dimension,
)
from puncthilb.semigroup import make_semigroup, plane_branch
from puncthilb.semimodule import enumerate_mod_r, generated

E6 = plane_branch(3, 4)


@pytest.mark.parametrize("gens,kind,params", [
    ((3, 4), TYPE2, {"m": 3, "r": 2}),
    ((3, 5), TYPE3, {"m": 3}),
    ((2, 3), TYPE1, {"m": 2, "s": 1, "b": 1}),
    ((2, 7), TYPE1, {"m": 2, "s": 3, "b": 1}),
])
def test_classifier(gens, kind, params):
    cls = classify_monomial(make_semigroup(gens))
    assert cls.kind == kind
    assert cls.params == params


@pytest.mark.parametrize("gens", [(4, 5), (3, 7), (1,)])
def test_not_monomial(gens):
    assert classify_monomial(make_semigroup(gens)).kind == NOT_MONOMIAL


def test_ps_report_on_counterexample():
    rep = ps_dimension(E6, generated(E6, [4, 6, 7]), 2)
    assert rep.s_prime == [2, 4]
    assert rep.j_sets == {2: [3], 4: []}
    assert rep.ps_dim == 1
    assert rep.eq2_dim == 0
    assert not rep.agree
    assert json.loads(json.dumps(rep.as_dict()))["agree"] is False


def test_eq2_windows_reproduce_cell_dimension():
    for r in range(7):
        for m in enumerate_mod_r(E6, r):
            rep = ps_dimension(E6, m, r, windows="eq2")
            assert rep.ps_dim == rep.eq2_dim


def test_unknown_window_family():
    with pytest.raises(ValueError):
        ps_dimension(E6, generated(E6, [4, 6, 7]), 2, windows="other")


def test_counterexample_chain_passes():
    rep = counterexample_report()
    assert rep.status == "PASS"
    assert [l.name for l in rep.links] == [
        "membership", "delta_normalization", "ps_dimension",
        "cell_dimension", "unique_ideal", "standard_basis",
    ]
    payload = json.loads(rep.to_json())
    assert payload["status"] == "PASS"
    assert "| unique_ideal | PASS |" in rep.to_markdown()


def test_counterexample_breaks_on_wrong_expectation():
    rep = counterexample_report(expected_ps=0)
    assert rep.status == "BROKEN"
    assert [l.name for l in rep.links if not l.passed] == ["ps_dimension"]


def test_counterexample_stops_at_membership():
    rep = counterexample_report(generators=(4, 6, 7), r=3)
    assert rep.status == "BROKEN"
    assert len(rep.links) == 1
