import json

import pytest

from brunnian.examples import (
    SUITES,
    ScenarioReport,
    compute_pi3_moore,
    run_suite,
    verify_free_product_model,
)


def test_report_basics():
    r = ScenarioReport("demo", {"n": 1})
    assert r.passed
    assert r.add("ok", True) and not r.add("bad", False, {"why": 1})
    assert not r.passed and [c["name"] for c in r.failures()] == ["bad"]
    d = json.loads(r.to_json())
    assert d["checks"][1] == {"name": "bad", "status": "fail", "witness": {"why": 1}}
    assert "duration_ms" in d and "duration_ms" not in r.to_dict(with_duration=False)
    text = r.to_text()
    assert text.splitlines()[-1] == "FAIL (1/2 checks)" and 'witness={"why": 1}' in text


@pytest.mark.parametrize("name", sorted(set(SUITES) - {"simplicial-identities"}))
def test_suites_pass(name):
    r = run_suite(name)
    assert r.passed, r.failures()
    assert r.checks


def test_simplicial_suite_reports_the_known_failure():
    r = run_suite("simplicial-identities")
    failed = [c["name"] for c in r.failures()]
    assert len(failed) == 1 and "G" in failed[0]
    w = r.failures()[0]["witness"]
    assert w["first"]["identity"] == "ss" and w["failed_per_family"] == {"dd": 0, "ss": 70, "ds": 0}


def test_bounds_override_and_determinism():
    a = run_suite("lemma36", N_max=4)
    b = run_suite("lemma36", N_max=4)
    assert a.params["N_max"] == 4
    assert a.to_json(with_duration=False) == b.to_json(with_duration=False)
    assert run_suite("braid-formula-vs-geometry", seed=3).params["seed"] == 3


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nosuch")


def test_free_product_image_example():
    r = verify_free_product_model(2, depth=1, center_length=2)
    assert r.passed, r.failures()
    rank = [c for c in r.checks if "rank" in c["name"]]
    assert rank and rank[0]["witness"]["rank"] == 4


@pytest.mark.parametrize("q,expected", [(2, 4), (3, 3), (4, 8), (5, 5), (6, 12)])
def test_pi3_moore_reports(q, expected):
    r = compute_pi3_moore(q)
    assert r.passed
    assert r.checks[0]["witness"]["order"] == expected
    assert r.checks[1]["witness"] == {"invariant_factors": [expected], "free_rank": 0}
