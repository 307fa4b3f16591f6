import json

import pytest

from brunnian.cli import CAPS, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_pass_and_json(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--suite", "brunnian", "--k-max", "6", "--out", str(out_file))
    assert code == EXIT_OK and out.splitlines()[-1].startswith("PASS")
    d = json.loads(out_file.read_text())
    assert set(d) >= {"suite", "params", "checks", "duration_ms"} and d["suite"] == "brunnian"
    code, out, _ = run(capsys, "verify", "--suite", "lemma36", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["passed"]


def test_verify_reports_failure(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "simplicial-identities")
    assert code == EXIT_FAIL and "FAIL" in out


def test_verify_usage_errors(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nosuch")
    assert code == EXIT_USAGE and "unknown suite" in err
    code, _, err = run(capsys, "verify", "--suite", "brunnian", "--k-max", str(CAPS["k_max"] + 1))
    assert code == EXIT_USAGE and "--unsafe-bounds" in err
    code, _, _ = run(capsys, "verify", "--suite", "brunnian", "--k-max", "0")
    assert code == EXIT_USAGE
    with pytest.raises(SystemExit) as e:
        main(["verify"])
    assert e.value.code == 2


def test_emit_formats(capsys, tmp_path):
    code, out, _ = run(capsys, "emit", "--target", "sphere", "--n", "4", "--k", "4", "--format", "json")
    d = json.loads(out)
    assert code == EXIT_OK and len(d["relators"]) == 25 and len(d["schema_relators"]) == 108
    code, out, _ = run(capsys, "emit", "--target", "sphere", "--n", "3", "--k", "3", "--alpha", "2")
    assert code == EXIT_OK and out.startswith("# presentation target=sphere")
    path = tmp_path / "g.g"
    code, out, _ = run(capsys, "emit", "--target", "sphere_S2", "--n", "3", "--format", "cas", "--out", str(path))
    assert code == EXIT_OK and out == "" and "FreeGroup" in path.read_text()


def test_emit_usage_errors(capsys):
    assert run(capsys, "emit", "--target", "sphere", "--n", "4", "--k", "3")[0] == EXIT_USAGE
    assert run(capsys, "emit", "--target", "sphere", "--n", "9", "--k", "4")[0] == EXIT_USAGE
    code, _, err = run(capsys, "emit", "--target", "sphere", "--n", "5", "--k", "4", "--depth", "2")
    assert code == EXIT_USAGE and "cap" in err


def test_compute_outputs(capsys):
    code, out, _ = run(capsys, "compute", "alpha_k", "--k", "4")
    assert code == EXIT_OK and out.splitlines()[0] == "[[x[1]^-1, x[1] x[2]^-1], x[2]]"
    assert out.splitlines()[1].startswith("braid (3 strands): ")
    assert run(capsys, "compute", "pi3-moore", "--q", "4")[1] == "[8]\n"
    assert run(capsys, "compute", "magnus", "--word", "[a,b]", "--cap", "2")[1] == "1 + AB - BA\n"
    assert run(capsys, "compute", "theta-image", "--n", "2")[1] == "A[1,2] A[1,3]\nA[1,3] A[2,3]\n"
    assert run(capsys, "compute", "full-twist", "--n", "2")[1] == "s1^2\n"
    assert len(run(capsys, "compute", "y-cables", "--k", "4", "--n", "4")[1].splitlines()) == 3
    code, out, _ = run(capsys, "compute", "pi3-moore", "--q", "3", "--format", "json")
    assert json.loads(out)["value"]["invariant_factors"] == [3]


def test_compute_usage_errors(capsys):
    assert run(capsys, "compute", "magnus", "--word", "[a,b]", "--cap", "0")[0] == EXIT_USAGE
    assert run(capsys, "compute", "magnus")[0] == EXIT_USAGE
    assert run(capsys, "compute", "alpha_k", "--k", "3")[0] == EXIT_USAGE
    assert run(capsys, "compute", "alpha_k", "--k", "7")[0] == EXIT_USAGE
    assert run(capsys, "compute", "pi3-moore", "--q", "1")[0] == EXIT_USAGE


def test_unsafe_bounds_override(capsys, monkeypatch):
    assert run(capsys, "compute", "alpha_k", "--k", "7", "--unsafe-bounds")[0] == EXIT_OK
    monkeypatch.setenv("BRUNNIAN_UNSAFE_BOUNDS", "1")
    assert run(capsys, "compute", "alpha_k", "--k", "7")[0] == EXIT_OK
