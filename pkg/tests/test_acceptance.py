"""The twelve acceptance criteria, one test each.

A ``CRITERION k: PASS/FAIL`` line is printed for every criterion in the
terminal summary (see conftest.py).  Criterion 1 is a known, ledgered
failure: the degeneracy identities of the free simplicial group G fail
with the literal degeneracy table.  It is marked ``xfail(strict=True)`` so
its line reads FAIL while the suite as a whole stays runnable; if it
ever starts passing, strict mode turns that into an error.
"""

import json
import subprocess
import sys
import time
from math import comb, gcd

import pytest

from brunnian.amalgam import (
    brute_force_cover_supports,
    fat_symmetric_smoke,
    lemma35_checks,
    minimal_cover_supports,
    pair_symbols,
)
from brunnian.braid import (
    GeometricBraid,
    braid_equal,
    degeneracy_formula,
    embed_generator,
    embed_word,
    face_formula,
    full_twist,
    geometric_double_strand,
    geometric_remove_strand,
    is_brunnian,
    is_trivial,
    pure_generators,
)
from brunnian.examples import compute_pi3_moore, run_suite, verify_free_product_model
from brunnian.simplicial import (
    alpha_k,
    ap_spec,
    check_simplicial_identities,
    f_tilde_spec,
    g_script_spec,
    milnor_spec,
    phi_alpha,
    sphere_cells,
    theta,
    y_cables,
)


def _within(t0, seconds):
    assert time.perf_counter() - t0 < seconds, f"took longer than {seconds} s"


@pytest.mark.criterion(1)
@pytest.mark.xfail(strict=True, reason="ss identities of G fail freely with the literal degeneracy table (ledgered)")
def test_criterion_1_simplicial_identities():
    t0 = time.perf_counter()
    specs = [g_script_spec(("a", "b")), ap_spec(), f_tilde_spec()] + [milnor_spec(k) for k in (1, 2, 3)]
    reports = {s.name: check_simplicial_identities(s, 5) for s in specs}
    _within(t0, 30)
    failed = {name: r["counterexample"] for name, r in reports.items() if not r["passed"]}
    assert not failed, failed


@pytest.mark.criterion(2)
def test_criterion_2_formula_vs_geometry():
    t0 = time.perf_counter()
    for n in range(2, 7):
        for g in pure_generators(n):
            b = embed_generator(g, n)
            for t in range(n):
                if n > 2:
                    assert braid_equal(embed_word(face_formula(t, g), n - 1), geometric_remove_strand(b, t + 1)), (g, t)
                else:
                    assert is_trivial(geometric_remove_strand(b, t + 1)) and face_formula(t, g).is_identity()
                assert braid_equal(embed_word(degeneracy_formula(t, g), n + 1), geometric_double_strand(b, t + 1)), (g, t)
    _within(t0, 60)


@pytest.mark.criterion(3)
def test_criterion_3_brunnian_alpha():
    t0 = time.perf_counter()
    for k in (4, 5, 6):
        b = embed_word(theta(alpha_k(k)), k - 1)
        assert is_brunnian(b)
        assert not braid_equal(b, GeometricBraid.identity(k - 1))
    _within(t0, 60)


@pytest.mark.criterion(4)
def test_criterion_4_cabling_counts():
    t0 = time.perf_counter()
    for k in (4, 5):
        a = theta(alpha_k(k))
        for n in range(k - 1, 8):
            ys = y_cables(k, n)
            assert len(ys) == comb(n - 1, k - 2)
            assert ys == [phi_alpha(a, k - 2, c) for c in sphere_cells(k - 2, n - 1)]
    for k in range(1, 5):
        for n in range(0, 11):
            assert len(sphere_cells(k, n)) == (comb(n, k) if n >= k else 0)
    _within(t0, 10)


@pytest.mark.criterion(5)
def test_criterion_5_full_twist():
    t0 = time.perf_counter()
    for n in (3, 4, 5):
        d = full_twist(n)
        for g in pure_generators(n):
            a = embed_generator(g, n)
            assert braid_equal(d * a, a * d)
        for i in range(1, n):
            s = GeometricBraid(n, [i])
            assert braid_equal(d * s, s * d)
        for k in range(1, n + 1):
            assert braid_equal(geometric_remove_strand(d, k), full_twist(n - 1))
    _within(t0, 30)


@pytest.mark.criterion(6)
def test_criterion_6_moore_chains():
    t0 = time.perf_counter()
    for n in (1, 2, 3):
        r = lemma35_checks(n, ("a", "b"), weight_bound=4, conjugator_bound=1, samples=1, seed=7)
        assert r["passed"], r["failures"][:3]
        assert r["chains"] > 0 and r["cycles"] > 0 and r["shifts"] == r["cycles"]
    _within(t0, 120)


@pytest.mark.criterion(7)
def test_criterion_7_minimal_covers():
    t0 = time.perf_counter()
    for N in (3, 4, 5):
        syms = pair_symbols(N)
        ours = {frozenset(s.label for s in sup) for sup in minimal_cover_supports(range(1, N + 1), syms)}
        assert ours == brute_force_cover_supports(range(1, N + 1), syms, N)
    sup = minimal_cover_supports(range(1, 5), pair_symbols(4))
    matchings = [s for s in sup if len(s) == 2]
    stars = [s for s in sup if len(s) == 3 and len(frozenset.intersection(*(x.index for x in s))) == 1]
    assert (len(matchings), len(stars), len(sup)) == (3, 4, 7)
    _within(t0, 10)


@pytest.mark.criterion(8)
def test_criterion_8_fat_vs_symmetric():
    t0 = time.perf_counter()
    for closures in (2, 3):
        r = fat_symmetric_smoke(2, 3, 3, closures)
        assert r["order"] == 3 ** 6
        assert r["equal"] and r["symmetric_in_fat"] and r["right_comb_in_symmetric"]
    _within(t0, 60)


@pytest.mark.criterion(9)
def test_criterion_9_free_product_model():
    t0 = time.perf_counter()
    for m in (2, 3):
        r = verify_free_product_model(m, depth=2, center_length=4)
        assert r.passed, r.failures()
    _within(t0, 120)


@pytest.mark.criterion(10)
def test_criterion_10_pi3_moore():
    t0 = time.perf_counter()
    for q, expected in ((2, 4), (3, 3), (4, 8), (5, 5)):
        assert gcd(2 * q, q * q) == expected
        r = compute_pi3_moore(q)
        assert r.passed, r.failures()
        assert r.checks[0]["witness"]["order"] == expected
        assert r.checks[1]["witness"] == {"invariant_factors": [expected], "free_rank": 0}
    _within(t0, 30)


@pytest.mark.criterion(11)
def test_criterion_11_s2_membership():
    t0 = time.perf_counter()
    r = run_suite("s2-membership")
    assert r.passed, r.failures()
    _within(t0, 5)


@pytest.mark.criterion(12)
def test_criterion_12_determinism(tmp_path):
    outs = []
    for i in range(2):
        out = tmp_path / f"report{i}.json"
        subprocess.run([sys.executable, "-m", "brunnian", "verify", "--suite", "all", "--seed", "7", "--out", str(out)],
                       capture_output=True, text=True)
        d = json.loads(out.read_text())
        d.pop("duration_ms")
        outs.append(json.dumps(d, sort_keys=True))
    assert outs[0] == outs[1]
