import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brunnian.examples import pi3_moore_group
from brunnian.nilpotent import (
    EXCEEDS_CAP,
    INFINITE,
    Class2Group,
    Lattice,
    MagnusSeries,
    class2_quotient,
    invariant_factors_by_minors,
    lcs_weight,
    magnus_expand,
    smith_normal_form,
)
from brunnian.nilpotent.smith import determinant, matmul
from brunnian.words import Word, commutator, left_normed, letter

a, b, c = (letter("x", i) for i in (1, 2, 3))
A, B, C = (Word.gen(g) for g in (a, b, c))
LETTERS = [letter("x", i) for i in range(1, 6)]


# -- Smith normal form


def test_smith_examples():
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).invariants == [1, 1, 1]
    assert smith_normal_form([[2, 0], [0, 4]]).invariants == [2, 4]
    assert smith_normal_form([[2, 1], [0, 3]]).invariants == [1, 6]
    assert invariant_factors_by_minors([[2, 1], [0, 3]]) == [1, 6]


matrices = st.integers(1, 6).flatmap(
    lambda m: st.integers(1, 6).flatmap(
        lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m)))


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_smith_reconstruction(A_):
    snf = smith_normal_form(A_)
    assert matmul(matmul(snf.U, A_), snf.V) == snf.D
    assert abs(determinant(snf.U)) == 1 and abs(determinant(snf.V)) == 1
    d = snf.invariants
    assert all(x > 0 for x in d)
    assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))
    m, n = len(A_), len(A_[0])
    assert all(snf.D[i][j] == 0 for i in range(m) for j in range(n) if i != j or i >= snf.rank)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=1, max_size=4))
def test_smith_matches_minors_oracle(A_):
    assert smith_normal_form(A_).invariants == invariant_factors_by_minors(A_)


def test_lattice_operations():
    L = Lattice([[2, 0], [0, 3]], 2)
    assert L.contains([4, 3]) and not L.contains([1, 0])
    assert L.order_of([1, 0]) == 2 and L.order_of([1, 1]) == 6
    assert L.quotient_invariants() == ([6], 0)
    assert Lattice([[2, 0]], 2).quotient_invariants() == ([2], 1)
    assert Lattice([[2, 0]], 2).order_of([0, 1]) is None
    M = Lattice([[3, 0], [0, 2]], 2)
    assert (L & M) == Lattice([[6, 0], [0, 6]], 2)
    assert (L + M) == Lattice.full(2)
    assert Lattice([[4, 6]], 2) <= Lattice([[2, 3]], 2)


# -- Magnus expansion


def test_magnus_examples():
    assert magnus_expand(Word.identity(), 3).is_one()
    assert str(magnus_expand(Word.parse("[a, b]"), 2)) == "1 + AB - BA"
    assert str(magnus_expand(commutator(A, B), 2)) == "1 + X[1]X[2] - X[2]X[1]"
    assert magnus_expand(A * ~A, 5).is_one()
    with pytest.raises(ValueError):
        magnus_expand(A, 0)


def test_lcs_weight_examples():
    assert lcs_weight(A, 4) == 1
    assert lcs_weight(Word.identity(), 4) == EXCEEDS_CAP
    for w in range(1, 6):
        args = [Word.gen(g) for g in LETTERS[:w]]
        assert lcs_weight(left_normed(args), 5) == w


def _rand_word(rng, letters, n):
    return Word((rng.choice(letters), rng.choice((1, -1))) for _ in range(n))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.sampled_from((0, 2, 3)), st.integers(0, 2 ** 32))
def test_magnus_multiplicative(cap, mod, seed):
    rng = random.Random(seed)
    for _ in range(20):
        u, v = _rand_word(rng, [a, b, c], rng.randint(0, 6)), _rand_word(rng, [a, b, c], rng.randint(0, 6))
        assert magnus_expand(u * v, cap, mod) == magnus_expand(u, cap, mod) * magnus_expand(v, cap, mod)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.sampled_from([a, b]), st.sampled_from((1, -1))), max_size=8))
def test_lcs_weight_two_iff_abelian_trivial(raw):
    w = Word(raw)
    weight = lcs_weight(w, 4)
    trivial_abelian = all(w.exponent_sum(g) == 0 for g in (a, b))
    assert (weight == EXCEEDS_CAP or weight >= 2) == trivial_abelian


def test_magnus_series_constant_term():
    s = magnus_expand(_rand_word(random.Random(1), [a, b], 10), 3)
    assert isinstance(s, MagnusSeries) and s.terms[()] == 1
    assert all(len(k) <= 3 for k in s.terms)


# -- class-2 engine


def test_class2_basic_examples():
    G = class2_quotient([a], [A ** 5])
    assert G.abelianization_invariants() == ([5], 0)
    assert G.order_of(G.gen(a)) == 5
    F = Class2Group([a, b])
    assert F.abelianization_invariants() == ([], 2)
    comm = F.commutator(F.gen(a), F.gen(b))
    assert F.order_of(comm) == INFINITE
    assert F.center().contains(comm)
    assert lcs_weight(commutator(A, B), 3) == 2  # Magnus agrees: not in gamma_3
    assert F.order_of(F.identity()) == 1
    assert F.intersect(F.whole(), F.whole()) == F.whole()


def test_class2_mixed_groups_rejected():
    G, H = Class2Group([a, b]), Class2Group([a, b])
    with pytest.raises(ValueError):
        G.gen(a) * H.gen(a)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 6])
def test_pi3_values(q):
    G = pi3_moore_group(q)
    x1x2 = G.commutator(G.element("x[1]"), G.element("x[2]"))
    expected = gcd(2 * q, q * q)
    assert G.order_of(x1x2) == expected
    Z = G.intersect(G.normal_closure(["a[1,2]", "x[1]"]), G.normal_closure(["a[1,2]", "x[1] x[2]^-1"]),
                    G.normal_closure(["x[2]"]))
    assert Z.invariants() == ([expected], 0)
    assert Z.contains(x1x2)
    aq = G.element(f"a[1,2]^{q}")
    assert G.center().contains(aq)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_pi3_five_generator_cross_check(q):
    G = pi3_moore_group(q, five_generators=True)
    x1x2 = G.commutator(G.element("x[1]"), G.element("x[2]"))
    assert G.order_of(x1x2) == gcd(2 * q, q * q)


def test_pi3_order_by_exhaustive_powers():
    # independent oracle: smallest k with [x1,x2]^k trivial, by direct powering
    for q in (2, 3, 4):
        G = pi3_moore_group(q)
        g = G.commutator(G.element("x[1]"), G.element("x[2]"))
        k = next(k for k in range(1, 50) if G.is_identity(g ** k))
        assert k == gcd(2 * q, q * q)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_class2_associativity_and_confluence(seed):
    rng = random.Random(seed)
    G = pi3_moore_group(3)
    gens = G.generators
    xs = [G.element(_rand_word(rng, gens, rng.randint(0, 6))) for _ in range(3)]
    u, v, w = xs
    assert (u * v) * w == u * (v * w)
    assert G.is_identity(u * ~u)
    ws = [_rand_word(rng, gens, rng.randint(0, 6)) for _ in range(2)]
    assert G.element(ws[0] * ws[1]) == G.element(ws[0]) * G.element(ws[1])
    # commutators are central
    cm = G.commutator(u, v)
    assert cm * w == w * cm


def test_class2_report():
    r = pi3_moore_group(2).report({"[x1,x2]": "[x[1], x[2]]"})
    assert r["orders"]["[x1,x2]"] == 4
    assert set(r) == {"generators", "abelianization", "center", "orders"}
