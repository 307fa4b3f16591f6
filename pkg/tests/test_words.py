import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brunnian.words import (
    GroupMap,
    Letter,
    UnknownLetterError,
    UnsupportedClosureError,
    Word,
    all_shapes,
    apply_map,
    commutator,
    eval_bracket,
    free_words,
    in_normal_closure_free_quotient,
    left_comb,
    left_normed,
    letter,
    parse_word,
    right_comb,
)

X = [letter("x", i) for i in (1, 2, 3)]
x1, x2, x3 = (Word.gen(g) for g in X)

raw_words = st.lists(st.tuples(st.sampled_from(X), st.sampled_from((1, -1))), max_size=12)
words = raw_words.map(Word)


def test_cancellation_and_identity():
    assert Word([(X[0], 1), (X[0], -1)]).is_identity()
    assert x1.conjugate(Word.identity()) == x1
    assert x1 ** 3 * x1 ** -3 == Word.identity()
    assert x1 ** 3 == x1 * x1 * x1


def test_commutator_examples():
    assert commutator(x1, x1).is_identity()
    assert commutator(x1, Word.identity()).is_identity()
    c = commutator(x1, x2)
    assert str(c) == "x[1]^-1 x[2]^-1 x[1] x[2]" and len(c) == 4
    assert c == ~x1 * x1.conjugate(x2)  # [a,b] = a^-1 a^b


def test_brackets():
    a, b, c = x1, x2, x3
    assert eval_bracket(1, [a]) == a
    assert eval_bracket(left_comb(3), [a, b, c]) == commutator(commutator(a, b), c)
    assert eval_bracket(right_comb(3), [a, b, c]) == commutator(a, commutator(b, c))
    assert left_normed([a]) == a
    assert left_normed([a, b]) == commutator(a, b)
    assert left_normed([a, b, c]) == eval_bracket(left_comb(3), [a, b, c])
    assert len(all_shapes(4)) == 5  # Catalan
    with pytest.raises(ValueError):
        eval_bracket(left_comb(3), [a, b])
    with pytest.raises(ValueError):
        left_normed([])


def test_text_syntax_roundtrip():
    text = "A[1,2] A'[1,3]^-1 x[2](a0)"
    w = Word.parse(text)
    assert str(w) == text
    assert [g.name for g, _ in w] == ["A", "A'", "x"]
    assert Word.parse("A''[2,3]^3").letters[0] == (letter("A''", 2, 3), 1)
    assert parse_word("[x[1], x[2]]") == commutator(x1, x2)


def test_letter_validation():
    with pytest.raises(ValueError):
        letter("A", 2, 1)
    assert letter("x", 1, 2, tag="a") != letter("x", 1, 2, tag="b")
    assert letter("x", 1, 2, tag="a") == Letter("x", (1, 2), "a")


def test_apply_map_examples():
    f = GroupMap({X[0]: x2, X[1]: x1 * x2})
    assert apply_map(f, Word.identity()).is_identity()
    ident = GroupMap({g: Word.gen(g) for g in X})
    w = x1 * ~x3 * x2
    assert apply_map(ident, w) == w
    from brunnian.braid import face_map

    assert face_map(0, 3)(Word.gen(letter("A", 2, 3))) == Word.gen(letter("A", 1, 2))
    with pytest.raises(UnknownLetterError):
        f(x3)
    assert GroupMap({X[0]: x2}, strict=False)(x3) == x3


def test_normal_closure_examples():
    basis = X[:2]
    assert in_normal_closure_free_quotient(commutator(x1, x2), [x1], basis)
    assert not in_normal_closure_free_quotient(x1, [x2], basis)
    assert in_normal_closure_free_quotient(commutator(x1, x2), [x1 * x2], basis)
    with pytest.raises(UnsupportedClosureError):
        in_normal_closure_free_quotient(x1, [x1 * x1], basis)


@given(words, words, words)
def test_associativity_and_inverse(u, v, w):
    assert (u * v) * w == u * (v * w)
    assert (u * ~u).is_identity()
    assert ~~u == u
    assert len(u * v) <= len(u) + len(v)


@given(raw_words)
def test_reduce_idempotent(raw):
    w = Word(raw)
    assert Word(w.letters) == w
    assert all(not (a[0] == b[0] and a[1] == -b[1]) for a, b in zip(w.letters, w.letters[1:]))


@given(words)
def test_parse_roundtrip(w):
    assert Word.parse(str(w)) == w


@settings(max_examples=50)
@given(st.integers(0, 2 ** 32))
def test_apply_map_homomorphism(seed):
    rng = random.Random(seed)
    table = {g: Word((rng.choice(X), rng.choice((1, -1))) for _ in range(rng.randint(0, 4))) for g in X}
    f = GroupMap(table)
    for _ in range(20):
        u = Word((rng.choice(X), rng.choice((1, -1))) for _ in range(rng.randint(0, 8)))
        v = Word((rng.choice(X), rng.choice((1, -1))) for _ in range(rng.randint(0, 8)))
        assert f(u * v) == f(u) * f(v)
        assert f(~u) == ~f(u)


@settings(max_examples=30)
@given(st.integers(2, 6), st.integers(0, 2 ** 32))
def test_left_comb_equals_left_normed(t, seed):
    rng = random.Random(seed)
    args = [Word((rng.choice(X), rng.choice((1, -1))) for _ in range(rng.randint(1, 3))) for _ in range(t)]
    assert eval_bracket(left_comb(t), args) == left_normed(args)


def _conjugate_products(gens, alphabet, conj_len, factors):
    conj = list(free_words(alphabet, conj_len))
    pieces = {g.conjugate(c) for g in gens for c in conj} | {(~g).conjugate(c) for g in gens for c in conj}
    out = {Word.identity()}
    layer = {Word.identity()}
    for _ in range(factors):
        layer = {a * p for a in layer for p in pieces}
        out |= layer
    return out


@pytest.mark.parametrize("closure", [[x1], [x2], [x1 * x2]])
def test_normal_closure_against_search(closure):
    basis = X[:2]
    found = _conjugate_products(closure, basis, 2, 3)
    short = [w for w in found if len(w) <= 6]
    assert all(in_normal_closure_free_quotient(w, closure, basis) for w in short)
    # every member of length <= 3 is found by the search
    for w in free_words(basis, 3):
        if in_normal_closure_free_quotient(w, closure, basis):
            assert w in found, w
