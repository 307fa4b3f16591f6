import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brunnian.braid import (
    GeometricBraid,
    NotPureError,
    artin_automorphism,
    artin_images,
    braid_equal,
    burau_matrix,
    cable,
    degeneracy_formula,
    degeneracy_map,
    embed_generator,
    embed_word,
    face_formula,
    face_map,
    full_twist,
    geometric_double_strand,
    geometric_remove_strand,
    is_brunnian,
    is_trivial,
    matmul_mod,
    pure_braid_relations,
    pure_generators,
    pure_relation_count,
    random_pure_word,
)
from brunnian.simplicial import alpha_k, theta, x_word
from brunnian.words import Word, letter


def A(i, j):
    return letter("A", i, j)


def gb(text, n):
    return GeometricBraid.parse(text, n)


def test_embed_generator_examples():
    assert embed_generator(A(1, 2), 2) == gb("s1^2", 2)
    assert embed_generator(A(1, 3), 3) == gb("s2 s1^2 s2^-1", 3)
    assert embed_generator(A(2, 3), 3) == gb("s2^2", 3)
    for n in range(2, 7):
        assert all(embed_generator(g, n).is_pure() for g in pure_generators(n))
    with pytest.raises(ValueError):
        embed_generator(A(1, 4), 3)


def test_artin_examples():
    assert artin_images(GeometricBraid.identity(3)) == ((1,), (2,), (3,))
    # sigma_1^2 on F_2: t1 -> (t1 t2) t1 (t1 t2)^-1
    assert artin_images(gb("s1^2", 2))[0] == (1, 2, 1, -2, -1)
    f = artin_automorphism(gb("s1^2", 2))
    t1 = letter("t", 1)
    assert str(f(Word.gen(t1))) == "t[1] t[2] t[1] t[2]^-1 t[1]^-1"


def test_pure_braids_fix_boundary_word():
    for n in range(2, 7):
        for g in pure_generators(n):
            imgs = artin_images(embed_generator(g, n))
            prod = tuple(x for img in imgs for x in img)
            reduced = []
            for x in prod:
                if reduced and reduced[-1] == -x:
                    reduced.pop()
                else:
                    reduced.append(x)
            assert tuple(reduced) == tuple(range(1, n + 1))
            for s, img in enumerate(imgs, start=1):
                # each t_s goes to a conjugate of t_s
                k = len(img) // 2
                assert img[k] == s and tuple(-x for x in reversed(img[:k])) == img[k + 1:]


def test_braid_equal_examples():
    b = gb("s1 s2^-1 s1", 3)
    assert braid_equal(b, b)
    assert braid_equal(gb("s1 s2 s1", 3), gb("s2 s1 s2", 3))
    assert not braid_equal(gb("s1^2", 2), GeometricBraid.identity(2))
    with pytest.raises(ValueError):
        braid_equal(gb("s1", 2), gb("s1", 3))


def test_text_syntax():
    b = gb("s1 s2^-1 s1", 3)
    assert str(b) == "s1 s2^-1 s1"
    assert GeometricBraid.parse(str(b), 3) == b


def test_formula_examples():
    assert face_formula(0, A(1, 2)).is_identity()
    assert face_formula(0, A(2, 3)) == Word.gen(A(1, 2))
    assert degeneracy_formula(0, A(1, 2)) == Word.parse("A[1,3] A[2,3]")
    assert degeneracy_formula(1, A(1, 2)) == Word.parse("A[1,2] A[1,3]")
    assert face_formula(2, A(1, 3)).is_identity()


def test_geometric_examples():
    one = GeometricBraid.identity(3)
    assert all(geometric_remove_strand(one, k) == GeometricBraid.identity(2) for k in (1, 2, 3))
    assert is_trivial(geometric_remove_strand(embed_generator(A(1, 2), 2), 1))
    assert is_trivial(geometric_remove_strand(embed_generator(A(1, 3), 3), 3))
    assert geometric_double_strand(one, 2) == GeometricBraid.identity(4)
    a12 = embed_generator(A(1, 2), 2)
    assert braid_equal(geometric_double_strand(a12, 1), embed_word(Word.parse("A[1,3] A[2,3]"), 3))
    assert braid_equal(geometric_double_strand(a12, 2), embed_word(Word.parse("A[1,2] A[1,3]"), 3))
    with pytest.raises(NotPureError):
        geometric_remove_strand(gb("s1", 2), 1)


def test_cable_examples():
    a12 = embed_generator(A(1, 2), 2)
    assert cable(a12, (1, 1)) == a12
    for n in range(1, 5):
        for i in range(1, n + 1):
            assert braid_equal(cable(a12, (i, n + 1 - i)), embed_word(theta(x_word(i, n)), n + 1))
    with pytest.raises(ValueError):
        cable(a12, (0, 2))


def test_brunnian_examples():
    assert is_brunnian(GeometricBraid.identity(3))
    assert not is_brunnian(embed_generator(A(1, 2), 3))
    sizes = {}
    for k in (4, 5, 6):
        w = theta(alpha_k(k))
        b = embed_word(w, k - 1)
        assert is_brunnian(b) and not is_trivial(b)
        sizes[k] = (len(w), len(b))
    assert sizes == {4: (16, 36), 5: (68, 240), 6: (224, 1032)}  # [DERIVED] frozen sizes


def test_full_twist_examples():
    assert braid_equal(full_twist(2), embed_generator(A(1, 2), 2))
    for n in range(3, 6):
        d = full_twist(n)
        for g in pure_generators(n):
            a = embed_generator(g, n)
            assert is_trivial(~d * ~a * d * a)
        for k in range(1, n + 1):
            assert braid_equal(geometric_remove_strand(d, k), full_twist(n - 1))
    with pytest.raises(ValueError):
        full_twist(1)


def test_pure_braid_relations():
    assert pure_braid_relations(2) == []
    assert [pure_relation_count(n) for n in (2, 3, 4, 5)] == [0, 2, 11, 35]
    for n in range(3, 6):
        rels = pure_braid_relations(n)
        assert len(rels) == pure_relation_count(n)
        assert all(is_trivial(embed_word(r, n)) for r in rels)


def test_burau_is_a_homomorphism():
    rng = random.Random(3)
    for _ in range(10):
        u = GeometricBraid(4, [rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(6)])
        v = GeometricBraid(4, [rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(6)])
        assert burau_matrix(u * v) == matmul_mod(burau_matrix(u), burau_matrix(v))


@settings(max_examples=25, deadline=None)
@given(st.integers(3, 5), st.integers(0, 2 ** 32))
def test_formulas_match_geometry_on_random_words(n, seed):
    rng = random.Random(seed)
    w = random_pure_word(n, 5, rng)
    b = embed_word(w, n)
    for t in range(n):
        assert braid_equal(embed_word(face_map(t, n)(w), n - 1), geometric_remove_strand(b, t + 1))
        assert braid_equal(embed_word(degeneracy_map(t, n)(w), n + 1), geometric_double_strand(b, t + 1))


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 5), st.integers(0, 2 ** 32))
def test_braid_equal_is_group_compatible(n, seed):
    rng = random.Random(seed)
    u = GeometricBraid(n, [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 8))])
    v = GeometricBraid(n, [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 8))])
    assert is_trivial(u * ~u)
    assert braid_equal(u * v, u * v)
    assert braid_equal(u, v) == is_trivial(u * ~v)
