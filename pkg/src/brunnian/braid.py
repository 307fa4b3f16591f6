"""
Pure braids: geometric crossings, the Artin action, strand surgery.

Equality of braids is decided through the Artin representation
``B_n -> Aut(F_n)``, which is faithful.  A crossing ``s_i`` acts by

    t_i -> t_i t_{i+1} t_i^-1,   t_{i+1} -> t_i

and a braid word acts by composing crossings left to right.  Strands are
numbered from 1; ``A[i,j]`` is embedded as
``(s_{j-1} ... s_{i+1}) s_i^2 (s_{j-1} ... s_{i+1})^-1``.
"""

from __future__ import annotations

import random
import re
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .words import GroupMap, Letter, Word, letter

__all__ = [
    "GeometricBraid",
    "embed_generator",
    "embed_word",
    "artin_images",
    "artin_automorphism",
    "braid_equal",
    "is_trivial",
    "face_formula",
    "degeneracy_formula",
    "face_map",
    "degeneracy_map",
    "pure_generators",
    "geometric_remove_strand",
    "geometric_double_strand",
    "cable",
    "is_brunnian",
    "full_twist",
    "pure_braid_relations",
    "pure_relation_count",
    "random_pure_word",
    "burau_matrix",
    "matmul_mod",
    "is_identity_matrix",
    "NotPureError",
]


class NotPureError(ValueError):
    pass


def _free_reduce(seq: Iterable[int]) -> tuple:
    out: list = []
    for c in seq:
        if out and out[-1] == -c:
            out.pop()
        else:
            out.append(c)
    return tuple(out)


class GeometricBraid:
    """A braid on ``n`` strands as a freely reduced tuple of signed crossings.

    ``+i`` is ``s_i`` and ``-i`` is ``s_i^-1``.
    """

    __slots__ = ("n", "crossings", "_perm")

    def __init__(self, n: int, crossings: Iterable[int] = ()):
        crossings = _free_reduce(int(c) for c in crossings)
        for c in crossings:
            if not 1 <= abs(c) <= n - 1:
                raise ValueError(f"crossing {c} out of range for {n} strands")
        self.n = n
        self.crossings = crossings
        self._perm = None

    @classmethod
    def identity(cls, n: int) -> "GeometricBraid":
        return cls(n, ())

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "GeometricBraid":
        """Parse ``s1 s2^-1 s1^3``; ``1`` or the empty string is the identity."""
        crossings: list = []
        for tok in text.split():
            if tok == "1":
                continue
            m = re.fullmatch(r"s(\d+)(?:\^(-?\d+))?", tok)
            if m is None:
                raise ValueError(f"bad crossing token {tok!r}")
            i, k = int(m.group(1)), int(m.group(2) or 1)
            crossings.extend([i if k > 0 else -i] * abs(k))
        if n is None:
            n = max((abs(c) for c in crossings), default=0) + 1
        return cls(n, crossings)

    def __str__(self):
        if not self.crossings:
            return "1"
        runs: list = []
        for c in self.crossings:
            if runs and runs[-1][0] == abs(c) and (runs[-1][1] > 0) == (c > 0):
                runs[-1][1] += 1 if c > 0 else -1
            else:
                runs.append([abs(c), 1 if c > 0 else -1])
        return " ".join(f"s{i}" if k == 1 else f"s{i}^{k}" for i, k in runs)

    def __repr__(self):
        return f"GeometricBraid({self.n}, {str(self)!r})"

    def __mul__(self, other: "GeometricBraid") -> "GeometricBraid":
        if self.n != other.n:
            raise ValueError("strand mismatch")
        return GeometricBraid(self.n, self.crossings + other.crossings)

    def __invert__(self) -> "GeometricBraid":
        return GeometricBraid(self.n, tuple(-c for c in reversed(self.crossings)))

    def __pow__(self, k: int) -> "GeometricBraid":
        base = self if k >= 0 else ~self
        return GeometricBraid(self.n, base.crossings * abs(k))

    def __len__(self):
        return len(self.crossings)

    def __eq__(self, other):
        return isinstance(other, GeometricBraid) and self.n == other.n and self.crossings == other.crossings

    def __hash__(self):
        return hash((self.n, self.crossings))

    @property
    def permutation(self) -> tuple:
        """``perm[p]`` is the (0-based) strand ending at position ``p``."""
        if self._perm is None:
            pos = list(range(self.n))
            for c in self.crossings:
                i = abs(c) - 1
                pos[i], pos[i + 1] = pos[i + 1], pos[i]
            self._perm = tuple(pos)
        return self._perm

    def is_pure(self) -> bool:
        return self.permutation == tuple(range(self.n))


# ---------------------------------------------------------------------------
# Artin representation


def _mul(a: tuple, b: tuple) -> tuple:
    k = 0
    la = len(a)
    while k < la and k < len(b) and a[la - 1 - k] == -b[k]:
        k += 1
    return a[: la - k] + b[k:]


def _inv(a: tuple) -> tuple:
    return tuple(-x for x in reversed(a))


def artin_images(b: GeometricBraid) -> tuple:
    """Images of ``t_1..t_n`` as freely reduced int tuples (``+-s`` is ``t_s^{+-1}``)."""
    imgs = [(s,) for s in range(1, b.n + 1)]
    for c in b.crossings:
        i = abs(c) - 1
        u, v = imgs[i], imgs[i + 1]
        if c > 0:
            imgs[i] = _mul(_mul(u, v), _inv(u))
            imgs[i + 1] = u
        else:
            imgs[i] = v
            imgs[i + 1] = _mul(_mul(_inv(v), u), v)
    return tuple(imgs)


def artin_automorphism(b: GeometricBraid, name: str = "t") -> GroupMap:
    """The Artin automorphism as a :class:`GroupMap` on letters ``t[s]``."""
    gens = [Letter(name, (s,)) for s in range(1, b.n + 1)]
    table = {}
    for g, img in zip(gens, artin_images(b)):
        table[g] = Word((gens[abs(x) - 1], 1 if x > 0 else -1) for x in img)
    return GroupMap(table, name=f"artin({b})")


_BURAU_PRIME = 2_147_483_647
_BURAU_T = 48_271


def burau_matrix(b: GeometricBraid, t: int = _BURAU_T, p: int = _BURAU_PRIME) -> list:
    """Unreduced Burau matrix of ``b`` at ``t`` modulo ``p`` (list of rows).

    A homomorphism, so a non-identity result certifies ``b != 1``.
    """
    n = b.n
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    tinv = pow(t, -1, p)
    for c in b.crossings:
        i = abs(c) - 1
        for row in m:
            u, v = row[i], row[i + 1]
            if c > 0:
                row[i], row[i + 1] = (u * (1 - t) + v) % p, (u * t) % p
            else:
                row[i], row[i + 1] = (v * tinv) % p, (u + v * (1 - tinv)) % p
    return m


def matmul_mod(a: list, b: list, p: int = _BURAU_PRIME) -> list:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % p for col in cols] for row in a]


def is_identity_matrix(m: list) -> bool:
    return all(v == (1 if i == j else 0) for i, row in enumerate(m) for j, v in enumerate(row))


def _burau_is_identity(b: GeometricBraid) -> bool:
    return is_identity_matrix(burau_matrix(b))


def is_trivial(b: GeometricBraid) -> bool:
    if not b.crossings:
        return True
    if not b.is_pure() or not _burau_is_identity(b):
        return False
    return all(img == (s,) for s, img in enumerate(artin_images(b), start=1))


def braid_equal(u: GeometricBraid, v: GeometricBraid) -> bool:
    if u.n != v.n:
        raise ValueError(f"strand mismatch: {u.n} vs {v.n}")
    if u.crossings == v.crossings:
        return True
    if u.permutation != v.permutation or burau_matrix(u) != burau_matrix(v):
        return False
    # images of u and v separately stay far shorter than those of u * v^-1
    return artin_images(u) == artin_images(v)


# ---------------------------------------------------------------------------
# pure braid generators and the simplicial formulas


def pure_generators(n: int, name: str = "A") -> list:
    return [letter(name, i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


@lru_cache(maxsize=None)
def _generator_crossings(i: int, j: int) -> tuple:
    conj = tuple(range(j - 1, i, -1))
    return conj + (i, i) + tuple(-c for c in reversed(conj))


def embed_generator(g: Letter, n: int) -> GeometricBraid:
    i, j = g.indices
    if not 1 <= i < j <= n:
        raise ValueError(f"{g} is not a generator of P_{n}")
    return GeometricBraid(n, _generator_crossings(i, j))


def embed_word(w: Word, n: int) -> GeometricBraid:
    """Crossing word of a pure braid word over ``A``-family letters (any prime)."""
    out: list = []
    for g, e in w.letters:
        i, j = g.indices
        if not 1 <= i < j <= n:
            raise ValueError(f"{g} is not a generator of P_{n}")
        cr = _generator_crossings(i, j)
        out.extend(cr if e > 0 else tuple(-c for c in reversed(cr)))
    return GeometricBraid(n, out)


def face_formula(t: int, g: Letter) -> Word:
    """Image of ``A[i,j]`` under removal of strand ``t+1``."""
    i, j = g.indices
    s = t + 1
    if s < i:
        return Word.gen(g._replace(indices=(i - 1, j - 1)))
    if s == i or s == j:
        return Word.identity()
    if s < j:
        return Word.gen(g._replace(indices=(i, j - 1)))
    return Word.gen(g)


def degeneracy_formula(t: int, g: Letter) -> Word:
    """Image of ``A[i,j]`` under doubling of strand ``t+1``."""
    i, j = g.indices
    s = t + 1

    def a(p, q):
        return Word.gen(g._replace(indices=(p, q)))

    if s < i:
        return a(i + 1, j + 1)
    if s == i:
        return a(i, j + 1) * a(i + 1, j + 1)
    if s < j:
        return a(i, j + 1)
    if s == j:
        return a(i, j) * a(i, j + 1)
    return Word.gen(g)


def _check_face_index(t: int, n: int):
    if not 0 <= t <= n - 1:
        raise ValueError(f"face/degeneracy index {t} out of range for {n} strands")


def face_map(t: int, n: int, names: Sequence[str] = ("A",)) -> GroupMap:
    """``d_t : P_n -> P_{n-1}`` on the letters of every family in ``names``."""
    _check_face_index(t, n)
    return GroupMap({g: face_formula(t, g) for nm in names for g in pure_generators(n, nm)}, name=f"d{t}")


def degeneracy_map(t: int, n: int, names: Sequence[str] = ("A",)) -> GroupMap:
    """``s_t : P_n -> P_{n+1}``."""
    _check_face_index(t, n)
    return GroupMap({g: degeneracy_formula(t, g) for nm in names for g in pure_generators(n, nm)}, name=f"s{t}")


# ---------------------------------------------------------------------------
# geometric strand surgery


def geometric_remove_strand(b: GeometricBraid, k: int) -> GeometricBraid:
    """Delete strand ``k`` (1-based, counted at the top) from a pure braid."""
    if not 1 <= k <= b.n:
        raise ValueError(f"strand {k} out of range for {b.n} strands")
    if not b.is_pure():
        raise NotPureError("strand removal needs a pure braid")
    pos = k - 1
    out = []
    for c in b.crossings:
        i = abs(c) - 1
        if i == pos:
            pos = i + 1
        elif i + 1 == pos:
            pos = i
        else:
            shift = 1 if pos < i else 0
            out.append(c - shift if c > 0 else c + shift)
    return GeometricBraid(b.n - 1, out)


def geometric_double_strand(b: GeometricBraid, k: int) -> GeometricBraid:
    """Replace strand ``k`` by two parallel strands, the new one on its right."""
    if not 1 <= k <= b.n:
        raise ValueError(f"strand {k} out of range for {b.n} strands")
    pos = k - 1
    out = []
    for c in b.crossings:
        i = abs(c) - 1
        sgn = 1 if c > 0 else -1
        if i == pos:
            # ribbon at i, i+1 crosses the strand at i+2
            out += [sgn * (i + 2), sgn * (i + 1)]
            pos = i + 1
        elif i + 1 == pos:
            # strand at i crosses the ribbon at i+1, i+2
            out += [sgn * (i + 1), sgn * (i + 2)]
            pos = i
        else:
            shift = 1 if i > pos else 0
            out.append(sgn * (i + 1 + shift))
    return GeometricBraid(b.n + 1, out)


def cable(b: GeometricBraid, multiplicities: Sequence[int]) -> GeometricBraid:
    """Replace strand ``s`` by ``multiplicities[s-1]`` parallel strands."""
    if len(multiplicities) != b.n:
        raise ValueError("one multiplicity per strand is required")
    if any(m < 1 for m in multiplicities):
        raise ValueError("multiplicities must be at least 1")
    if not b.is_pure():
        raise NotPureError("cabling needs a pure braid")
    out = b
    for s in range(b.n, 0, -1):
        for _ in range(multiplicities[s - 1] - 1):
            out = geometric_double_strand(out, s)
    return out


def is_brunnian(b: GeometricBraid) -> bool:
    if not b.is_pure():
        raise NotPureError("Brunnian test needs a pure braid")
    return all(is_trivial(geometric_remove_strand(b, k)) for k in range(1, b.n + 1))


def full_twist(n: int) -> GeometricBraid:
    """``(s_1 ... s_{n-1})^n``, generating the centre of ``P_n``."""
    if n < 2:
        raise ValueError("full twist needs n >= 2")
    return GeometricBraid(n, tuple(range(1, n)) * n)


def pure_braid_relations(n: int, name: str = "A") -> list:
    """Relators of the standard presentation of ``P_n``.

    For ``r < s`` and ``i < j`` the conjugate ``A_rs^-1 A_ij A_rs`` is
    rewritten in the four standard patterns; each relator is
    ``conjugate * rewritten^-1``.
    """
    if n < 2:
        raise ValueError("P_n needs n >= 2")

    def a(p, q):
        return Word.gen(letter(name, p, q))

    rels = []
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for r, s in pairs:
        for i, j in pairs:
            if r < s < i < j or i < r < s < j:
                rhs = a(i, j)
            elif r < s == i < j:
                rhs = a(r, j) * a(i, j) * ~a(r, j)
            elif r == i < s < j:
                rhs = a(r, j) * a(s, j) * a(i, j) * ~a(s, j) * ~a(r, j)
            elif r < i < s < j:
                c = a(r, j) * a(s, j) * ~a(r, j) * ~a(s, j)
                rhs = c * a(i, j) * ~c
            else:
                continue
            rels.append(a(i, j).conjugate(a(r, s)) * ~rhs)
    return rels


def pure_relation_count(n: int) -> int:
    return 3 * comb(n, 4) + 2 * comb(n, 3)


def random_pure_word(n: int, length: int, rng: random.Random, name: str = "A") -> Word:
    gens = pure_generators(n, name)
    return Word((rng.choice(gens), rng.choice((1, -1))) for _ in range(length))
