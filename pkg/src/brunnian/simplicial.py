"""
Simplicial groups used by the braid models of loop spaces.

Sphere cells of ``S^k`` in dimension ``n`` are monotone surjections
``(i_0 <= ... <= i_n)`` onto ``{0..k}``; anything else is the basepoint,
which is the identity of the Milnor group ``F[S^k]``.  In ``F[S^1]_n`` the
cell with ``i`` zeros is called ``x_i`` (so ``x_0 = x_{n+1} = 1``), which
is the cable of ``A[1,2]`` with multiplicities ``(i, n+1-i)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Sequence

from .braid import (
    GeometricBraid,
    braid_equal,
    cable,
    degeneracy_map,
    embed_word,
    face_map,
    is_trivial,
    pure_generators,
)
from .words import GroupMap, Letter, Word, left_normed, letter

__all__ = [
    "SphereCell",
    "sphere_cells",
    "cell_face",
    "cell_degeneracy",
    "cell_letter",
    "x_cell",
    "degeneracy_path",
    "SimplicialGroupSpec",
    "milnor_spec",
    "ap_spec",
    "g_script_spec",
    "f_tilde_spec",
    "delta_bar_spec",
    "check_simplicial_identities",
    "moore_membership",
    "theta",
    "theta_image",
    "alpha_k",
    "alpha_bar_k",
    "phi_alpha",
    "phi_alpha_image",
    "phi_alpha_geometric",
    "f_tilde_to_milnor",
    "literal_z_elements",
    "z_top",
    "power_map",
    "delta_bar_cells",
    "as_x_text",
    "check_simplicial_map",
    "x_word",
    "y_cables",
    "injectivity_spot_check",
]


# ---------------------------------------------------------------------------
# sphere cells


@dataclass(frozen=True)
class SphereCell:
    k: int
    data: tuple

    @property
    def dim(self) -> int:
        return len(self.data) - 1

    def letter(self) -> Letter:
        return Letter("sigma", self.data)


def _is_surjective(seq: Sequence[int], k: int) -> bool:
    return set(seq) == set(range(k + 1))


def sphere_cells(k: int, n: int) -> list:
    """Non-basepoint cells of ``S^k`` in dimension ``n`` (lexicographic)."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    if n < k:
        return []
    out = []
    # choose the k positions (out of n) where the value steps up
    for steps in combinations(range(1, n + 1), k):
        seq, v = [], 0
        for pos in range(n + 1):
            if v < k and pos == steps[v]:
                v += 1
            seq.append(v)
        out.append(SphereCell(k, tuple(seq)))
    out.sort(key=lambda c: c.data)
    return out


def cell_face(c: SphereCell, t: int) -> SphereCell | None:
    if not 0 <= t <= c.dim:
        raise ValueError(f"face index {t} out of range in dimension {c.dim}")
    seq = c.data[:t] + c.data[t + 1:]
    return SphereCell(c.k, seq) if seq and _is_surjective(seq, c.k) else None


def cell_degeneracy(c: SphereCell, t: int) -> SphereCell:
    if not 0 <= t <= c.dim:
        raise ValueError(f"degeneracy index {t} out of range in dimension {c.dim}")
    return SphereCell(c.k, c.data[: t + 1] + c.data[t:])


def cell_letter(c: SphereCell | None) -> Word:
    return Word.identity() if c is None else Word.gen(c.letter())


def _cell_of(g: Letter) -> SphereCell:
    return SphereCell(max(g.indices), g.indices)


def x_cell(i: int, n: int) -> SphereCell | None:
    """``x_i`` in ``F[S^1]_n``: ``i`` zeros then ``n+1-i`` ones."""
    if i <= 0 or i >= n + 1:
        return None
    return SphereCell(1, (0,) * i + (1,) * (n + 1 - i))


def x_word(i: int, n: int) -> Word:
    return cell_letter(x_cell(i, n))


def degeneracy_path(data: Sequence[int]) -> list:
    """Indices ``j_1, j_2, ...`` with ``cell = ... s_{j_2} s_{j_1} sigma_k``.

    Applied in list order, each entry doubles one coordinate.
    """
    seq = list(data)
    path = []
    while len(seq) > len(set(seq)):
        j = max(i for i in range(len(seq) - 1) if seq[i] == seq[i + 1])
        path.append(j)
        del seq[j]
    return list(reversed(path))


def as_x_text(w: Word) -> str:
    """Render ``F[S^1]`` words with the ``x[i]`` names."""
    def rename(g):
        if g.name == "sigma" and max(g.indices) == 1:
            return Letter("x", (g.indices.count(0),), g.tag)
        return g

    return str(w.map_letters(rename))


# ---------------------------------------------------------------------------
# simplicial group specifications


@dataclass
class SimplicialGroupSpec:
    """Per-dimension alphabets, face and degeneracy tables, equality oracle."""

    name: str
    alphabet: Callable[[int], list]
    face_image: Callable[[int, Letter, int], Word]
    degeneracy_image: Callable[[int, Letter, int], Word]
    equal: Callable[[Word, Word, int], bool] = field(default=lambda u, v, n: u == v)
    min_dim: int = 0
    _cache: dict = field(default_factory=dict, repr=False)

    def face(self, t: int, n: int) -> GroupMap:
        key = ("d", t, n)
        if key not in self._cache:
            if not 0 <= t <= n:
                raise ValueError(f"face index {t} out of range in dimension {n}")
            self._cache[key] = GroupMap({g: self.face_image(t, g, n) for g in self.alphabet(n)}, name=f"d{t}")
        return self._cache[key]

    def degeneracy(self, t: int, n: int) -> GroupMap:
        key = ("s", t, n)
        if key not in self._cache:
            if not 0 <= t <= n:
                raise ValueError(f"degeneracy index {t} out of range in dimension {n}")
            self._cache[key] = GroupMap(
                {g: self.degeneracy_image(t, g, n) for g in self.alphabet(n)}, name=f"s{t}"
            )
        return self._cache[key]

    def d(self, t: int, w: Word, n: int) -> Word:
        return self.face(t, n)(w)

    def s(self, t: int, w: Word, n: int) -> Word:
        return self.degeneracy(t, n)(w)

    def dump(self, n_max: int) -> dict:
        out = {"name": self.name, "dimensions": {}}
        for n in range(self.min_dim, n_max + 1):
            gens = self.alphabet(n)
            out["dimensions"][str(n)] = {
                "alphabet": [str(g) for g in gens],
                "faces": {str(t): {str(g): str(self.face(t, n).image(g)) for g in gens} for t in range(n + 1) if n > 0},
                "degeneracies": {str(t): {str(g): str(self.degeneracy(t, n).image(g)) for g in gens} for t in range(n + 1)},
            }
        return out


def milnor_spec(k: int) -> SimplicialGroupSpec:
    """Milnor's ``F[S^k]``."""

    def alphabet(n):
        return [c.letter() for c in sphere_cells(k, n)]

    def fi(t, g, n):
        return cell_letter(cell_face(_cell_of(g), t))

    def si(t, g, n):
        return cell_letter(cell_degeneracy(_cell_of(g), t))

    return SimplicialGroupSpec(f"F[S^{k}]", alphabet, fi, si, min_dim=k)


def _braid_face(t, g, n):
    return face_map(t, n + 1, (g.name,)).image(g)


def _braid_degeneracy(t, g, n):
    return degeneracy_map(t, n + 1, (g.name,)).image(g)


def _tagged(table_fn):
    def f(t, g, n):
        return table_fn(t, g.with_tag(None), n).map_letters(lambda h: h.with_tag(g.tag))
    return f


def ap_spec(names: Sequence[str] = ("A",)) -> SimplicialGroupSpec:
    """``AP_n = P_{n+1}`` (one or several copies), equality via the Artin action."""

    def alphabet(n):
        return [g for nm in names for g in pure_generators(n + 1, nm)]

    def equal(u, v, n):
        if u == v:
            return True
        return braid_equal(embed_word(u, n + 1), embed_word(v, n + 1))

    return SimplicialGroupSpec("AP", alphabet, _braid_face, _braid_degeneracy, equal)


def g_script_spec(copies: Sequence[str] = ("a",)) -> SimplicialGroupSpec:
    """Free simplicial group on ``x[i,j](c)`` for each copy tag ``c``."""

    def alphabet(n):
        return [g.with_tag(c) for c in copies for g in pure_generators(n + 1, "x")]

    return SimplicialGroupSpec("G*J", alphabet, _tagged(_braid_face), _tagged(_braid_degeneracy))


def f_tilde_spec() -> SimplicialGroupSpec:
    """Free simplicial group with ``z_1..z_{n+1}`` in dimension ``n``."""

    def z(i):
        return Word.gen(letter("z", i))

    def alphabet(n):
        return [letter("z", i) for i in range(1, n + 2)]

    def fi(j, g, n):
        k = g.indices[0]
        if k < j + 1:
            return z(k)
        if k == j + 1:
            return Word.identity()
        return z(k - 1)

    def si(j, g, n):
        k = g.indices[0]
        if k < j + 1:
            return z(k)
        if k == j + 1:
            return z(j + 1) * z(j + 2)
        return z(k + 1)

    return SimplicialGroupSpec("F~", alphabet, fi, si)


def delta_bar_cells(k: int, n: int) -> list:
    """Non-basepoint cells of ``Delta[k]`` modulo the horn away from face 0.

    Monotone sequences in ``{0..k}`` that contain every value ``1..k``.
    """
    out = []
    for steps in combinations(range(n + 1 + k), k):
        # stars and bars: n+1 entries with values 0..k
        seq, v = [], 0
        for slot in range(n + 1 + k):
            if slot in steps:
                v += 1
            else:
                seq.append(v)
        if set(range(1, k + 1)) <= set(seq):
            out.append(tuple(seq))
    return sorted(out)


def delta_bar_spec(k: int, copies: Sequence[str] = ("a",)) -> SimplicialGroupSpec:
    """``F`` of one or several copies of that quotient glued along the ``0``-free cells.

    Cells lacking ``0`` are shared (no tag); the others carry a copy tag.
    """

    def mk(seq, tag):
        return Letter("delta", tuple(seq), None if 0 not in seq else tag)

    def alphabet(n):
        out = []
        cells = delta_bar_cells(k, n)
        for seq in cells:
            if 0 not in seq:
                out.append(mk(seq, None))
        for c in copies:
            out += [mk(seq, c) for seq in cells if 0 in seq]
        return out

    def fi(t, g, n):
        seq = g.indices[:t] + g.indices[t + 1:]
        if not set(range(1, k + 1)) <= set(seq):
            return Word.identity()
        return Word.gen(mk(seq, g.tag))

    def si(t, g, n):
        seq = g.indices[: t + 1] + g.indices[t:]
        return Word.gen(mk(seq, g.tag))

    return SimplicialGroupSpec(f"F[Dbar[{k}]]", alphabet, fi, si)


def z_top(k: int, copies: tuple = ("a", "b")) -> Word:
    """``sigma sigma'^-1`` in dimension ``k-1`` of the doubled quotient complex."""
    top = tuple(range(k))
    return Word.gen(Letter("delta", top, copies[0])) * ~Word.gen(Letter("delta", top, copies[1]))


def power_map(q: int, spec: SimplicialGroupSpec, n: int) -> GroupMap:
    """``F[q]``: every generator goes to its ``q``-th power."""
    return GroupMap({g: Word.gen(g, q) for g in spec.alphabet(n)}, name=f"F[{q}]")


# ---------------------------------------------------------------------------
# identity checking and Moore complexes


def check_simplicial_identities(spec: SimplicialGroupSpec, n_max: int, equal=None) -> dict:
    """Check the face, degeneracy and mixed identities on every generator.

    Families: ``dd`` (``d_i d_j = d_j d_{i+1}``, ``i >= j``), ``ss``
    (``s_i s_j = s_{j+1} s_i``, ``i <= j``) and ``ds`` (``d_i s_j``).
    Every instance is checked; the first failure is kept as a witness.
    """
    eq = equal or spec.equal
    stats = {fam: {"checked": 0, "failed": 0} for fam in ("dd", "ss", "ds")}
    witness = None

    def record(fam, ok, g, n, idx, lhs, rhs):
        nonlocal witness
        stats[fam]["checked"] += 1
        if not ok:
            stats[fam]["failed"] += 1
            if witness is None:
                witness = {
                    "identity": fam, "generator": str(g), "dimension": n,
                    "indices": list(idx), "lhs": str(lhs), "rhs": str(rhs),
                }

    for n in range(spec.min_dim, n_max + 1):
        for g in spec.alphabet(n):
            w = Word.gen(g)
            for j in range(n):
                for i in range(j, n):
                    lhs = spec.d(i, spec.d(j, w, n), n - 1)
                    rhs = spec.d(j, spec.d(i + 1, w, n), n - 1)
                    record("dd", eq(lhs, rhs, n - 2), g, n, (i, j), lhs, rhs)
            for j in range(n + 1):
                for i in range(j + 1):
                    lhs = spec.s(i, spec.s(j, w, n), n + 1)
                    rhs = spec.s(j + 1, spec.s(i, w, n), n + 1)
                    record("ss", eq(lhs, rhs, n + 2), g, n, (i, j), lhs, rhs)
            for j in range(n + 1):
                sw = spec.s(j, w, n)
                for i in range(n + 2):
                    lhs = spec.d(i, sw, n + 1)
                    if i < j:
                        rhs = spec.s(j - 1, spec.d(i, w, n), n - 1)
                    elif i in (j, j + 1):
                        rhs = w
                    else:
                        rhs = spec.s(j, spec.d(i - 1, w, n), n - 1)
                    record("ds", eq(lhs, rhs, n), g, n, (i, j), lhs, rhs)
    return {
        "spec": spec.name,
        "passed": witness is None,
        "checked": sum(v["checked"] for v in stats.values()),
        "families": stats,
        "counterexample": witness,
    }


def moore_membership(spec: SimplicialGroupSpec, w: Word, n: int, equal=None) -> str:
    """``"cycle"``, ``"chain"`` or ``"neither"``; chains kill ``d_1..d_n``."""
    eq = equal or spec.equal
    one = Word.identity()
    if not all(eq(spec.d(i, w, n), one, n - 1) for i in range(1, n + 1)):
        return "neither"
    return "cycle" if eq(spec.d(0, w, n), one, n - 1) else "chain"


# ---------------------------------------------------------------------------
# the maps Theta, phi_alpha and the elements alpha_k


def _apply_path(word: Word, path: Sequence[int], dim: int, degeneracy) -> Word:
    for j in path:
        word = degeneracy(j, dim)(word)
        dim += 1
    return word


@lru_cache(maxsize=None)
def _ap_degeneracy(j: int, dim: int, names: tuple) -> GroupMap:
    return degeneracy_map(j, dim + 1, names)


def phi_alpha(alpha: Word, k: int, cell: SphereCell, names: Sequence[str] = ("A",)) -> Word:
    """Image in ``AP`` of a cell of ``S^k`` under ``sigma_k -> alpha``."""
    if cell.k != k:
        raise ValueError("cell from a different sphere")
    names = tuple(sorted(names)) if len(names) > 1 else tuple(names)
    return _apply_path(alpha, degeneracy_path(cell.data), k, lambda j, d: _ap_degeneracy(j, d, names))


def theta(w: Word, name: str = "A") -> Word:
    """``Theta : F[S^1] -> AP``, ``sigma_1 -> A[1,2]``."""
    a12 = Word.gen(letter(name, 1, 2))
    table = {}
    for g, _ in w.letters:
        if g not in table:
            table[g] = phi_alpha(a12, 1, _cell_of(g), (name,))
    return GroupMap(table)(w)


def theta_image(n: int, name: str = "A") -> list:
    """``Theta(x_1), ..., Theta(x_n)`` as words in ``P_{n+1}``."""
    if n < 1:
        raise ValueError("n >= 1 required")
    return [theta(x_word(i, n), name) for i in range(1, n + 1)]


def alpha_k(k: int) -> Word:
    """``[..[[x_1^-1, x_1 x_2^-1], x_2 x_3^-1], .., x_{k-2}]`` in ``F[S^1]_{k-2}``."""
    if k < 4:
        raise ValueError("the closed formula needs k >= 4; for k = 3 supply alpha explicitly")
    n = k - 2
    x = [None] + [x_word(i, n) for i in range(1, n + 1)]
    args = [~x[1]] + [x[i] * ~x[i + 1] for i in range(1, n)] + [x[n]]
    return left_normed(args)


def alpha_bar_k(k: int) -> Word:
    """``[[x_1 x_2^-1, x_2 x_3^-1], .., x_{k-1}]`` in ``F[S^1]_{k-1}``; ``d_0`` of it is ``alpha_k``."""
    if k < 3:
        raise ValueError("k >= 3 required")
    n = k - 1
    x = [None] + [x_word(i, n) for i in range(1, n + 1)]
    args = [x[i] * ~x[i + 1] for i in range(1, n)] + [x[n]]
    return left_normed(args)


def phi_alpha_image(alpha: Word, n: int, k: int | None = None, names: Sequence[str] = ("A",)) -> list:
    """The cables ``y_j`` in ``P_{n+1}``: images of the cells of ``S^k`` in dimension ``n``.

    ``alpha`` is a word in ``P_{k+1}``; ``k`` defaults to the largest
    strand index in ``alpha`` minus one.
    """
    if k is None:
        k = max(i for g, _ in alpha.letters for i in g.indices) - 1
    return [phi_alpha(alpha, k, c, names) for c in sphere_cells(k, n)]


def phi_alpha_geometric(alpha: GeometricBraid, n: int) -> list:
    """Geometric cables of ``alpha`` over the cells of ``S^{alpha.n - 1}`` in dimension ``n``."""
    k = alpha.n - 1
    return [cable(alpha, [c.data.count(v) for v in range(k + 1)]) for c in sphere_cells(k, n)]


# ---------------------------------------------------------------------------
# F~ and its comparison with F[S^1]


def f_tilde_to_milnor(n: int) -> GroupMap:
    """``z_i -> x_{i-1}^-1 x_i`` in dimension ``n`` (``x_0 = x_{n+1} = 1``)."""
    return GroupMap({letter("z", i): ~x_word(i - 1, n) * x_word(i, n) for i in range(1, n + 2)}, name="f")


def literal_z_elements(n: int) -> GroupMap:
    """``z_1 = x_1``, ``z_{n+1} = x_n``, ``z_i = x_i x_{i-1}^-1`` (literal reading)."""
    table = {}
    for i in range(1, n + 2):
        if i == 1:
            table[letter("z", i)] = x_word(1, n)
        elif i == n + 1:
            table[letter("z", i)] = x_word(n, n)
        else:
            table[letter("z", i)] = x_word(i, n) * ~x_word(i - 1, n)
    return GroupMap(table, name="f_literal")


def check_simplicial_map(src: SimplicialGroupSpec, dst: SimplicialGroupSpec, f: Callable[[int], GroupMap], n_max: int) -> dict:
    """Does ``f`` commute with faces and degeneracies on generators up to ``n_max``?"""
    checked = 0
    for n in range(max(src.min_dim, 1), n_max + 1):
        fn = f(n)
        for g in src.alphabet(n):
            w = Word.gen(g)
            for t in range(n + 1):
                lhs, rhs = f(n - 1)(src.d(t, w, n)) if n - 1 >= src.min_dim else Word.identity(), dst.d(t, fn(w), n)
                checked += 1
                if not dst.equal(lhs, rhs, n - 1):
                    return {"passed": False, "checked": checked, "counterexample": {"op": f"d{t}", "generator": str(g), "dimension": n}}
                lhs, rhs = f(n + 1)(src.s(t, w, n)), dst.s(t, fn(w), n)
                checked += 1
                if not dst.equal(lhs, rhs, n + 1):
                    return {"passed": False, "checked": checked, "counterexample": {"op": f"s{t}", "generator": str(g), "dimension": n}}
    return {"passed": True, "checked": checked, "counterexample": None}


def y_cables(k: int, n: int, names: Sequence[str] = ("A",)) -> list:
    """The ``C(n-1, k-2)`` cables ``y_j`` of ``alpha_k`` in ``P_n``."""
    return phi_alpha_image(theta(alpha_k(k)), n - 1, k - 2, names)


def injectivity_spot_check(k: int, n: int, max_length: int = 4) -> dict:
    """No nonempty reduced word of length ``<= max_length`` in the ``y_j`` is a trivial braid.

    Burau matrices (mod a large prime) are multiplied along a depth-first
    walk; only a Burau identity triggers the exact Artin test.
    """
    from .braid import burau_matrix, is_identity_matrix, matmul_mod

    ys = [embed_word(y, n) for y in y_cables(k, n)]
    mats = {}
    for j, b in enumerate(ys):
        mats[(j, 1)] = burau_matrix(b)
        mats[(j, -1)] = burau_matrix(~b)
    exact_checks = 0
    words = 0
    stack = [((), None)]
    while stack:
        word, mat = stack.pop()
        if len(word) == max_length:
            continue
        for j in range(len(ys)):
            for e in (1, -1):
                if word and word[-1] == (j, -e):
                    continue
                m = mats[(j, e)] if mat is None else matmul_mod(mat, mats[(j, e)])
                nw = word + ((j, e),)
                words += 1
                if is_identity_matrix(m):
                    exact_checks += 1
                    b = GeometricBraid(n, [c for jj, ee in nw for c in (ys[jj] if ee > 0 else ~ys[jj]).crossings])
                    if is_trivial(b):
                        return {"passed": False, "words": words, "exact_checks": exact_checks,
                                "witness": [f"y{jj + 1}^{ee}" for jj, ee in nw]}
                stack.append((nw, m))
    return {"passed": True, "words": words, "exact_checks": exact_checks, "witness": None}
