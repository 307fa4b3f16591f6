"""
Free products, symmetric commutator relators and presentation builders.

Amalgamated products are never normalised directly; they are exported as
presentations (free product plus equating relators) and probed through
homomorphic images.  Symmetric commutator subgroups are normal closures,
so presentations carry relator *schemas*: left-normed commutators of
closure generators whose later entries are conjugated by every word of
length at most ``depth``.  The normal closure of the full (unbounded)
schema is the symmetric commutator subgroup; a finite depth gives a
subgroup of it, and the exported group is a quotient approximation.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import permutations, product
from math import comb
from typing import Iterable, Sequence

from .braid import (
    pure_braid_relations,
    pure_generators,
)
from .simplicial import (
    alpha_bar_k,
    alpha_k,
    g_script_spec,
    moore_membership,
    phi_alpha,
    sphere_cells,
    theta,
    x_word,
)
from .words import (
    Letter,
    Word,
    all_shapes,
    eval_bracket,
    free_words,
    left_normed,
    letter,
    shape_weight,
)

__all__ = [
    "CyclicFactor",
    "FreeFactor",
    "Class2Factor",
    "FreeProduct",
    "free_product_normal_form",
    "IndexUndefinedError",
    "index_of",
    "ClosureSymbol",
    "pair_symbols",
    "minimal_cover_supports",
    "minimal_cover_patterns",
    "brute_force_cover_supports",
    "SchemaRelator",
    "symmetric_relator_schema",
    "schema_size",
    "PresentationDoc",
    "build_presentation",
    "pure_braid_relations",
    "lemma35_checks",
    "kernel_basis_checks",
    "FiniteMagnusGroup",
    "fat_symmetric_smoke",
    "BoundsError",
]


class BoundsError(ValueError):
    """Requested enumeration exceeds the configured size cap."""


# ---------------------------------------------------------------------------
# free products


class CyclicFactor:
    """``Z/m`` on one generator letter; elements are residues."""

    def __init__(self, gen: Letter, m: int):
        if m < 1:
            raise ValueError("modulus must be positive")
        self.gen = gen
        self.m = m

    def from_letter(self, g: Letter, e: int):
        if g != self.gen:
            raise KeyError(g)
        return e % self.m

    def mul(self, a, b):
        return (a + b) % self.m

    def inv(self, a):
        return (-a) % self.m

    def is_identity(self, a) -> bool:
        return a % self.m == 0

    def key(self, a):
        return a % self.m

    def show(self, a) -> str:
        return str(Word.gen(self.gen, a)) if a else "1"


class FreeFactor:
    """Free group on the given letters; elements are reduced words."""

    def __init__(self, gens: Sequence[Letter]):
        self.gens = set(gens)

    def from_letter(self, g: Letter, e: int):
        if g not in self.gens:
            raise KeyError(g)
        return Word.gen(g, e)

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return ~a

    def is_identity(self, a) -> bool:
        return a.is_identity()

    def key(self, a):
        return a

    def show(self, a) -> str:
        return str(a)


class Class2Factor:
    """A :class:`~brunnian.nilpotent.Class2Group` used as a factor."""

    def __init__(self, group):
        self.group = group
        self.gens = set(group.generators)

    def from_letter(self, g: Letter, e: int):
        if g not in self.gens:
            raise KeyError(g)
        return self.group.gen(g) ** e

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return ~a

    def is_identity(self, a) -> bool:
        return self.group.is_identity(a)

    def key(self, a):
        # no canonical representative; equality goes through is_identity
        return None

    def show(self, a) -> str:
        return repr(a)


def free_product_normal_form(syllables: Iterable[tuple], factors: dict) -> tuple:
    """Alternating normal form of a sequence of ``(tag, element)`` syllables."""
    out: list = []
    for tag, el in syllables:
        if tag not in factors:
            raise KeyError(f"no word-problem oracle for factor {tag!r}")
        f = factors[tag]
        if f.is_identity(el):
            continue
        if out and out[-1][0] == tag:
            merged = f.mul(out[-1][1], el)
            out.pop()
            if not f.is_identity(merged):
                out.append((tag, merged))
        else:
            out.append((tag, el))
    return tuple(out)


class FreeProduct:
    """Free product of tagged factors; elements are normal-form tuples."""

    def __init__(self, factors: dict):
        self.factors = dict(factors)
        self._owner: dict = {}
        for tag, f in self.factors.items():
            gens = [f.gen] if isinstance(f, CyclicFactor) else list(f.gens)
            for g in gens:
                self._owner[g] = tag

    def identity(self) -> tuple:
        return ()

    def normal_form(self, syllables) -> tuple:
        return free_product_normal_form(syllables, self.factors)

    def from_word(self, w: Word) -> tuple:
        syl = []
        for g, e in w.letters:
            tag = self._owner.get(g)
            if tag is None:
                raise KeyError(f"letter {g} is in no factor")
            syl.append((tag, self.factors[tag].from_letter(g, e)))
        return self.normal_form(syl)

    def mul(self, a: tuple, b: tuple) -> tuple:
        return self.normal_form(a + b)

    def inv(self, a: tuple) -> tuple:
        return tuple((t, self.factors[t].inv(x)) for t, x in reversed(a))

    def equal(self, a: tuple, b: tuple) -> bool:
        return self.mul(self.inv(a), b) == ()

    def show(self, a: tuple) -> str:
        return " ".join(f"({t}: {self.factors[t].show(x)})" for t, x in a) or "1"


# ---------------------------------------------------------------------------
# Index and minimal covers


class IndexUndefinedError(ValueError):
    """Index is only defined for bracket trees over basic words."""


def index_of(tree) -> set:
    """Union of the letter indices of a bracket tree whose leaves are basic words."""
    if isinstance(tree, Letter):
        return set(tree.indices)
    if isinstance(tree, tuple):
        if len(tree) != 2:
            raise IndexUndefinedError("bracket nodes have exactly two children")
        return index_of(tree[0]) | index_of(tree[1])
    if isinstance(tree, Word):
        if len(tree) != 1:
            raise IndexUndefinedError(f"{tree} is not a basic word")
        return set(tree.letters[0][0].indices)
    raise IndexUndefinedError(f"unsupported bracket entry {tree!r}")


@dataclass(frozen=True)
class ClosureSymbol:
    """Normal closure of ``generators`` with a declared Index set."""

    label: str
    generators: tuple
    index: frozenset

    def __str__(self):
        return self.label


def pair_symbols(n: int, names: Sequence[str] = ("A",)) -> list:
    """``R[i,j]`` generated by ``A[i,j]`` in every listed copy."""
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            gens = tuple(Word.gen(letter(nm, i, j)) for nm in names)
            out.append(ClosureSymbol(f"R[{i},{j}]", gens, frozenset((i, j))))
    return out


def minimal_cover_supports(universe: Iterable[int], symbols: Sequence[ClosureSymbol], max_length: int | None = None) -> list:
    """Sets of symbols covering ``universe`` from which no member can be dropped."""
    universe = frozenset(universe)
    syms = [s for s in symbols if s.index <= universe]
    limit = len(universe) if max_length is None else max_length
    out = []

    def grow(start, chosen, covered):
        if covered == universe:
            if all(frozenset().union(*(c.index for c in chosen if c is not s)) != universe for s in chosen):
                out.append(tuple(chosen))
            return
        if len(chosen) == limit:
            return
        for i in range(start, len(syms)):
            s = syms[i]
            if s.index <= covered:
                continue
            grow(i + 1, chosen + [s], covered | s.index)

    grow(0, [], frozenset())
    return out


def minimal_cover_patterns(universe: Iterable[int], symbols: Sequence[ClosureSymbol], max_length: int | None = None) -> list:
    """Ordered patterns for the minimal supports.

    ``[[C_1, C_2], ...]`` is symmetric in its first two entries, so those
    are kept in declaration order; the remaining entries run over all
    orders.
    """
    out = []
    for sup in minimal_cover_supports(universe, symbols, max_length):
        if len(sup) <= 2:
            out.append(tuple(sup))
            continue
        seen = set()
        for perm in permutations(sup):
            a, b = perm[0], perm[1]
            if sup.index(a) > sup.index(b):
                continue
            if perm not in seen:
                seen.add(perm)
                out.append(perm)
    return out


def brute_force_cover_supports(universe: Iterable[int], symbols: Sequence[ClosureSymbol], max_length: int) -> set:
    """Reference filter: all sequences (with repetition) up to ``max_length``.

    Keeps those whose Index union is the universe and in which every entry
    is needed for coverage; returns their supports.
    """
    universe = frozenset(universe)
    keep = set()
    for t in range(1, max_length + 1):
        for seq in product(symbols, repeat=t):
            if frozenset().union(*(s.index for s in seq)) != universe:
                continue
            ok = True
            for p in range(t):
                rest = frozenset().union(*(s.index for q, s in enumerate(seq) if q != p))
                if rest == universe:
                    ok = False
                    break
            if ok:
                keep.add(frozenset(s.label for s in seq))
    return keep


# ---------------------------------------------------------------------------
# relator schemas


@dataclass(frozen=True)
class SchemaRelator:
    word: Word
    pattern: tuple
    entries: tuple
    conjugators: tuple


def _conjugators(alphabet: Sequence[Letter], depth: int) -> list:
    return list(free_words(sorted(alphabet, key=Letter.sort_key), depth))


def schema_size(patterns: Sequence[tuple], depth: int, n_letters: int) -> int:
    """Upper bound on the number of schema instances."""
    words = 1 + sum(2 * n_letters * (2 * n_letters - 1) ** (d - 1) for d in range(1, depth + 1))
    total = 0
    for pat in patterns:
        choices = 1
        for s in pat:
            choices *= len(s.generators)
        total += choices * words ** (len(pat) - 1)
    return total


def symmetric_relator_schema(
    patterns: Sequence[tuple],
    depth: int,
    ambient: Sequence[Letter],
    max_relators: int = 200_000,
) -> list:
    """Left-normed commutators ``[g_1, g_2^{w_2}, ..., g_t^{w_t}]``.

    ``g_s`` runs over the generators of the ``s``-th closure symbol and the
    ``w_s`` over reduced words of length ``<= depth`` in ``ambient``.
    Trivial and repeated instances are dropped; order is by pattern, then
    generator choice, then conjugators.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    est = schema_size(patterns, depth, len(ambient))
    if est > max_relators:
        raise BoundsError(f"schema would enumerate up to {est} relators (cap {max_relators})")
    conj = _conjugators(ambient, depth)
    seen = set()
    out = []
    for pat in patterns:
        for gens in product(*(s.generators for s in pat)):
            for ws in product(conj, repeat=len(pat) - 1):
                args = [gens[0]] + [g.conjugate(w) for g, w in zip(gens[1:], ws)]
                r = left_normed(args)
                if r.is_identity() or r in seen:
                    continue
                seen.add(r)
                out.append(SchemaRelator(r, tuple(s.label for s in pat), tuple(gens), tuple(ws)))
    return out


# ---------------------------------------------------------------------------
# presentations


@dataclass
class PresentationDoc:
    target: str
    params: dict
    generators: list
    relators: list = field(default_factory=list)  # (family, lhs, rhs)
    schemas: list = field(default_factory=list)  # descriptors
    schema_relators: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def relator_words(self) -> list:
        return [lhs * ~rhs for _, lhs, rhs in self.relators]

    def all_relators(self) -> list:
        return self.relator_words() + [s.word for s in self.schema_relators]

    def families(self) -> dict:
        out: dict = {}
        for fam, _, _ in self.relators:
            out[fam] = out.get(fam, 0) + 1
        return out

    def header(self) -> list:
        depth = self.params.get("depth")
        lines = [
            f"presentation target={self.target} params={json.dumps(self.params, sort_keys=True)}",
            f"schema truncation depth L={depth}: relator schemas are cut at conjugator length {depth};"
            " the exported group is a quotient approximation of the intended one",
        ]
        return lines + list(self.notes)

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "params": self.params,
            "generators": [str(g) for g in self.generators],
            "relators": [
                {"family": fam, "lhs": str(lhs), "rhs": str(rhs), "word": str(lhs * ~rhs)}
                for fam, lhs, rhs in self.relators
            ],
            "schemas": self.schemas,
            "schema_relators": [str(s.word) for s in self.schema_relators],
            "notes": self.header(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = ["# " + h for h in self.header()]
        lines.append("generators: " + " ".join(str(g) for g in self.generators))
        lines.append(f"exact relators ({len(self.relators)}):")
        for fam, lhs, rhs in self.relators:
            lines.append(f"  [{fam}] {lhs} = {rhs}")
        for s in self.schemas:
            lines.append(f"schema: {json.dumps(s, sort_keys=True)}")
        lines.append(f"schema relators ({len(self.schema_relators)}):")
        for s in self.schema_relators:
            lines.append(f"  {s.word}")
        return "\n".join(lines) + "\n"

    def to_cas(self) -> str:
        """GAP-style finitely presented group fragment."""
        def gname(g: Letter) -> str:
            base = g.name.replace("''", "pp").replace("'", "p")
            s = base + "".join(f"_{i}" for i in g.indices)
            return s + (f"_{g.tag}" if g.tag else "")

        def wtext(w: Word) -> str:
            if w.is_identity():
                return "One(F)"
            return "*".join(gname(g) if e > 0 else f"{gname(g)}^-1" for g, e in w.letters)

        names = [gname(g) for g in self.generators]
        lines = ["# " + h for h in self.header()]
        lines.append("F := FreeGroup(" + ", ".join(f'"{n}"' for n in names) + ");")
        lines.append("AssignGeneratorVariables(F);")
        lines.append("rels := [")
        rels = self.all_relators()
        for i, r in enumerate(rels):
            lines.append("  " + wtext(r) + ("," if i + 1 < len(rels) else ""))
        lines.append("];")
        lines.append("G := F / rels;")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "cas":
            return self.to_cas()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown format {fmt!r}")

    def audit_abelianization(self) -> bool:
        """Every schema relator has zero exponent sum in every generator."""
        for s in self.schema_relators:
            for g in s.word.alphabet():
                if s.word.exponent_sum(g):
                    return False
        return True


def _parse_alpha(alpha, n_strands: int = 2) -> Word:
    if isinstance(alpha, Word):
        return alpha
    if isinstance(alpha, int):
        return Word.gen(letter("A", 1, 2), alpha)
    return Word.parse(str(alpha))


def _rename(w: Word, name: str) -> Word:
    return w.map_letters(lambda g: g._replace(name=name))


def build_presentation(
    target: str,
    n: int,
    k: int | None = None,
    q: int | None = None,
    depth: int = 0,
    alpha=None,
    max_relators: int = 200_000,
) -> PresentationDoc:
    """Targets: ``sphere_S2``, ``sphere``, ``moore2``, ``moore_k``."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if target == "sphere_S2":
        return _sphere_s2(n, depth, max_relators)
    if target == "sphere":
        return _sphere(n, k, depth, alpha, max_relators)
    if target == "moore2":
        return _moore2(n, q, depth, max_relators)
    if target == "moore_k":
        return _moore_k(n, k, q, depth, max_relators)
    raise ValueError(f"unknown target {target!r}")


def _schema_block(doc: PresentationDoc, universe, symbols, depth, max_relators):
    pats = minimal_cover_patterns(universe, symbols)
    rels = symmetric_relator_schema(pats, depth, doc.generators, max_relators)
    doc.schema_relators = rels
    doc.schemas.append({
        "closures": {s.label: {"generators": [str(g) for g in s.generators], "index": sorted(s.index)} for s in symbols},
        "patterns": [[s.label for s in p] for p in pats],
        "depth": depth,
        "instances": len(rels),
    })


def _sphere_s2(n: int, depth: int, max_relators: int) -> PresentationDoc:
    if n < 1:
        raise ValueError("n >= 1 required")
    xs = [letter("x", i) for i in range(1, n + 1)]
    doc = PresentationDoc("sphere_S2", {"n": n, "depth": depth}, xs)
    prod_all = Word((g, 1) for g in xs)
    symbols = [ClosureSymbol(f"R[{i}]", (Word.gen(xs[i - 1]),), frozenset((i,))) for i in range(1, n + 1)]
    symbols.append(ClosureSymbol(f"R[{n + 1}]", (prod_all,), frozenset((n + 1,))))
    doc.notes.append("free group F_n; R_i is the normal closure of x_i (i <= n) and of x_1...x_n (i = n+1)")
    _schema_block(doc, range(1, n + 2), symbols, depth, max_relators)
    return doc


def _sphere(n: int, k: int | None, depth: int, alpha, max_relators: int) -> PresentationDoc:
    if n < 2:
        raise ValueError("n >= 2 required")
    if k is None or k < 3:
        raise ValueError("k >= 3 required")
    if k == 3:
        if alpha is None:
            raise ValueError("k = 3 needs an explicit alpha (a nonzero power of A[1,2])")
        a = _parse_alpha(alpha)
        if a.is_identity():
            raise ValueError("alpha must be nontrivial")
    else:
        if alpha is not None:
            a = _parse_alpha(alpha)
        else:
            a = theta(alpha_k(k))
    params = {"n": n, "k": k, "depth": depth}
    if alpha is not None:
        params["alpha"] = str(a)
    gens = pure_generators(n, "A") + pure_generators(n, "A'")
    doc = PresentationDoc("sphere", params, gens)
    for nm in ("A", "A'"):
        for r in pure_braid_relations(n, nm):
            doc.relators.append((f"pure braid {nm}", r, Word.identity()))
    for c in sphere_cells(k - 2, n - 1):
        y = phi_alpha(a, k - 2, c)
        doc.relators.append(("amalgamation y_j", y, _rename(y, "A'")))
    doc.notes.append(f"amalgamation identifies the {comb(n - 1, k - 2)} cables y_j of alpha across the two copies")
    _schema_block(doc, range(1, n + 1), pair_symbols(n, ("A", "A'")), depth, max_relators)
    return doc


def _moore2(n: int, q: int | None, depth: int, max_relators: int) -> PresentationDoc:
    if n < 2:
        raise ValueError("n >= 2 required")
    if q is None or q < 2:
        raise ValueError("q >= 2 required")
    xs = [letter("x", j) for j in range(1, n)]
    gens = pure_generators(n, "A") + xs
    doc = PresentationDoc("moore2", {"n": n, "q": q, "depth": depth}, gens)
    for r in pure_braid_relations(n, "A"):
        doc.relators.append(("pure braid A", r, Word.identity()))
    for j in range(1, n):
        cab = theta(x_word(j, n - 1))
        doc.relators.append(("x_j^q = cable", cab, Word.gen(xs[j - 1], q)))
    x = [Word.identity()] + [Word.gen(g) for g in xs] + [Word.identity()]
    symbols = [ClosureSymbol(f"R[{i}]", (~x[i - 1] * x[i],), frozenset((i,))) for i in range(1, n + 1)]
    symbols += [ClosureSymbol(f"R[{s},{t}]", (Word.gen(letter("A", s, t)),), frozenset((s, t)))
                for s in range(1, n + 1) for t in range(s + 1, n + 1)]
    doc.notes.append("z_i = x_{i-1}^-1 x_i with x_0 = x_n = 1 generates R_i (conjugate/inverse of the other common normalisation)")
    _schema_block(doc, range(1, n + 1), symbols, depth, max_relators)
    return doc


def _moore_k(n: int, k: int | None, q: int | None, depth: int, max_relators: int) -> PresentationDoc:
    if k is None or k < 4:
        raise ValueError("moore_k uses the closed-form alpha_{k+1} and alpha-bar_k, which need k >= 4")
    if q is None or q < 2:
        raise ValueError("q >= 2 required")
    if n < k:
        raise ValueError("n >= k required (cells of S^{k-1} in dimension n-1)")
    gens = pure_generators(n, "A") + pure_generators(n, "A'") + pure_generators(n, "A''")
    doc = PresentationDoc("moore_k", {"n": n, "k": k, "q": q, "depth": depth}, gens)
    for nm in ("A", "A'", "A''"):
        for r in pure_braid_relations(n, nm):
            doc.relators.append((f"pure braid {nm}", r, Word.identity()))
    a_low = theta(alpha_k(k))
    for c in sphere_cells(k - 2, n - 1):
        y = phi_alpha(a_low, k - 2, c)
        doc.relators.append(("amalgamation y_j", y, _rename(y, "A'")))
    abar = theta(alpha_bar_k(k))
    a_top = _rename(theta(alpha_k(k + 1)), "A''")
    for c in sphere_cells(k - 1, n - 1):
        u = phi_alpha(abar, k - 1, c)
        lhs = (u * ~_rename(u, "A'")) ** q
        doc.relators.append(("q-th root", lhs, phi_alpha(a_top, k - 1, c, ("A''",))))
    doc.notes.append("alpha = alpha_{k+1} (Brunnian, k strands); alpha-bar = alpha-bar_k with d_0 alpha-bar = alpha_k")
    _schema_block(doc, range(1, n + 1), pair_symbols(n, ("A", "A'", "A''")), depth, max_relators)
    return doc


# ---------------------------------------------------------------------------
# Moore chains of closure products at desk scale


def _g_letters(n: int, copies: Sequence[str]) -> list:
    return [g.with_tag(c) for c in copies for g in pure_generators(n + 1, "x")]


def _pair_patterns(universe: frozenset, pairs: list, weight: int, required: frozenset) -> Iterable[tuple]:
    for t in range(1, weight + 1):
        for seq in product(pairs, repeat=t):
            if required <= frozenset().union(*(frozenset(p) for p in seq)):
                yield seq


def lemma35_checks(
    n: int,
    copies: Sequence[str] = ("a", "b"),
    weight_bound: int = 4,
    conjugator_bound: int = 1,
    samples: int = 2,
    seed: int = 0,
) -> dict:
    """Easy direction and the d_0-shift boundary identity, on enumerated generators.

    For every ordered pattern of index pairs (length ``<= weight_bound``)
    covering ``{2..n+1}`` (resp. ``{1..n+1}``), the plain left-normed
    instance is checked together with ``samples`` seeded instances with
    random copies, signs, conjugators (length ``<= conjugator_bound``)
    and bracket shapes.
    """
    if n > 4 or len(copies) > 2:
        raise BoundsError("lemma35_checks is limited to n <= 4 and |J| <= 2")
    rng = random.Random(seed)
    spec = g_script_spec(copies)
    up = g_script_spec(copies)
    letters = _g_letters(n, copies)
    conj = _conjugators(letters, conjugator_bound)
    pairs = [(i, j) for i in range(1, n + 2) for j in range(i + 1, n + 2)]
    universe = frozenset(range(1, n + 2))
    report = {"n": n, "copies": list(copies), "chains": 0, "cycles": 0, "shifts": 0, "failures": []}

    def instances(seq):
        yield [Word.gen(letter("x", i, j, tag=copies[0])) for i, j in seq], None
        for _ in range(samples):
            args = []
            for idx, (i, j) in enumerate(seq):
                g = Word.gen(letter("x", i, j, tag=rng.choice(copies)), rng.choice((1, -1)))
                if idx:
                    g = g.conjugate(rng.choice(conj))
                args.append(g)
            yield args, rng.choice(all_shapes(len(seq)))

    def build(args, shape):
        return left_normed(args) if shape is None else eval_bracket(shape, args)

    for label, required in (("chain", universe - {1}), ("cycle", universe)):
        for seq in _pair_patterns(universe, pairs, weight_bound, required):
            for args, shape in instances(seq):
                w = build(args, shape)
                status = moore_membership(spec, w, n)
                ok = status == "cycle" if label == "cycle" else status in ("chain", "cycle")
                report[label + "s"] += 1
                if not ok:
                    report["failures"].append({"kind": label, "pattern": [list(p) for p in seq], "word": str(w), "status": status})
                    continue
                if label == "cycle" and n + 1 <= 4:
                    wp = w.map_letters(lambda g: g.shifted(1))
                    report["shifts"] += 1
                    if up.d(0, wp, n + 1) != w or moore_membership(up, wp, n + 1) not in ("chain", "cycle"):
                        report["failures"].append({"kind": "shift", "word": str(w)})
    report["passed"] = not report["failures"]
    return report


def kernel_basis_checks(n: int, copies: Sequence[str] = ("a", "b"), t_max: int = 2) -> dict:
    """The commutators spanning ``Ker d_n`` behave as the face table predicts.

    Elements ``[[x_{i,n+1}, b_1], .., b_t]`` with ``b_s`` basic words over
    ``x_{i,j}``, ``j <= n``, forming a reduced product, die under ``d_n``;
    under ``d_k`` they die iff ``k+1`` is in their Index, and otherwise
    map to an element of the same shape one dimension down.
    """
    spec = g_script_spec(copies)
    low = [(letter("x", i, j, tag=c), e) for c in copies for i in range(1, n + 1) for j in range(i + 1, n + 1) for e in (1, -1)]
    checked, failures = 0, []
    for i in range(1, n + 1):
        for c0 in copies:
            head = letter("x", i, n + 1, tag=c0)
            for t in range(t_max + 1):
                for tail in product(low, repeat=t):
                    if any(a[0] == b[0] and a[1] == -b[1] for a, b in zip(tail, tail[1:])):
                        continue
                    w = left_normed([Word.gen(head)] + [Word.gen(g, e) for g, e in tail])
                    idx = set(head.indices).union(*(set(g.indices) for g, _ in tail))
                    checked += 1
                    if not spec.d(n, w, n).is_identity():
                        failures.append(("d_n", str(w)))
                        continue
                    for k in range(n):
                        dk = spec.d(k, w, n)
                        if (k + 1) in idx:
                            if not dk.is_identity():
                                failures.append((f"d_{k}", str(w)))
                        else:
                            hd = spec.d(k, Word.gen(head), n)
                            tl = [spec.d(k, Word.gen(g, e), n) for g, e in tail]
                            if dk != left_normed([hd] + tl) or hd.is_identity():
                                failures.append((f"d_{k}", str(w)))
    return {"n": n, "checked": checked, "failures": failures[:5], "passed": not failures}


# ---------------------------------------------------------------------------
# fat vs symmetric commutator smoke test in a finite nilpotent quotient


class FiniteMagnusGroup:
    """Image of a free group in the units of the truncated algebra mod ``p``."""

    def __init__(self, letters: Sequence[Letter], cap: int, p: int, size_cap: int = 5000):
        from .nilpotent.magnus import MagnusSeries

        self.letters = list(letters)
        self.cap, self.p = cap, p
        self._series = {}
        self.elements = []
        self.index = {}
        gens = [MagnusSeries.generator(g, 1, cap, p) for g in self.letters]
        one = MagnusSeries.one(cap, p)
        self._add(one)
        frontier = [one]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = x * g
                    key = self._key(y)
                    if key not in self.index:
                        if len(self.elements) >= size_cap:
                            raise BoundsError(f"finite quotient exceeds {size_cap} elements")
                        self._add(y)
                        nxt.append(y)
            frontier = nxt
        self._mul = {}
        self.gen_index = [self.index[self._key(g)] for g in gens]

    @staticmethod
    def _key(s):
        return tuple(sorted(s.terms.items(), key=lambda kv: [g.sort_key() for g in kv[0]]))

    def _add(self, s):
        self.index[self._key(s)] = len(self.elements)
        self.elements.append(s)

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        key = (a, b)
        r = self._mul.get(key)
        if r is None:
            r = self._mul[key] = self.index[self._key(self.elements[a] * self.elements[b])]
        return r

    def inv(self, a: int) -> int:
        x = a
        prev = 0
        while x != 0:
            prev = x
            x = self.mul(x, a)
        return prev if a != 0 else 0

    def word(self, w: Word) -> int:
        out = 0
        for g, e in w.letters:
            k = self.gen_index[self.letters.index(g)]
            out = self.mul(out, k if e > 0 else self.inv(k))
        return out

    def comm(self, a: int, b: int) -> int:
        return self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))

    def subgroup(self, gens: Iterable[int]) -> frozenset:
        gens = list(set(gens))
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def normal_closure(self, gens: Iterable[int]) -> frozenset:
        conj = {self.mul(self.mul(self.inv(h), g), h) for g in gens for h in range(self.order)}
        return self.subgroup(conj)

    def commutator_subgroup(self, a: frozenset, b: frozenset) -> frozenset:
        return self.normal_closure(self.comm(x, y) for x in a for y in b)


def fat_symmetric_smoke(c: int = 2, p: int = 3, letters: int = 3, closures: int | None = None, size_cap: int = 5000) -> dict:
    """Compare fat and symmetric commutator images in a finite nilpotent quotient.

    ``R_i`` is the normal closure of ``x_i`` for ``i <= closures``.
    The fat subgroup is generated by every bracket arrangement of weight
    ``<= c`` with entries from the ``R_i`` images covering all indices
    (longer brackets vanish in class ``c``); the symmetric one is the
    product over orderings of left-normed commutator subgroups.
    """
    closures = letters if closures is None else closures
    xs = [letter("x", i) for i in range(1, letters + 1)]
    G = FiniteMagnusGroup(xs, c, p, size_cap)
    R = [G.normal_closure([G.word(Word.gen(xs[i]))]) for i in range(closures)]
    idx = list(range(closures))

    sym: set = set()
    for perm in permutations(idx):
        h = R[perm[0]]
        for i in perm[1:]:
            h = G.commutator_subgroup(h, R[i])
        sym |= h
    sym_group = G.subgroup(sym)

    fat_gens: set = set()
    for t in range(max(closures, 1), c + 1):
        for shape in all_shapes(t):
            for labels in product(idx, repeat=t):
                if set(labels) != set(idx):
                    continue
                for entries in product(*(sorted(R[i]) for i in labels)):
                    fat_gens.add(_eval_finite(G, shape, list(entries)))
    if closures == 1:
        fat_gens |= R[0]
    fat_group = G.normal_closure(fat_gens) if fat_gens else frozenset({0})
    right_comb_in_sym = True
    if closures >= 3 and c >= 3:
        from .words import right_comb
        for entries in product(*(sorted(R[i]) for i in idx[:3])):
            if _eval_finite(G, right_comb(3), list(entries)) not in sym_group:
                right_comb_in_sym = False
                break
    return {
        "class": c, "exponent": p, "letters": letters, "closures": closures,
        "order": G.order,
        "fat_size": len(fat_group), "symmetric_size": len(sym_group),
        "symmetric_in_fat": sym_group <= fat_group,
        "equal": fat_group == sym_group,
        "right_comb_in_symmetric": right_comb_in_sym,
    }


def _eval_finite(G: FiniteMagnusGroup, shape, args):
    if shape == 1:
        return args[0]
    left, right = shape
    k = shape_weight(left)
    return G.comm(_eval_finite(G, left, args[:k]), _eval_finite(G, right, args[k:]))
