"""
Free-group word calculus over structured letters.

A letter carries a family name (``A``, ``A'``, ``A''``, ``x``, ``z``,
``sigma`` or any abstract name), a tuple of small integer indices and an
optional copy tag.  Words are kept freely reduced at all times, so ``==``
on words is equality in the free group.

Text syntax, whitespace separated::

    A[1,2] A'[1,3]^-1 x[2](a0) b^3

Commutators use ``[u, v]`` (with more entries meaning left-normed
brackets), and the identity is written ``1``.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

__all__ = [
    "Letter",
    "Word",
    "GroupMap",
    "BracketShape",
    "letter",
    "parse_word",
    "commutator",
    "left_normed",
    "eval_bracket",
    "left_comb",
    "right_comb",
    "all_shapes",
    "shape_weight",
    "apply_map",
    "in_normal_closure_free_quotient",
    "UnknownLetterError",
    "UnsupportedClosureError",
]

BRAID_FAMILIES = ("A", "A'", "A''", "x")


class UnknownLetterError(KeyError):
    pass


class UnsupportedClosureError(ValueError):
    pass


class Letter(NamedTuple):
    name: str
    indices: tuple = ()
    tag: str | None = None

    def __str__(self):
        s = self.name
        if self.indices:
            s += "[" + ",".join(str(i) for i in self.indices) + "]"
        if self.tag is not None:
            s += "(" + self.tag + ")"
        return s

    def sort_key(self):
        return (self.name, self.indices, self.tag or "")

    def with_tag(self, tag):
        return Letter(self.name, self.indices, tag)

    def shifted(self, by=1):
        return Letter(self.name, tuple(i + by for i in self.indices), self.tag)


def letter(name: str, *indices: int, tag: str | None = None) -> Letter:
    """Build a validated letter; braid-style families need ``i < j``."""
    idx = tuple(int(i) for i in indices)
    if name in BRAID_FAMILIES and len(idx) == 2 and not (1 <= idx[0] < idx[1]):
        raise ValueError(f"invalid indices for {name}: {idx}")
    if name == "sigma" and any(b < a for a, b in zip(idx, idx[1:])):
        raise ValueError(f"sphere-cell indices must be monotone: {idx}")
    return Letter(name, idx, tag)


def _reduce(pairs: Iterable[tuple]) -> tuple:
    out: list = []
    for g, e in pairs:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


class Word:
    """Freely reduced word; ``letters`` is a tuple of ``(Letter, +-1)``."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[tuple] = (), *, reduced: bool = False):
        if reduced:
            self.letters = tuple(letters)
        else:
            self.letters = _reduce((g, 1 if e > 0 else -1) for g, e in letters)
        self._hash = None

    @classmethod
    def gen(cls, g: Letter, power: int = 1) -> "Word":
        sign = 1 if power > 0 else -1
        return cls(((g, sign),) * abs(power), reduced=True)

    @classmethod
    def identity(cls) -> "Word":
        return cls((), reduced=True)

    @classmethod
    def parse(cls, text: str) -> "Word":
        return parse_word(text)

    # group operations

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        left = list(self.letters)
        right = other.letters
        k = 0
        while left and k < len(right):
            g, e = left[-1]
            if right[k][0] == g and right[k][1] == -e:
                left.pop()
                k += 1
            else:
                break
        return Word(tuple(left) + right[k:], reduced=True)

    def __invert__(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)), reduced=True)

    inverse = __invert__

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else ~self
        result = Word.identity()
        for _ in range(abs(n)):
            result = result * base
        return result

    def conjugate(self, g: "Word") -> "Word":
        """``g^-1 * self * g``."""
        return ~g * self * g

    # container protocol

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.letters)
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (len(self.letters), [(g.sort_key(), e) for g, e in self.letters])

    def is_identity(self) -> bool:
        return not self.letters

    def alphabet(self) -> set:
        return {g for g, _ in self.letters}

    def exponent_sum(self, g: Letter) -> int:
        return sum(e for h, e in self.letters if h == g)

    def syllables(self) -> list:
        """Runs of equal letters as ``(letter, exponent)``."""
        out = []
        for g, e in self.letters:
            if out and out[-1][0] == g:
                out[-1] = (g, out[-1][1] + e)
            else:
                out.append((g, e))
        return out

    def map_letters(self, fn) -> "Word":
        return Word((fn(g), e) for g, e in self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        parts = []
        for g, k in self.syllables():
            parts.append(str(g) if k == 1 else f"{g}^{k}")
        return " ".join(parts)

    def __repr__(self):
        return f"Word({str(self)!r})"


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(
    r"""\s*(?:
        (?P<letter>[A-Za-z_][A-Za-z0-9_]*'{0,2}(?:\[[0-9,\s]*\])?(?:\([A-Za-z0-9_]+\))?)
      | (?P<one>1(?![0-9]))
      | (?P<pow>\^\s*-?\s*[0-9]+)
      | (?P<sym>[\[\],()])
    )""",
    re.VERBOSE,
)
_LETTER = re.compile(r"([A-Za-z_][A-Za-z0-9_]*'{0,2})(?:\[([0-9,\s]*)\])?(?:\(([A-Za-z0-9_]+)\))?$")


def _parse_letter(text: str) -> Letter:
    m = _LETTER.match(text)
    if m is None:
        raise ValueError(f"bad letter: {text!r}")
    name, idx, tag = m.groups()
    indices = tuple(int(t) for t in idx.split(",") if t.strip()) if idx else ()
    return Letter(name, indices, tag)


def _tokens(text: str) -> list:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse word at {text[pos:]!r}")
        kind = m.lastgroup
        out.append((kind, m.group(kind).replace(" ", "")))
        pos = m.end()
    return out


def parse_word(text: str) -> Word:
    """Parse the canonical text syntax (plus ``[u, v, ...]`` commutators)."""
    toks = _tokens(text)
    pos = 0

    def expr(stop):
        acc = Word.identity()
        while pos < len(toks) and not (toks[pos][0] == "sym" and toks[pos][1] in stop):
            acc = acc * term()
        return acc

    def term():
        nonlocal pos
        kind, val = toks[pos]
        if kind == "letter":
            pos += 1
            w = Word.gen(_parse_letter(val))
        elif kind == "one":
            pos += 1
            w = Word.identity()
        elif kind == "sym" and val == "[":
            pos += 1
            args = [expr(",]")]
            while toks[pos][1] == ",":
                pos += 1
                args.append(expr(",]"))
            pos += 1
            if len(args) < 2:
                raise ValueError("commutator needs at least two entries")
            w = left_normed(args)
        elif kind == "sym" and val == "(":
            pos += 1
            w = expr(")")
            pos += 1
        else:
            raise ValueError(f"unexpected token {val!r}")
        if pos < len(toks) and toks[pos][0] == "pow":
            w = w ** int(toks[pos][1][1:])
            pos += 1
        return w

    try:
        w = expr(())
    except IndexError:
        raise ValueError(f"unbalanced brackets in {text!r}") from None
    if pos != len(toks):
        raise ValueError(f"trailing input in {text!r}")
    return w


# ---------------------------------------------------------------------------
# commutators and bracket arrangements

def commutator(a: Word, b: Word) -> Word:
    """``[a, b] = a^-1 b^-1 a b``."""
    return ~a * ~b * a * b


def left_normed(args: Sequence[Word]) -> Word:
    if not args:
        raise ValueError("left_normed needs at least one entry")
    acc = args[0]
    for w in args[1:]:
        acc = commutator(acc, w)
    return acc


# A bracket shape is either 1 (a leaf) or a pair (left, right) of shapes.
BracketShape = object


def shape_weight(shape) -> int:
    if shape == 1:
        return 1
    left, right = shape
    return shape_weight(left) + shape_weight(right)


def left_comb(t: int):
    shape = 1
    for _ in range(t - 1):
        shape = (shape, 1)
    return shape


def right_comb(t: int):
    shape = 1
    for _ in range(t - 1):
        shape = (1, shape)
    return shape


def all_shapes(t: int) -> list:
    """Every bracket arrangement of weight ``t``."""
    if t == 1:
        return [1]
    out = []
    for k in range(1, t):
        for a in all_shapes(k):
            for b in all_shapes(t - k):
                out.append((a, b))
    return out


def eval_bracket(shape, args: Sequence[Word]) -> Word:
    if shape_weight(shape) != len(args):
        raise ValueError(f"shape of weight {shape_weight(shape)} given {len(args)} arguments")

    def go(s, xs):
        if s == 1:
            return xs[0]
        k = shape_weight(s[0])
        return commutator(go(s[0], xs[:k]), go(s[1], xs[k:]))

    return go(shape, list(args))


# ---------------------------------------------------------------------------
# homomorphisms

class GroupMap:
    """Homomorphism of free groups given by images of letters.

    With ``strict=True`` letters missing from the table raise
    :class:`UnknownLetterError`; otherwise they map to themselves.
    """

    def __init__(self, table: Mapping[Letter, Word], strict: bool = True, name: str = ""):
        self.table = dict(table)
        self.strict = strict
        self.name = name

    def image(self, g: Letter) -> Word:
        try:
            return self.table[g]
        except KeyError:
            if self.strict:
                raise UnknownLetterError(g) from None
            return Word.gen(g)

    def __call__(self, w: Word) -> Word:
        return apply_map(self, w)

    def compose(self, other: "GroupMap") -> "GroupMap":
        """``self after other``."""
        return GroupMap({g: self(w) for g, w in other.table.items()}, strict=other.strict)

    def __repr__(self):
        return f"GroupMap({self.name or len(self.table)})"


def apply_map(f: GroupMap, w: Word) -> Word:
    out = Word.identity()
    cache: dict = {}
    for g, e in w.letters:
        key = (g, e)
        img = cache.get(key)
        if img is None:
            img = f.image(g)
            if e < 0:
                img = ~img
            cache[key] = img
        out = out * img
    return out


# ---------------------------------------------------------------------------
# normal closures with free quotients

def in_normal_closure_free_quotient(w: Word, closure_generators: Iterable[Word], basis: Sequence[Letter] | None = None) -> bool:
    """Decide ``w`` in the normal closure of the given generators.

    Only closures whose quotient is again free are supported: each
    generator is a single basis letter, or the product ``x_1 ... x_n`` of
    the whole ordered ``basis``.  The quotient is realised by deleting
    killed letters, or by substituting ``x_n -> (x_1 ... x_{n-1})^-1``.
    """
    gens = list(closure_generators)
    killed: set = set()
    product_rule = None
    for r in gens:
        if len(r) == 1 and r.letters[0][1] in (1, -1):
            killed.add(r.letters[0][0])
            continue
        order = list(basis) if basis is not None else [g for g, _ in r.letters]
        full = Word((b, 1) for b in order)
        if len(set(order)) == len(order) and (r == full or r == ~full):
            product_rule = order
            continue
        raise UnsupportedClosureError(f"closure generator {r} is not a basis letter or the basis product")

    table: dict = {g: Word.identity() for g in killed}
    if product_rule is not None:
        last = product_rule[-1]
        if last not in killed:
            rest = Word((b, 1) for b in product_rule[:-1] if b not in killed)
            table[last] = ~rest
    f = GroupMap(table, strict=False)
    return apply_map(f, w).is_identity()


def free_words(alphabet: Sequence[Letter], max_length: int) -> Iterator[Word]:
    """All reduced words of length at most ``max_length``."""
    yield Word.identity()
    gens = [(g, e) for g in alphabet for e in (1, -1)]
    frontier = [()]
    for _ in range(max_length):
        nxt = []
        for w in frontier:
            for g, e in gens:
                if w and w[-1][0] == g and w[-1][1] == -e:
                    continue
                nw = w + ((g, e),)
                nxt.append(nw)
                yield Word(nw, reduced=True)
        frontier = nxt
