"""
Finitely presented nilpotent groups of class 2.

Elements of the free class-2 group on ``g_1..g_r`` are pairs ``(e, c)``
standing for ``g_1^e_1 ... g_r^e_r * prod c_ji^c[j,i]`` with
``c_ji = [g_j, g_i]`` for ``j < i``.  Collecting ``g_i^a g_j^b`` with
``i > j`` costs ``c_ji^(-ab)``, which gives the product rule below.

A normal subgroup ``H`` of the free class-2 group is stored as

* a basis ``b_1..b_p`` of its image lattice in ``Z^r``,
* one element of ``H`` over each ``b_i`` (a lift),
* the lattice ``K = {c : (0, c) in H}``,

so ``(e, c)`` lies in ``H`` iff ``e = sum m_i b_i`` and ``c`` agrees with
the central part of ``prod lift_i^m_i`` modulo ``K``.  A quotient ``F/N``
is handled through preimages: every subgroup of ``G = F/N`` that contains
``N`` is a normal-subgroup record of ``F``.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Sequence

from ..words import Letter, Word
from .smith import Lattice, RowSolver, hermite_basis, identity, left_kernel

__all__ = ["Class2Group", "Class2Element", "Class2Subgroup", "class2_quotient", "INFINITE"]

INFINITE = "infinite"


class Class2Element:
    __slots__ = ("group", "e", "c")

    def __init__(self, group: "Class2Group", e: Sequence[int], c: Sequence[int]):
        self.group = group
        self.e = tuple(e)
        self.c = tuple(c)

    def _same(self, other):
        if not isinstance(other, Class2Element) or other.group is not self.group:
            raise ValueError("elements belong to different groups")

    def __mul__(self, other):
        self._same(other)
        return Class2Element(self.group, *self.group._mul((self.e, self.c), (other.e, other.c)))

    def __invert__(self):
        return Class2Element(self.group, *self.group._inv((self.e, self.c)))

    def __pow__(self, n: int):
        return Class2Element(self.group, *self.group._pow((self.e, self.c), n))

    def __eq__(self, other):
        """Equality in the quotient group."""
        self._same(other)
        return self.group.is_identity(~self * other)

    def __hash__(self):
        raise TypeError("quotient elements are not hashable; compare with ==")

    def __repr__(self):
        return f"Class2Element(e={list(self.e)}, c={list(self.c)})"


class _Record:
    """Normal subgroup of the free class-2 group (see module docstring)."""

    def __init__(self, group: "Class2Group", basis, lifts, K: Lattice):
        self.group = group
        self.basis = [list(b) for b in basis]
        self.lifts = list(lifts)
        self.K = K
        self._solver = RowSolver(self.basis, group.r)

    @classmethod
    def from_generators(cls, group: "Class2Group", elements: Sequence[tuple]) -> "_Record":
        r, s = group.r, group.s
        E = [list(x[0]) for x in elements]
        kgens = [group._bracket(x[0], u) for x in elements for u in identity(r)]
        # products of generators with vanishing exponent part are central
        for m in left_kernel(E, r):
            kgens.append(list(group._product(elements, m)[1]))
        for x in elements:
            if not any(x[0]):
                kgens.append(list(x[1]))
        K = Lattice(kgens, s)
        if not E:
            return cls(group, [], [], K)
        from .smith import smith_normal_form

        snf = smith_normal_form(E, r)
        basis, lifts = [], []
        for i in range(snf.rank):
            coeffs = snf.U[i]
            basis.append([sum(coeffs[t] * E[t][j] for t in range(len(E))) for j in range(r)])
            lifts.append(group._product(elements, coeffs))
        return cls(group, basis, lifts, K)

    def lift(self, e: Sequence[int]):
        m = self._solver.solve(e)
        if m is None:
            return None
        return self.group._product(self.lifts, m)

    def contains(self, x: tuple) -> bool:
        p = self.lift(x[0])
        if p is None:
            return False
        z = self.group._mul(x, self.group._inv(p))
        return self.K.contains(z[1])

    def lattice(self) -> Lattice:
        return Lattice(self.basis, self.group.r)

    def intersect(self, other: "_Record") -> "_Record":
        g = self.group
        common = (self.lattice() & other.lattice()).basis
        ksum = self.K + other.K
        deltas = []
        for b in common:
            c1, c2 = self.lift(b)[1], other.lift(b)[1]
            deltas.append([x - y for x, y in zip(c1, c2)])
        rows = []
        if common:
            for k in left_kernel(deltas + ksum.basis, g.s):
                a = k[: len(common)]
                rows.append([sum(a[i] * common[i][j] for i in range(len(common))) for j in range(g.r)])
        basis = hermite_basis(rows, g.r)
        split = RowSolver(self.K.basis + [[-x for x in v] for v in other.K.basis], g.s)
        lifts = []
        for b in basis:
            p1, p2 = self.lift(b), other.lift(b)
            diff = [y - x for x, y in zip(p1[1], p2[1])]
            coeffs = split.solve(diff)
            k1 = [sum(coeffs[i] * self.K.basis[i][j] for i in range(self.K.rank)) for j in range(g.s)]
            lifts.append(g._mul(p1, ((0,) * g.r, tuple(k1))))
        return _Record(g, basis, lifts, self.K & other.K)

    def issubset(self, other: "_Record") -> bool:
        zero = (0,) * self.group.r
        return all(other.contains(x) for x in self.lifts) and all(
            other.contains((zero, tuple(k))) for k in self.K.basis
        )


class Class2Subgroup:
    """A normal subgroup of a :class:`Class2Group` (stored as its preimage)."""

    def __init__(self, group: "Class2Group", record: _Record, label: str = ""):
        self.group = group
        self.record = record
        self.label = label

    def contains(self, x: Class2Element) -> bool:
        if x.group is not self.group:
            raise ValueError("element from a different group")
        return self.record.contains((x.e, x.c))

    __contains__ = contains

    def __and__(self, other: "Class2Subgroup") -> "Class2Subgroup":
        if other.group is not self.group:
            raise ValueError("subgroups of different groups")
        return Class2Subgroup(self.group, self.record.intersect(other.record))

    def __le__(self, other: "Class2Subgroup") -> bool:
        return self.record.issubset(other.record)

    def __eq__(self, other):
        return isinstance(other, Class2Subgroup) and self <= other and other <= self

    def generators(self) -> list:
        zero = (0,) * self.group.r
        gens = [Class2Element(self.group, *x) for x in self.record.lifts]
        gens += [Class2Element(self.group, zero, k) for k in self.record.K.basis]
        return gens

    def is_abelian(self) -> bool:
        gens = self.generators()
        return all(self.group.is_identity(self.group.commutator(a, b)) for a in gens for b in gens)

    def invariants(self) -> tuple:
        """``(torsion invariants, free rank)`` of this subgroup modulo the relators.

        Only defined for abelian subgroups.
        """
        if not self.is_abelian():
            raise ValueError("invariants are only computed for abelian subgroups")
        g = self.group
        N = g._N
        rec = self.record
        p, q = len(rec.lifts), rec.K.rank
        dim = p + q
        # exponent vectors whose image lattice part falls in N's lattice
        m1 = []
        if p:
            for k in left_kernel(rec.basis + N.basis, g.r):
                m1.append(list(k[:p]) + [0] * q)
        for j in range(q):
            m1.append([0] * p + [1 if i == j else 0 for i in range(q)])
        zero = (0,) * g.r
        psi = []
        for v in m1:
            x = g._product(rec.lifts, v[:p])
            x = g._mul(x, g._product([(zero, tuple(k)) for k in rec.K.basis], v[p:]))
            z = g._mul(x, g._inv(N.lift(x[0])))
            psi.append(list(z[1]))
        rel = []
        if m1:
            for k in left_kernel(psi + N.K.basis, g.s):
                a = k[: len(m1)]
                rel.append([sum(a[i] * m1[i][j] for i in range(len(m1))) for j in range(dim)])
        return Lattice(rel, dim).quotient_invariants()

    def __repr__(self):
        return f"Class2Subgroup({self.label or '?'})"


class Class2Group:
    """Largest class-2 quotient of the group ``<generators | relators>``."""

    def __init__(self, generators: Sequence[Letter], relators: Iterable[Word] = (), name: str = "G"):
        self.generators = list(generators)
        self.name = name
        self.r = len(self.generators)
        self.pairs = [(j, i) for i in range(self.r) for j in range(i)]
        self.pairs.sort()
        self.pair_index = {p: k for k, p in enumerate(self.pairs)}
        self.s = len(self.pairs)
        self._index = {g: k for k, g in enumerate(self.generators)}
        self.relators = list(relators)
        self._N = _Record.from_generators(self, [self._word(w) for w in self.relators])

    # -- free class-2 arithmetic on (e, c) tuples

    def _Q(self, e, f) -> list:
        return [-e[i] * f[j] for (j, i) in self.pairs]

    def _bracket(self, e, f) -> list:
        return [e[j] * f[i] - e[i] * f[j] for (j, i) in self.pairs]

    def _mul(self, x, y):
        q = self._Q(x[0], y[0])
        return (
            tuple(a + b for a, b in zip(x[0], y[0])),
            tuple(a + b + d for a, b, d in zip(x[1], y[1], q)),
        )

    def _inv(self, x):
        q = self._Q(x[0], x[0])
        return tuple(-a for a in x[0]), tuple(-a + d for a, d in zip(x[1], q))

    def _pow(self, x, n: int):
        if n < 0:
            x, n = self._inv(x), -n
        q = self._Q(x[0], x[0])
        k = comb(n, 2)
        return tuple(n * a for a in x[0]), tuple(n * a + k * d for a, d in zip(x[1], q))

    def _one(self):
        return (0,) * self.r, (0,) * self.s

    def _product(self, elements, exponents):
        out = self._one()
        for x, m in zip(elements, exponents):
            if m:
                out = self._mul(out, self._pow(x, m))
        return out

    def _word(self, w: Word):
        out = self._one()
        for g, e in w.letters:
            try:
                k = self._index[g]
            except KeyError:
                raise ValueError(f"letter {g} is not a generator of {self.name}") from None
            unit = tuple(1 if i == k else 0 for i in range(self.r)), (0,) * self.s
            out = self._mul(out, unit if e > 0 else self._inv(unit))
        return out

    # -- public element API

    def element(self, w: Word | str) -> Class2Element:
        if isinstance(w, str):
            w = Word.parse(w)
        return Class2Element(self, *self._word(w))

    def identity(self) -> Class2Element:
        return Class2Element(self, *self._one())

    def gen(self, g: Letter | int) -> Class2Element:
        k = g if isinstance(g, int) else self._index[g]
        return Class2Element(self, tuple(1 if i == k else 0 for i in range(self.r)), (0,) * self.s)

    def commutator(self, a: Class2Element, b: Class2Element) -> Class2Element:
        return ~a * ~b * a * b

    def is_identity(self, x: Class2Element) -> bool:
        return self._N.contains((x.e, x.c))

    def order_of(self, x: Class2Element):
        n0 = self._N.lattice().order_of(x.e)
        if n0 is None:
            return INFINITE
        y = self._pow((x.e, x.c), n0)
        z = self._mul(y, self._inv(self._N.lift(y[0])))
        k = self._N.K.order_of(z[1])
        return INFINITE if k is None else n0 * k

    def whole(self) -> Class2Subgroup:
        gens = [(tuple(u), (0,) * self.s) for u in identity(self.r)]
        gens += [((0,) * self.r, tuple(u)) for u in identity(self.s)]
        return Class2Subgroup(self, _Record.from_generators(self, gens), "G")

    def normal_closure(self, elements: Iterable[Class2Element | Word | str], label: str = "") -> Class2Subgroup:
        xs = []
        for x in elements:
            if not isinstance(x, Class2Element):
                x = self.element(x)
            elif x.group is not self:
                raise ValueError("element from a different group")
            xs.append((x.e, x.c))
        rels = [self._word(w) for w in self.relators]
        return Class2Subgroup(self, _Record.from_generators(self, xs + rels), label)

    def intersect(self, *subgroups: Class2Subgroup) -> Class2Subgroup:
        if not subgroups:
            return self.whole()
        out = subgroups[0]
        for h in subgroups[1:]:
            out = out & h
        return out

    def is_member(self, x: Class2Element, h: Class2Subgroup) -> bool:
        return h.contains(x)

    def center(self) -> Class2Subgroup:
        """Preimage of the centre: ``e`` with ``[e, g_k]`` trivial for every ``k``."""
        r, s = self.r, self.s
        KN = self._N.K.basis
        rows = []
        for u in identity(r):
            row = []
            for v in identity(r):
                row += self._bracket(u, v)
            rows.append(row)
        block = []
        for k in range(r):
            for b in KN:
                block.append([0] * (k * s) + list(b) + [0] * ((r - k - 1) * s))
        basis = [list(k[:r]) for k in left_kernel(rows + block, r * s)] if r else []
        gens = [(tuple(b), (0,) * s) for b in basis] + [((0,) * r, tuple(u)) for u in identity(s)]
        return Class2Subgroup(self, _Record.from_generators(self, gens), "Z(G)")

    def abelianization_invariants(self) -> tuple:
        return self._N.lattice().quotient_invariants()

    def report(self, elements: dict | None = None) -> dict:
        tors, free = self.abelianization_invariants()
        ctors, cfree = self.center().invariants()
        out = {
            "generators": [str(g) for g in self.generators],
            "abelianization": {"torsion": tors, "free_rank": free},
            "center": {"torsion": ctors, "free_rank": cfree},
        }
        if elements:
            out["orders"] = {k: self.order_of(v if isinstance(v, Class2Element) else self.element(v)) for k, v in elements.items()}
        return out


def class2_quotient(generators: Sequence[Letter], relators: Iterable[Word]) -> Class2Group:
    return Class2Group(generators, relators)
