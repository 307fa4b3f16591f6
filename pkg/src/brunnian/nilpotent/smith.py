"""
Exact integer linear algebra: Smith normal form and lattice helpers.

Matrices are lists of rows of Python ints.  Lattices are given by
generating row vectors and are normalised to Hermite bases when needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Sequence

Matrix = list


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(a))]


def transpose(a: Matrix, ncols: int | None = None) -> Matrix:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(r) for r in zip(*a)]


def determinant(a: Matrix) -> int:
    """Bareiss fraction-free determinant."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SmithForm:
    """``U * A * V == D`` with ``U``, ``V`` unimodular."""

    U: Matrix
    D: Matrix
    V: Matrix
    rank: int

    @property
    def invariants(self) -> list:
        return [self.D[i][i] for i in range(self.rank)]


def smith_normal_form(a: Sequence[Sequence[int]], ncols: int | None = None) -> SmithForm:
    m = len(a)
    n = len(a[0]) if m else (ncols or 0)
    M = [[int(x) for x in row] for row in a]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in M:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):  # row dst += k * row src
        M[dst] = [x + k * y for x, y in zip(M[dst], M[src])]
        U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, k):
        for row in M:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if M[i][j] and (best is None or abs(M[i][j]) < abs(M[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            done = True
            for i in range(t + 1, m):
                if M[i][t]:
                    add_row(i, t, -(M[i][t] // M[t][t]))
                    if M[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if M[t][j]:
                    add_col(j, t, -(M[t][j] // M[t][t]))
                    if M[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if M[i][j] % M[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return SmithForm(U, M, V, t)


# ---------------------------------------------------------------------------
# lattices in Z^k spanned by rows


def hermite_basis(rows: Sequence[Sequence[int]], dim: int) -> Matrix:
    """Row-style Hermite normal form basis of the lattice spanned by ``rows``."""
    M = [list(map(int, r)) for r in rows if any(r)]
    basis = []
    col = 0
    while M and col < dim:
        nz = [r for r in M if r[col]]
        if not nz:
            col += 1
            continue
        rest = [r for r in M if not r[col]]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            p = nz[0]
            new = [p]
            for r in nz[1:]:
                q = r[col] // p[col]
                r = [x - q * y for x, y in zip(r, p)]
                if r[col]:
                    new.append(r)
                elif any(r):
                    rest.append(r)
            nz = new
        p = nz[0]
        if p[col] < 0:
            p = [-x for x in p]
        basis.append(p)
        M = rest
        col += 1
    # reduce entries above pivots
    for i, b in enumerate(basis):
        c = next(k for k, x in enumerate(b) if x)
        for h in range(i):
            q = basis[h][c] // b[c]
            if q:
                basis[h] = [x - q * y for x, y in zip(basis[h], b)]
    return basis


class RowSolver:
    """Solve ``x * rows == v`` over the integers (rows may be dependent)."""

    def __init__(self, rows: Sequence[Sequence[int]], dim: int):
        self.rows = [list(map(int, r)) for r in rows]
        self.dim = dim
        self.snf = smith_normal_form(self.rows, dim)

    def coords(self, v: Sequence[int]) -> list:
        V = self.snf.V
        return [sum(v[i] * V[i][j] for i in range(self.dim)) for j in range(self.dim)]

    def solve(self, v: Sequence[int]) -> list | None:
        snf = self.snf
        w = self.coords(v)
        if any(w[snf.rank:]) or any(w[i] % snf.D[i][i] for i in range(snf.rank)):
            return None
        y = [w[i] // snf.D[i][i] for i in range(snf.rank)]
        U = snf.U
        return [sum(y[i] * U[i][j] for i in range(snf.rank)) for j in range(len(self.rows))]


class Lattice:
    """Sublattice of ``Z^dim``; ``basis`` rows are in Hermite form."""

    def __init__(self, rows: Sequence[Sequence[int]], dim: int):
        self.dim = dim
        self.basis = hermite_basis(rows, dim)
        self._snf = None

    @classmethod
    def full(cls, dim: int) -> "Lattice":
        return cls(identity(dim), dim)

    @classmethod
    def zero(cls, dim: int) -> "Lattice":
        return cls([], dim)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def _solver(self) -> RowSolver:
        if self._snf is None:
            self._snf = RowSolver(self.basis, self.dim)
        return self._snf

    def _smith(self) -> SmithForm:
        return self._solver().snf

    def coords(self, v: Sequence[int]) -> list:
        """``v`` in the adapted basis: ``v * V``."""
        return self._solver().coords(v)

    def contains(self, v: Sequence[int]) -> bool:
        return self._solver().solve(v) is not None

    def solve(self, v: Sequence[int]) -> list | None:
        """Coefficients ``x`` with ``x * basis == v``, or ``None``."""
        return self._solver().solve(v)

    def order_of(self, v: Sequence[int]):
        """Order of ``v`` in ``Z^dim / self``; ``None`` if infinite."""
        snf = self._smith()
        w = self.coords(v)
        if any(w[snf.rank:]):
            return None
        out = 1
        for i in range(snf.rank):
            d = snf.D[i][i]
            out = lcm(out, d // gcd(d, w[i]))
        return out

    def quotient_invariants(self) -> tuple:
        """``(torsion invariants > 1, free rank)`` of ``Z^dim / self``."""
        snf = self._smith()
        return [d for d in snf.invariants if d != 1], self.dim - snf.rank

    def __add__(self, other: "Lattice") -> "Lattice":
        return Lattice(self.basis + other.basis, self.dim)

    def __and__(self, other: "Lattice") -> "Lattice":
        return Lattice(intersect_rows(self.basis, other.basis, self.dim), self.dim)

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.dim == other.dim and self.basis == other.basis

    def __le__(self, other: "Lattice") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __repr__(self):
        return f"Lattice(dim={self.dim}, basis={self.basis})"


def left_kernel(rows: Sequence[Sequence[int]], dim: int) -> Matrix:
    """Basis of ``{x : x * rows == 0}``."""
    if not rows:
        return []
    snf = smith_normal_form(transpose(rows, len(rows)) if dim else [[0] * len(rows)], len(rows))
    V = snf.V
    k = len(rows)
    return [[V[i][j] for i in range(k)] for j in range(snf.rank, k)]


def intersect_rows(b1: Sequence[Sequence[int]], b2: Sequence[Sequence[int]], dim: int) -> Matrix:
    if not b1 or not b2:
        return []
    stacked = [list(r) for r in b1] + [[-x for x in r] for r in b2]
    out = []
    for x in left_kernel(stacked, dim):
        a = x[: len(b1)]
        out.append([sum(a[i] * b1[i][j] for i in range(len(b1))) for j in range(dim)])
    return out


def invariant_factors_by_minors(a: Sequence[Sequence[int]]) -> list:
    """Invariant factors from gcds of ``k x k`` minors (slow reference oracle)."""
    from itertools import combinations

    m = len(a)
    n = len(a[0]) if m else 0
    divisors = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                g = gcd(g, determinant([[a[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        divisors.append(g)
    return [divisors[i] // divisors[i - 1] for i in range(1, len(divisors))]
