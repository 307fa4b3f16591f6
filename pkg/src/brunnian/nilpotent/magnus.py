"""Truncated Magnus expansion ``x -> 1 + X`` of free-group words."""

from __future__ import annotations

from ..words import Letter, Word

__all__ = ["MagnusSeries", "magnus_expand", "lcs_weight", "EXCEEDS_CAP"]

EXCEEDS_CAP = "exceeds cap"


class MagnusSeries:
    """Noncommutative polynomial truncated above degree ``cap``.

    ``terms`` maps tuples of letters (monomials) to nonzero coefficients;
    with ``modulus > 0`` coefficients live in ``Z/modulus``.
    """

    __slots__ = ("cap", "modulus", "terms")

    def __init__(self, terms: dict, cap: int, modulus: int = 0):
        if cap < 1:
            raise ValueError("cap must be at least 1")
        self.cap = cap
        self.modulus = modulus
        clean = {}
        for k, v in terms.items():
            if len(k) > cap:
                continue
            if modulus:
                v %= modulus
            if v:
                clean[k] = v
        self.terms = clean

    @classmethod
    def one(cls, cap: int, modulus: int = 0) -> "MagnusSeries":
        return cls({(): 1}, cap, modulus)

    @classmethod
    def generator(cls, g: Letter, sign: int, cap: int, modulus: int = 0) -> "MagnusSeries":
        if sign > 0:
            return cls({(): 1, (g,): 1}, cap, modulus)
        return cls({(g,) * d: (-1) ** d for d in range(cap + 1)}, cap, modulus)

    def __mul__(self, other: "MagnusSeries") -> "MagnusSeries":
        if (self.cap, self.modulus) != (other.cap, other.modulus):
            raise ValueError("incompatible series")
        out: dict = {}
        cap = self.cap
        for ka, va in self.terms.items():
            room = cap - len(ka)
            for kb, vb in other.terms.items():
                if len(kb) <= room:
                    key = ka + kb
                    out[key] = out.get(key, 0) + va * vb
        return MagnusSeries(out, cap, self.modulus)

    def __eq__(self, other):
        return (
            isinstance(other, MagnusSeries)
            and (self.cap, self.modulus) == (other.cap, other.modulus)
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.cap, self.modulus, frozenset(self.terms.items())))

    def degree_part(self, d: int) -> dict:
        return {k: v for k, v in self.terms.items() if len(k) == d}

    def is_one(self) -> bool:
        return self.terms == {(): 1}

    def __str__(self):
        parts = []
        for k in sorted(self.terms, key=lambda k: (len(k), [g.sort_key() for g in k])):
            v = self.terms[k]
            mono = "".join(str(g).upper() for g in k)
            if not k:
                body = str(abs(v))
            elif abs(v) == 1:
                body = mono
            else:
                body = f"{abs(v)}{mono}"
            if not parts:
                parts.append(body if v > 0 else "-" + body)
            else:
                parts.append(("+ " if v > 0 else "- ") + body)
        return " ".join(parts) if parts else "0"

    def __repr__(self):
        return f"MagnusSeries({self}, cap={self.cap}, modulus={self.modulus})"


def magnus_expand(w: Word, cap: int, modulus: int = 0) -> MagnusSeries:
    out = MagnusSeries.one(cap, modulus)
    cache: dict = {}
    for g, e in w.letters:
        s = cache.get((g, e))
        if s is None:
            s = cache[(g, e)] = MagnusSeries.generator(g, e, cap, modulus)
        out = out * s
    return out


def lcs_weight(w: Word, cap: int):
    """Lowest degree of a nonzero term of ``expand(w) - 1``, else ``EXCEEDS_CAP``."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    s = magnus_expand(w, cap)
    degrees = [len(k) for k in s.terms if k]
    return min(degrees) if degrees else EXCEEDS_CAP
