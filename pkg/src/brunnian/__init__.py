"""Exact computations with Brunnian braids, simplicial groups and sphere presentations."""

from .words import Letter, Word, commutator, left_normed, letter, parse_word

__version__ = "0.1.0"

__all__ = ["Letter", "Word", "commutator", "left_normed", "letter", "parse_word", "__version__"]
