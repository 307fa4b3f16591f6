"""Nilpotent tools: Magnus expansion, Smith normal form, class-2 quotients."""

from .class2 import INFINITE, Class2Element, Class2Group, Class2Subgroup, class2_quotient
from .magnus import EXCEEDS_CAP, MagnusSeries, lcs_weight, magnus_expand
from .smith import Lattice, SmithForm, invariant_factors_by_minors, smith_normal_form

__all__ = [
    "INFINITE",
    "Class2Element",
    "Class2Group",
    "Class2Subgroup",
    "class2_quotient",
    "EXCEEDS_CAP",
    "MagnusSeries",
    "lcs_weight",
    "magnus_expand",
    "Lattice",
    "SmithForm",
    "invariant_factors_by_minors",
    "smith_normal_form",
]
