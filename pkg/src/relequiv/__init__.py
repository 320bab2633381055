"""Relative invariants and relative equivariants of finite matrix groups graded over Z_m."""

from .cyclotomic import Cyclotomic, parse_cyclotomic, root_of_unity
from .group import GradedGroup, GroupElement, close_group
from .polynomial import Poly, PolyMap
from .series import IntSeries

__version__ = "0.1.0"

__all__ = [
    "Cyclotomic",
    "parse_cyclotomic",
    "root_of_unity",
    "GradedGroup",
    "GroupElement",
    "close_group",
    "Poly",
    "PolyMap",
    "IntSeries",
]
