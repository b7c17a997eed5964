"""Finite rings, their non-commuting graphs, exact commuting probability and
Z-isoclinism checks, backed by the C++ core."""

from fractions import Fraction

from ncgraph._core import *  # noqa: F401,F403
from ncgraph._core import Rational


def to_fraction(r: Rational) -> Fraction:
    """Exact conversion of a core Rational to fractions.Fraction."""
    return Fraction(r.num, r.den)


__all__ = [name for name in dir() if not name.startswith("_")]
