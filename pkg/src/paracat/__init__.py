"""Catalan combinatorics of parabolic quotients.

The type-A side works with one-line permutations: pattern-avoiding members
of a parabolic quotient, the lattice they form under weak order, and the
noncrossing/nonnesting set partitions they biject with.  The general side
realizes the finite (and one affine) Coxeter systems by exact matrices and
provides aligned elements for arbitrary reduced words, their noncrossing
images, nonnesting ideals of root posets, and subword complexes with their
flip posets.
"""

from .permutations import JContext, j_context
from .posets import FinitePoset, PosetError

__all__ = ["JContext", "j_context", "FinitePoset", "PosetError"]
__version__ = "0.1.0"
