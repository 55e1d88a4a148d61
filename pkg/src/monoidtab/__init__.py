"""Exact computations with tableau-indexed modules of finite transformation monoids.

The package builds Schur and Weyl modules of ``GL_n`` over the rationals, pushes
them through the symmetrized Schur functor to obtain modules for the rook monoid,
the partial and full transformation monoids, and checks the dimension,
character, filtration and graded-ideal identities relating them.
"""

__version__ = "0.1.0"
