"""perikit: exact arithmetic for periodic components.

Decides periodicity of connected components of finite cyclic extensions
of algebraic tori, computes and bounds element orders in periodic
components, and enumerates/classifies periodic components of normalizers
of maximal tori in the simple algebraic groups.
"""

from . import errors, intlinalg, monomial, torsion, torusext, weyl

__version__ = "0.1.0"

__all__ = ["errors", "intlinalg", "monomial", "torsion", "torusext", "weyl", "__version__"]
