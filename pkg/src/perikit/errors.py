"""Exception hierarchy shared by all perikit modules.

Every domain error raised by the library derives from :class:`PerikitError`,
so callers (notably the CLI) can map them to a single exit status.
"""


class PerikitError(Exception):
    """Base class for all domain errors raised by perikit."""


class DimensionMismatch(PerikitError):
    """Operands have incompatible dimensions."""


class NonPeriodic(PerikitError):
    """The automorphism fixes a positive-dimensional subgroup, or the
    requested component contains elements of unbounded order."""


# The lift order rules use the same precondition; keep one class, two names.
NotPeriodic = NonPeriodic


class InvalidExtension(PerikitError):
    """Extension data violates a structural invariant (non-unimodular
    matrix, automorphism power not trivial, or unfixed torus part)."""


class NonRealEntries(PerikitError):
    """An integer realization was requested for a monomial matrix whose
    entries are not all +-1."""


class InvalidDivisor(PerikitError):
    """A block construction needs one parameter to divide another."""


class TooLarge(PerikitError):
    """Enumeration was refused because the group is too large (or is
    gated behind an explicit opt-in)."""


class UnsupportedFamily(PerikitError):
    """No matrix model is available for the requested family."""


class InternalCheckFailed(PerikitError):
    """A built-in cross-check failed; indicates a bug, not bad input."""
