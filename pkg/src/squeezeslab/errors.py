"""Exception types raised by the numerical routines.

Plain ``ValueError`` is used for ordinary domain violations (non-positive
frequency, negative squeeze magnitude, and so on).  The classes below mark
failures of the physics or of the numerics that a caller may want to handle
separately from bad input.
"""


class SqueezeSlabError(Exception):
    """Base class for slab-response and approximation failures."""


class SingularityError(SqueezeSlabError):
    """A slab response denominator vanished (resonant pole)."""


class RegimeError(SqueezeSlabError):
    """An approximation was evaluated outside its regime of validity."""


class AccuracyError(SqueezeSlabError):
    """A quadrature failed its grid-doubling convergence check."""


class NoExtremumError(SqueezeSlabError):
    """The thickness-extremum equation has no solution for these parameters."""
