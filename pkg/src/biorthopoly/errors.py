"""Exception types shared across the library.

Every failure mode that callers are expected to distinguish gets its own
class; all inherit from BiorthopolyError so blanket handling stays possible.
Degeneracy errors carry the offending index as an attribute.
"""


class BiorthopolyError(Exception):
    """Base class for all library-specific errors."""


class ZeroDenominator(BiorthopolyError):
    """A ratio p/q was requested with q = 0."""


class InsufficientNodes(BiorthopolyError):
    """A nodal polynomial needs more grid nodes than are available."""


class IndexOutOfRange(BiorthopolyError):
    """An index or degree exceeds what the data supports."""


class DegenerateInterpolant(BiorthopolyError):
    """A divided difference alpha_n vanished where a monic interpolant needs it."""

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"alpha_{index} = 0: monic interpolant of degree {index} undefined")


class DegenerateInput(BiorthopolyError):
    """A recurrence was given a zero leading coefficient."""

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"alpha_{index} = 0: recurrence coefficients undefined")


class NuVanishes(BiorthopolyError):
    """The auxiliary polynomial T_n lost its degree-n term (nu_n = 0)."""

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"nu_{index} = 0: T_{index} degenerates below degree {index}")


class ZeroSampleValue(BiorthopolyError):
    """A sample value A_s = 0 appeared where the pairing divides by it."""

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"A_{index} = 0: residue pairing divides by the sample values")


class PoleEvaluation(BiorthopolyError):
    """A rational function was evaluated at one of its poles."""


class LowerParameterPole(BiorthopolyError):
    """A terminating 2F1 hit a vanishing lower-parameter Pochhammer factor."""


class NonFiniteSample(BiorthopolyError):
    """A contour integrand overflowed or was otherwise non-finite at a node."""


class ParseError(BiorthopolyError):
    """Problem input could not be parsed into a valid Samples instance."""


class InvalidParameter(BiorthopolyError):
    """A command parameter is outside its admissible range."""
