"""
Exception hierarchy for hopfscope.

Every failure that should end a CLI run with exit code 2 derives from
HopfscopeError. Axiom checks never raise these; they return reports.
"""


class HopfscopeError(Exception):
    """Base class for all hopfscope errors."""


class InputFormatError(HopfscopeError):
    """A JSON document does not match the expected schema."""


class DivisionByZero(HopfscopeError, ZeroDivisionError):
    """Division by the zero element of a cyclotomic field."""


class ConductorOverflow(HopfscopeError):
    """The least common conductor exceeds the configured bound."""


class DimensionMismatch(HopfscopeError):
    """Linear maps or vectors do not fit the carrier dimension."""


class CarrierMismatch(HopfscopeError):
    """Matrices over algebras refer to different HopfData carriers."""


class ShapeMismatch(HopfscopeError):
    """A matrix has the wrong shape for the requested check."""


class NonTerminating(HopfscopeError):
    """The coradical filtration stalled below the full space."""


class FieldTooSmall(HopfscopeError):
    """A central idempotent does not split over the current cyclotomic field."""


class DivisibilityViolation(HopfscopeError):
    """A wedge quotient dimension is not divisible by r*s."""


class MissingTrivialVertex(HopfscopeError):
    """The link quiver has no vertex containing the unit."""


class ChevalleyViolation(HopfscopeError):
    """A product of simple subcoalgebras leaves the coradical."""


class BadParams(HopfscopeError, ValueError):
    """Parameters outside the admissible range of a construction."""


class DependentEntries(HopfscopeError):
    """The entries of a matrix product are linearly dependent."""


class NoSolution(HopfscopeError):
    """A linear system has no (invertible) solution."""


class YDViolation(HopfscopeError):
    """Yetter-Drinfeld data failed verification."""


class SplittingViolation(HopfscopeError):
    """A projection/inclusion pair is not a Hopf splitting."""


class NotInR(HopfscopeError):
    """An element is not fixed by the Radford projection."""


class NotCosemisimple(HopfscopeError):
    """A coalgebra expected to be cosemisimple has a nonzero dual radical."""


class InvalidHints(HopfscopeError):
    """User-supplied simple subcoalgebras fail verification."""
