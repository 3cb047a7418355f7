"""Exception types shared across the package.

Every error raised on a documented failure path derives from ArcforgeError,
so callers (and the CLI) can distinguish contract violations from bugs.
"""


class ArcforgeError(Exception):
    """Base class for all documented failures."""


class NotPrimeError(ArcforgeError):
    """The claimed characteristic is not a prime number."""


class NotIrreducibleError(ArcforgeError):
    """A supplied defining polynomial factors over the prime field."""


class FieldMismatchError(ArcforgeError):
    """Operands belong to different fields."""


class NotADivisorError(ArcforgeError):
    """Requested subfield degree does not divide the extension degree."""


class BadParametersError(ArcforgeError):
    """Inputs violate a constructor's stated preconditions."""


class TooLargeError(ArcforgeError):
    """The requested enumeration exceeds the configured size cap."""


class SamePointError(ArcforgeError):
    """Two coincident points do not determine a line."""


class NotOnCurveError(ArcforgeError):
    """The point does not lie on the curve."""


class SingularPointError(ArcforgeError):
    """All partial derivatives vanish; no tangent line exists."""


class NotIncidentError(ArcforgeError):
    """The point does not lie on the line."""


class NoPivotError(ArcforgeError):
    """No variable occurs as a pure power with nonzero coefficient."""


class DegreeMismatchError(ArcforgeError):
    """Polynomial degrees are inconsistent with the identity being checked."""


class NoPointsFoundError(ArcforgeError):
    """Sampling exhausted its attempt budget without finding curve points."""


class InconsistentEstimateError(ArcforgeError):
    """A sampled estimate contradicts a proven arithmetic constraint."""


class NotAnArcError(ArcforgeError):
    """The point set exceeds its declared secant bound."""


class WrongDError(ArcforgeError):
    """The check applies only to arcs with a specific declared bound."""


class OddDegreeFieldError(ArcforgeError):
    """A square field (even extension degree) is required."""


class ConcurrentLinesError(ArcforgeError):
    """The three lines share a common point."""


class PointOnArcError(ArcforgeError):
    """Witness lines are defined only for points outside the arc."""


class UnsupportedFamilyError(ArcforgeError):
    """No witness-line recipe exists for this construction."""


class WitnessValidationError(ArcforgeError):
    """A prescribed witness line failed its independent meet-count check."""


class NotDivisibleError(ArcforgeError):
    """The contact order does not divide d(d-1)."""
