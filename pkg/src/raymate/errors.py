"""Exception hierarchy.

Verdicts (obstructed, no cluster, ...) are ordinary return values. Exceptions
are raised for bad input and for internal consistency failures; the latter
mean a computed object contradicts a structural theorem and should never be
seen in normal operation.
"""


class RayMateError(Exception):
    """Base class for all errors raised by raymate."""


class InvalidInputError(RayMateError, ValueError):
    """Malformed angle, pair, rotation number or target datum."""


class NotPeriodicError(InvalidInputError):
    """Angle is not periodic under multiplication by the degree."""


class ShapeError(InvalidInputError):
    """Angle has the wrong period shape for the requested operation."""


class InvalidDescriptorError(InvalidInputError):
    """Pair of angles is not a characteristic pair."""


class IndeterminateLimbError(InvalidInputError):
    """Limb of a parameter angle is undefined (wake boundary or no limb)."""


class InternalError(RayMateError):
    """A computed object violated an expected structural property."""


class LandingCriterionError(InternalError):
    """A landing table failed validation (linked or non-equivariant classes).

    ``classes`` holds the offending pair of classes when available.
    """

    def __init__(self, message, classes=None):
        super().__init__(message)
        self.classes = classes


class OracleAmbiguityError(InternalError):
    """The pullback oracle could not decide a leaf unambiguously."""


class StructuralError(InternalError):
    """A ray-class component does not have the expected star structure."""


class InternalConsistencyError(InternalError):
    """A uniqueness claim failed (zero or several candidates)."""


class TheoremViolation(InternalError):
    """An enumerated or computed result contradicts a proved statement.

    ``witness`` carries whatever object exhibits the failure.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
