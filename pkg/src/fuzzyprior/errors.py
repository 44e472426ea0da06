"""Exception hierarchy.

Validation errors (bad inputs, broken invariants) map to CLI exit status 1;
numerical and feasibility errors map to exit status 2.
"""


class FuzzyPriorError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(FuzzyPriorError, ValueError):
    """Invalid input: bad parameters, malformed specs, violated invariants."""


class DomainError(ValidationError):
    """Evaluation point lies outside the function's domain."""


class GridMismatchError(ValidationError):
    """Binary operation on functions sampled on different grids."""


class NumericalError(FuzzyPriorError):
    """Numerical or feasibility failure in an otherwise valid computation."""


class BracketingError(NumericalError):
    """Root-solving bracket does not contain a sign change."""


class SingularityError(NumericalError):
    """Zero denominator in the membership-to-prior map."""


class NotADensityError(NumericalError):
    """The inverse map produced a curve that does not integrate to one.

    Carries the offending integral so callers can report how far off it is.
    """

    def __init__(self, message: str, integral: float):
        super().__init__(message)
        self.integral = integral


class InfeasibleParameterError(NumericalError):
    """A calibration parameter lies outside its feasible range.

    Carries the violated bound.
    """

    def __init__(self, message: str, bound: float):
        super().__init__(message)
        self.bound = bound


class DegenerateMembershipError(NumericalError):
    """Membership curve carries zero mass where positive mass is required."""


class DegenerateEvidenceError(NumericalError):
    """Prior and likelihood share no support: the evidence integral is zero."""
