"""Convert Bayesian prior densities into optimal fuzzy membership curves and back.

The package is organized around grid-sampled curves on a bounded interval:
``Density``, ``Membership`` and ``Likelihood`` share one substrate
(:class:`GridFunction`) with linear interpolation and Simpson quadrature.
On top sit the decision-theoretic conversion (:func:`prior_to_membership`),
its calibrated inverse (:func:`membership_to_prior`, :func:`calibrate_b2`,
:func:`calibrate_a2zero`), level-set operations, the data-update pipeline,
and scikit-learn style transformers for composing with the wider ecosystem.
"""

from .cuts import CutSet, complement, core, gamma_cut, is_convex_fuzzy, is_crisp, support
from .decision import (
    LossParams,
    Thresholds,
    loss,
    optimal_membership_values,
    prior_to_membership,
    risk,
)
from .errors import (
    BracketingError,
    DegenerateEvidenceError,
    DegenerateMembershipError,
    DomainError,
    FuzzyPriorError,
    GridMismatchError,
    InfeasibleParameterError,
    NotADensityError,
    NumericalError,
    SingularityError,
    ValidationError,
)
from .estimators import FuzzyBayesUpdate, MembershipToPrior, PriorToMembership
from .grid import (
    DEFAULT_GRID_SIZE,
    Density,
    GridFunction,
    Interval,
    Likelihood,
    Membership,
    evaluate,
    integrate,
    solve_root,
)
from .inverse import (
    AffineCalibration,
    Calibration,
    CrispRates,
    UniquenessReport,
    calibrate_a2zero,
    calibrate_b2,
    in_prior_family,
    membership_to_prior,
    uniqueness_report,
)
from .showcase import SHOWCASE_CASES, ShowcaseCase, ShowcaseResult, build_showcase, bump_membership
from .update import (
    binomial_likelihood,
    flat_likelihood,
    fuzzy_update,
    gaussian_likelihood,
    posterior,
)

__version__ = "0.1.0"

__all__ = [
    "AffineCalibration",
    "BracketingError",
    "Calibration",
    "CrispRates",
    "CutSet",
    "DEFAULT_GRID_SIZE",
    "DegenerateEvidenceError",
    "DegenerateMembershipError",
    "Density",
    "DomainError",
    "FuzzyBayesUpdate",
    "FuzzyPriorError",
    "GridFunction",
    "GridMismatchError",
    "InfeasibleParameterError",
    "Interval",
    "Likelihood",
    "LossParams",
    "Membership",
    "MembershipToPrior",
    "NotADensityError",
    "NumericalError",
    "PriorToMembership",
    "SHOWCASE_CASES",
    "ShowcaseCase",
    "ShowcaseResult",
    "SingularityError",
    "Thresholds",
    "UniquenessReport",
    "ValidationError",
    "binomial_likelihood",
    "build_showcase",
    "bump_membership",
    "calibrate_a2zero",
    "calibrate_b2",
    "complement",
    "core",
    "evaluate",
    "flat_likelihood",
    "fuzzy_update",
    "gamma_cut",
    "gaussian_likelihood",
    "in_prior_family",
    "integrate",
    "is_convex_fuzzy",
    "is_crisp",
    "loss",
    "membership_to_prior",
    "optimal_membership_values",
    "posterior",
    "prior_to_membership",
    "risk",
    "solve_root",
    "support",
    "uniqueness_report",
]
