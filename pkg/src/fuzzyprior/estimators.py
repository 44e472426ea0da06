"""Scikit-learn compatible transformers over grid-sampled curves.

Rows of ``X`` are curves sampled on a shared uniform grid over ``domain``:
density rows for :class:`PriorToMembership`, membership rows for
:class:`MembershipToPrior` and :class:`FuzzyBayesUpdate`. The estimators
follow the standard contract (``get_params``/``set_params``, ``fit`` before
``transform``), so they clone and compose with pipelines.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .decision import LossParams, optimal_membership_values
from .errors import (
    DegenerateEvidenceError,
    NotADensityError,
    SingularityError,
    ValidationError,
)
from .grid import DENSITY_TOL, Interval, Membership, as_interval, simpson_weights
from .inverse import NORMALIZATION_GATE, calibrate_b2


def check_curve_matrix(X, n_features: int | None = None) -> np.ndarray:
    """Validate ``X`` as a matrix of curves: 2D, finite, odd width >= 3.

    A single 1D curve is accepted and reshaped to one row.
    """
    X = check_array(X, dtype=np.float64, ensure_2d=False, ensure_all_finite=True)
    if X.ndim == 1:
        X = X.reshape(1, -1)
    if X.ndim != 2:
        raise ValidationError(f"X must be a curve or a matrix of curves, got ndim={X.ndim}")
    width = X.shape[1]
    if width < 3 or width % 2 == 0:
        raise ValidationError(f"curves need an odd number of samples >= 3, got {width}")
    if n_features is not None and width != n_features:
        raise ValidationError(
            f"curves have {width} samples but the estimator was fitted with {n_features}"
        )
    return X


def _row_integrals(X: np.ndarray, domain: Interval) -> np.ndarray:
    step = domain.length / (X.shape[1] - 1)
    return (X @ simpson_weights(X.shape[1])) * (step / 3.0)


def _check_density_rows(X: np.ndarray, domain: Interval, tol: float, what: str = "X") -> None:
    if np.any(X < 0):
        raise ValidationError(f"{what} rows must be nonnegative to be densities")
    totals = _row_integrals(X, domain)
    bad = np.flatnonzero(np.abs(totals - 1.0) > tol)
    if bad.size:
        raise ValidationError(
            f"{what} row {bad[0]} integrates to {totals[bad[0]]!r}, not 1 within {tol!r}"
        )


def _check_membership_rows(X: np.ndarray, what: str = "X") -> None:
    if np.any(X < 0) or np.any(X > 1):
        raise ValidationError(f"{what} rows must lie in [0, 1] to be memberships")


class PriorToMembership(TransformerMixin, BaseEstimator):
    """Transform density rows into their optimal membership rows.

    The map is stateless given the loss coefficients; ``fit`` validates the
    input and records the branch thresholds.

    Parameters
    ----------
    a1, a2 : float
        Linear and quadratic miss-penalty coefficients (a1 + a2 > 0).
    b1, b2 : float
        Linear and quadratic size-penalty coefficients (b1 + b2 > 0).
    domain : pair of floats
        Interval the curves are sampled on.
    density_tol : float
        Allowed deviation of each row's Simpson integral from 1.
    """

    def __init__(self, a1=1.0, a2=1.0, b1=0.5, b2=1.0, domain=(0.0, 1.0), density_tol=DENSITY_TOL):
        self.a1 = a1
        self.a2 = a2
        self.b1 = b1
        self.b2 = b2
        self.domain = domain
        self.density_tol = density_tol

    def _loss_params(self) -> LossParams:
        return LossParams(self.a1, self.a2, self.b1, self.b2)

    def fit(self, X, y=None):
        params = self._loss_params()
        dom = as_interval(self.domain)
        X = check_curve_matrix(X)
        _check_density_rows(X, dom, self.density_tol)
        self.n_features_in_ = X.shape[1]
        th = params.thresholds()
        self.thresholds_ = (th.t_lo, th.t_hi)
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "thresholds_")
        X = check_curve_matrix(X, self.n_features_in_)
        _check_density_rows(X, as_interval(self.domain), self.density_tol)
        return optimal_membership_values(self._loss_params(), X)


class MembershipToPrior(TransformerMixin, BaseEstimator):
    """Calibrate the size penalty on a membership curve and invert it.

    ``fit`` takes a single membership curve and learns the quadratic size
    penalty ``b2_`` that makes the inverse map a proper density, together
    with the normalization integrals ``c1_``/``c2_``, the feasibility bound
    ``b1_max_``, and range diagnostics. ``transform`` maps membership rows to
    prior rows under the learned coefficients; ``inverse_transform`` maps
    prior rows back and recovers the fitted curve exactly when it stays
    strictly inside (0, 1).
    """

    def __init__(self, a1=1.0, a2=1.0, b1=0.5, domain=(0.0, 1.0)):
        self.a1 = a1
        self.a2 = a2
        self.b1 = b1
        self.domain = domain

    def fit(self, X, y=None):
        dom = as_interval(self.domain)
        X = check_curve_matrix(X)
        if X.shape[0] != 1:
            raise ValidationError(
                f"fit expects a single membership curve, got {X.shape[0]} rows"
            )
        _check_membership_rows(X)
        m = Membership(dom, X[0])
        cal = calibrate_b2(self.a1, self.a2, self.b1, m)
        self.n_features_in_ = X.shape[1]
        self.b2_ = cal.b2
        self.c1_ = cal.c1
        self.c2_ = cal.c2
        self.b1_max_ = cal.b1_max
        self.min_membership_ = cal.min_membership
        self.max_membership_ = cal.max_membership
        self.interior_ = cal.interior
        return self

    def _fitted_params(self) -> LossParams:
        return LossParams(self.a1, self.a2, self.b1, self.b2_)

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "b2_")
        X = check_curve_matrix(X, self.n_features_in_)
        _check_membership_rows(X)
        dom = as_interval(self.domain)
        den = self.a1 + self.a2 * (1.0 - X)
        if np.any(den <= 0):
            raise SingularityError(
                "zero denominator in the inverse map: need a1 > 0, or memberships "
                "strictly below 1 everywhere when a1 = 0"
            )
        priors = (self.b1 + self.b2_ * X) / den
        totals = _row_integrals(priors, dom)
        bad = np.flatnonzero(np.abs(totals - 1.0) > NORMALIZATION_GATE)
        if bad.size:
            raise NotADensityError(
                f"row {bad[0]} inverts to a curve integrating to {totals[bad[0]]!r}, "
                f"not 1 within {NORMALIZATION_GATE!r}",
                integral=float(totals[bad[0]]),
            )
        return priors

    def inverse_transform(self, X) -> np.ndarray:
        check_is_fitted(self, "b2_")
        X = check_curve_matrix(X, self.n_features_in_)
        _check_density_rows(X, as_interval(self.domain), NORMALIZATION_GATE)
        return optimal_membership_values(self._fitted_params(), X)


class FuzzyBayesUpdate(TransformerMixin, BaseEstimator):
    """Condition membership rows on data through a pointwise likelihood.

    Each row is inverted into a prior with the given coefficients, multiplied
    by the likelihood and renormalized, then converted back with the same
    coefficients. The coefficients must be feasible for every row (the
    inverse map has to normalize).

    Parameters
    ----------
    a1, a2, b1, b2 : float
        Loss coefficients used in both directions.
    likelihood : array-like
        Likelihood samples on the same grid as the membership rows.
    domain : pair of floats
        Interval the curves are sampled on.
    """

    def __init__(self, a1=1.0, a2=1.0, b1=0.5, b2=1.0, likelihood=None, domain=(0.0, 1.0)):
        self.a1 = a1
        self.a2 = a2
        self.b1 = b1
        self.b2 = b2
        self.likelihood = likelihood
        self.domain = domain

    def _loss_params(self) -> LossParams:
        return LossParams(self.a1, self.a2, self.b1, self.b2)

    def fit(self, X, y=None):
        self._loss_params()
        X = check_curve_matrix(X)
        _check_membership_rows(X)
        if self.likelihood is None:
            raise ValidationError("a likelihood sampled on the curve grid is required")
        lik = check_array(
            self.likelihood, dtype=np.float64, ensure_2d=False, ensure_all_finite=True
        ).ravel()
        if lik.shape[0] != X.shape[1]:
            raise ValidationError(
                f"likelihood has {lik.shape[0]} samples but curves have {X.shape[1]}"
            )
        if np.any(lik < 0) or not np.any(lik > 0):
            raise ValidationError("likelihood must be nonnegative and positive somewhere")
        self.likelihood_ = lik
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "likelihood_")
        X = check_curve_matrix(X, self.n_features_in_)
        _check_membership_rows(X)
        dom = as_interval(self.domain)
        params = self._loss_params()
        den = params.a1 + params.a2 * (1.0 - X)
        if np.any(den <= 0):
            raise SingularityError(
                "zero denominator in the inverse map: need a1 > 0, or memberships "
                "strictly below 1 everywhere when a1 = 0"
            )
        priors = (params.b1 + params.b2 * X) / den
        totals = _row_integrals(priors, dom)
        bad = np.flatnonzero(np.abs(totals - 1.0) > NORMALIZATION_GATE)
        if bad.size:
            raise NotADensityError(
                f"row {bad[0]} inverts to a curve integrating to {totals[bad[0]]!r}, "
                f"not 1 within {NORMALIZATION_GATE!r}; the coefficients are not "
                "feasible for that membership",
                integral=float(totals[bad[0]]),
            )
        weighted = priors * self.likelihood_
        evidence = _row_integrals(weighted, dom)
        dead = np.flatnonzero(evidence <= 0)
        if dead.size:
            raise DegenerateEvidenceError(
                f"row {dead[0]}: evidence integral is {evidence[dead[0]]!r}; "
                "prior and likelihood share no support"
            )
        posteriors = weighted / evidence[:, None]
        return optimal_membership_values(params, posteriors)
