"""Inverse direction: from a membership curve back to a prior density.

Inverting the optimal-membership formula on its middle branch gives

    prior(theta) = (b1 + b2*m(theta)) / (a1 + a2*(1 - m(theta))),

which is a proper density only for the right size penalties. With the two
normalization integrals

    c1 = integral of 1 / (a1 + a2*(1 - m)),
    c2 = integral of m / (a1 + a2*(1 - m)),

the curve integrates to b1*c1 + b2*c2, so b1 is feasible iff b1 <= 1/c1 and
then b2 = (1 - b1*c1) / c2 normalizes it. When the miss penalty is purely
linear (a2 = 0) the prior is affine in the membership, pinned by the crisp
rates r1 = b1/a1 and r2 = (b1+b2)/a1; memberships that sit at 0 or 1 on sets
of positive measure then admit a whole family of priors rather than a unique
one, characterized clause by clause in ``in_prior_family``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .decision import LossParams
from .errors import (
    DegenerateMembershipError,
    InfeasibleParameterError,
    NotADensityError,
    SingularityError,
    ValidationError,
)
from .grid import Density, Membership, integrate, integrate_values, require_same_grid

# membership_to_prior rejects curves whose integral strays further than this
NORMALIZATION_GATE = 1e-4


def _check_coefficient(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value) or value < 0:
        raise ValidationError(f"{name} must be finite and >= 0, got {value!r}")
    return value


def _inverse_denominator(a1: float, a2: float, m: Membership) -> np.ndarray:
    den = a1 + a2 * (1.0 - m.values)
    if np.any(den <= 0):
        raise SingularityError(
            "zero denominator in the inverse map: need a1 > 0, or a membership "
            "strictly below 1 everywhere when a1 = 0"
        )
    return den


@dataclass(frozen=True)
class Calibration:
    """Normalization integrals and the calibrated quadratic size penalty.

    ``interior`` records whether the membership stays strictly inside (0, 1),
    the regime in which the calibrated prior is the unique one.
    """

    a1: float
    a2: float
    b1: float
    b2: float
    c1: float
    c2: float
    b1_max: float
    min_membership: float
    max_membership: float

    @property
    def loss_params(self) -> LossParams:
        return LossParams(self.a1, self.a2, self.b1, self.b2)

    @property
    def interior(self) -> bool:
        return self.min_membership > 0.0 and self.max_membership < 1.0


@dataclass(frozen=True)
class CrispRates:
    """Density levels bounding the linear-miss-loss solution.

    The optimal membership is 0 where the prior sits below ``r1`` and 1 where
    it exceeds ``r2``.
    """

    r1: float
    r2: float

    def __post_init__(self):
        object.__setattr__(self, "r1", float(self.r1))
        object.__setattr__(self, "r2", float(self.r2))
        if not (math.isfinite(self.r1) and self.r1 >= 0):
            raise ValidationError(f"r1 must be finite and >= 0, got {self.r1!r}")
        if not (math.isfinite(self.r2) and self.r2 > self.r1):
            raise ValidationError(f"need r2 > r1, got r1={self.r1!r}, r2={self.r2!r}")


@dataclass(frozen=True)
class AffineCalibration:
    """Result of the a2 = 0 calibration: rates, realizing loss coefficients
    (under the b2 = 1 scale normalization), and the affine prior itself."""

    rates: CrispRates
    params: LossParams
    prior: Density


@dataclass(frozen=True)
class UniquenessReport:
    """Range diagnostics deciding unique-prior vs family-of-priors regime."""

    min_value: float
    max_value: float
    strictly_interior: bool
    zero_measure: float
    one_measure: float

    @property
    def family_regime(self) -> bool:
        """True when {m = 0} or {m = 1} carries positive measure."""
        return self.zero_measure > 0.0 or self.one_measure > 0.0


def membership_to_prior(params: LossParams, m: Membership) -> Density:
    """Map a membership curve to its prior via the inverse formula.

    Fails with NotADensityError (carrying the computed integral) when the
    pointwise curve does not integrate to 1 within the normalization gate;
    a non-normalizable outcome is a legitimate, reportable result, never
    silently rescaled away.
    """
    den = _inverse_denominator(params.a1, params.a2, m)
    vals = (params.b1 + params.b2 * m.values) / den
    total = integrate_values(vals, m.step)
    if abs(total - 1.0) > NORMALIZATION_GATE:
        raise NotADensityError(
            f"inverse map integrates to {total!r}, not 1 within {NORMALIZATION_GATE!r}; "
            "calibrate b2 (or b1) to the membership first",
            integral=total,
        )
    return Density(m.domain, vals, tol=NORMALIZATION_GATE)


def calibrate_b2(a1: float, a2: float, b1: float, m: Membership) -> Calibration:
    """Choose the quadratic size penalty that normalizes the inverse map.

    Requires b1 <= 1/c1; otherwise raises InfeasibleParameterError carrying
    the bound.
    """
    a1 = _check_coefficient("a1", a1)
    a2 = _check_coefficient("a2", a2)
    b1 = _check_coefficient("b1", b1)
    if a1 + a2 <= 0:
        raise ValidationError("at least one of a1, a2 must be strictly positive")
    den = _inverse_denominator(a1, a2, m)
    c1 = integrate_values(1.0 / den, m.step)
    c2 = integrate_values(m.values / den, m.step)
    if c2 <= 0:
        raise DegenerateMembershipError(
            "membership is identically zero; no size penalty can normalize its prior"
        )
    b1_max = 1.0 / c1
    if b1 > b1_max:
        raise InfeasibleParameterError(
            f"b1 = {b1!r} exceeds the feasibility bound 1/c1 = {b1_max!r}",
            bound=b1_max,
        )
    b2 = max((1.0 - b1 * c1) / c2, 0.0)
    return Calibration(
        a1=a1,
        a2=a2,
        b1=b1,
        b2=b2,
        c1=c1,
        c2=c2,
        b1_max=b1_max,
        min_membership=float(m.values.min()),
        max_membership=float(m.values.max()),
    )


def calibrate_a2zero(r1: float, m: Membership) -> AffineCalibration:
    """Calibrate the purely linear-miss regime from the lower rate ``r1``.

    For r1 < 1/length there is a unique r2 > r1 making the affine curve
    (r2 - r1)*m + r1 a density; the returned coefficients realize the rates
    under the b2 = 1 scale normalization.
    """
    r1 = float(r1)
    if not (math.isfinite(r1) and r1 >= 0):
        raise ValidationError(f"r1 must be finite and >= 0, got {r1!r}")
    ell = m.domain.length
    r1_max = 1.0 / ell
    if r1 >= r1_max:
        raise InfeasibleParameterError(
            f"r1 = {r1!r} must be below 1/length = {r1_max!r} for the affine prior to normalize",
            bound=r1_max,
        )
    total = integrate(m)
    if total <= 0:
        raise DegenerateMembershipError(
            "membership integrates to zero; the affine prior degenerates"
        )
    r2 = r1 + (1.0 - r1 * ell) / total
    rates = CrispRates(r1, r2)
    spread = r2 - r1
    params = LossParams(1.0 / spread, 0.0, r1 / spread, 1.0)
    prior = Density(m.domain, spread * m.values + r1)
    return AffineCalibration(rates=rates, params=params, prior=prior)


def in_prior_family(
    prior: Density, m: Membership, rates: CrispRates, tol: float
) -> bool:
    """Sample-by-sample test of the family of priors sharing ``m`` as solution.

    Requires, within ``tol``: prior <= r1 where m = 0; prior equal to the
    affine curve (r2 - r1)*m + r1 where 0 < m < 1; prior >= r2 where m = 1.
    The density invariant itself is carried by the ``prior`` argument's type.
    """
    require_same_grid(prior, m)
    if not (tol >= 0 and math.isfinite(tol)):
        raise ValidationError(f"tol must be finite and >= 0, got {tol!r}")
    y = m.values
    p = prior.values
    zero = y == 0.0
    one = y == 1.0
    interior = ~zero & ~one
    affine = (rates.r2 - rates.r1) * y + rates.r1
    return bool(
        np.all(p[zero] <= rates.r1 + tol)
        and np.all(np.abs(p[interior] - affine[interior]) <= tol)
        and np.all(p[one] >= rates.r2 - tol)
    )


def uniqueness_report(m: Membership) -> UniquenessReport:
    """Diagnose whether ``m`` pins a unique prior or a family.

    The measures of {m = 0} and {m = 1} are taken under the interpolant: a
    grid cell contributes its full width when both endpoints sit at the
    level, and isolated touches contribute nothing.
    """
    y = m.values
    h = m.step
    zero_cells = int(np.count_nonzero((y[:-1] == 0.0) & (y[1:] == 0.0)))
    one_cells = int(np.count_nonzero((y[:-1] == 1.0) & (y[1:] == 1.0)))
    vmin = float(y.min())
    vmax = float(y.max())
    return UniquenessReport(
        min_value=vmin,
        max_value=vmax,
        strictly_interior=vmin > 0.0 and vmax < 1.0,
        zero_measure=zero_cells * h,
        one_measure=one_cells * h,
    )
