"""The no-data decision problem behind the prior-to-membership conversion.

A membership curve is scored by a loss with two quadratic parts: a miss
penalty in non-membership at the true parameter, and a size penalty in the
overall mass of the fuzzy set,

    L(m, theta) = a1*(1 - m(theta)) + (a2/2)*(1 - m(theta))**2
                  + integral of b1*m + (b2/2)*m**2 over the domain.

Minimizing expected loss under a prior decouples pointwise, and the optimal
membership at each point is a clamped rational function of the prior density
there. The solution is invariant under positive rescaling of all four
coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .grid import Density, Membership, evaluate, integrate_values, require_same_grid


@dataclass(frozen=True)
class LossParams:
    """Loss coefficients.

    ``a1``/``a2`` weight the linear/quadratic penalty for excluding the true
    parameter; ``b1``/``b2`` weight the linear/quadratic penalty on the size
    of the fuzzy set. All must be nonnegative, with at least one of the a's
    and one of the b's strictly positive.
    """

    a1: float
    a2: float
    b1: float
    b2: float

    def __post_init__(self):
        for name in ("a1", "a2", "b1", "b2"):
            value = float(getattr(self, name))
            if not math.isfinite(value) or value < 0:
                raise ValidationError(f"{name} must be finite and >= 0, got {value!r}")
            object.__setattr__(self, name, value)
        if self.a1 + self.a2 <= 0:
            raise ValidationError("at least one of a1, a2 must be strictly positive")
        if self.b1 + self.b2 <= 0:
            raise ValidationError("at least one of b1, b2 must be strictly positive")

    def scaled(self, factor: float) -> "LossParams":
        """Same loss up to the positive factor; same optimal membership."""
        if not (factor > 0 and math.isfinite(factor)):
            raise ValidationError(f"scale factor must be positive and finite, got {factor!r}")
        return LossParams(self.a1 * factor, self.a2 * factor, self.b1 * factor, self.b2 * factor)

    def thresholds(self) -> "Thresholds":
        t_hi = (self.b1 + self.b2) / self.a1 if self.a1 > 0 else math.inf
        return Thresholds(self.b1 / (self.a1 + self.a2), t_hi)


@dataclass(frozen=True)
class Thresholds:
    """Density levels where the optimal membership leaves 0 and reaches 1.

    ``t_hi`` is +inf when a1 = 0: the full-membership branch is unreachable.
    """

    t_lo: float
    t_hi: float

    def __post_init__(self):
        object.__setattr__(self, "t_lo", float(self.t_lo))
        object.__setattr__(self, "t_hi", float(self.t_hi))
        if not (math.isfinite(self.t_lo) and self.t_lo >= 0):
            raise ValidationError(f"t_lo must be finite and >= 0, got {self.t_lo!r}")
        if math.isnan(self.t_hi) or self.t_hi < self.t_lo:
            raise ValidationError(f"need t_lo <= t_hi, got {self.t_lo!r} > {self.t_hi!r}")


def optimal_membership_values(params: LossParams, density_values) -> np.ndarray:
    """Pointwise minimizer of the loss integrand, applied elementwise.

    For each density value p, minimizes
    ``(a1*(1-v) + a2/2*(1-v)**2) * p + b1*v + b2/2*v**2`` over v in [0, 1]:
    0 below ``t_lo``, 1 above ``t_hi``, and the rational middle branch in
    between (inclusive at both thresholds, where the branches agree).
    """
    p = np.asarray(density_values, dtype=float)
    a1, a2, b1, b2 = params.a1, params.a2, params.b1, params.b2
    th = params.thresholds()
    if a2 == 0.0 and b2 == 0.0:
        # purely linear objective: the minimizer is crisp, ties resolved to 1
        return np.where(p >= th.t_lo, 1.0, 0.0)
    num = (a1 + a2) * p - b1
    den = a2 * p + b2
    # den can vanish only where b2 = 0 and p = 0, which the zero branch covers
    mid = np.divide(num, den, out=np.zeros_like(p), where=den > 0)
    out = np.clip(mid, 0.0, 1.0)
    out = np.where(p < th.t_lo, 0.0, out)
    if math.isfinite(th.t_hi):
        out = np.where(p > th.t_hi, 1.0, out)
    return out


def prior_to_membership(params: LossParams, prior: Density) -> Membership:
    """The membership curve minimizing expected loss under ``prior``."""
    return Membership(prior.domain, optimal_membership_values(params, prior.values))


def size_penalty(params: LossParams, m: Membership) -> float:
    """The integral term of the loss: b1*m + (b2/2)*m^2 over the domain."""
    y = m.values
    return integrate_values(params.b1 * y + 0.5 * params.b2 * y * y, m.step)


def loss(params: LossParams, m: Membership, theta):
    """Loss of the fuzzy set ``m`` when ``theta`` is the true parameter.

    ``theta`` may be a scalar or an array of evaluation points.
    """
    v = evaluate(m, theta)
    miss = params.a1 * (1.0 - v) + 0.5 * params.a2 * (1.0 - v) ** 2
    return miss + size_penalty(params, m)


def risk(params: LossParams, m: Membership, prior: Density) -> float:
    """Expected loss of ``m`` under ``prior`` (shared grid required)."""
    require_same_grid(m, prior)
    y = m.values
    miss = (params.a1 * (1.0 - y) + 0.5 * params.a2 * (1.0 - y) ** 2) * prior.values
    return integrate_values(miss, m.step) + size_penalty(params, m)
