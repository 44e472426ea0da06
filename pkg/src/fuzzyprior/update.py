"""Conditioning a fuzzy membership curve on data.

The pipeline: invert the membership into its prior, condition on the data
through a pointwise likelihood, and convert the posterior back with the same
loss coefficients. The data model is left open; convenience constructors
cover binomial and Gaussian-shaped likelihood grids.
"""

from __future__ import annotations

import math

import numpy as np

from .decision import LossParams, prior_to_membership
from .errors import DegenerateEvidenceError, ValidationError
from .grid import (
    DEFAULT_GRID_SIZE,
    Density,
    Likelihood,
    Membership,
    as_interval,
    integrate_values,
    require_same_grid,
)
from .inverse import membership_to_prior


def posterior(prior: Density, likelihood: Likelihood) -> Density:
    """Normalized pointwise product prior * likelihood (shared grid)."""
    require_same_grid(prior, likelihood)
    w = prior.values * likelihood.values
    evidence = integrate_values(w, prior.step)
    if evidence <= 0:
        raise DegenerateEvidenceError(
            f"evidence integral is {evidence!r}: prior and likelihood share no support"
        )
    return Density(prior.domain, w / evidence)


def fuzzy_update(m: Membership, params: LossParams, likelihood: Likelihood) -> Membership:
    """Update a membership curve on data, reusing ``params`` both ways.

    Requires ``params`` to be feasible for ``m`` (the inverse map must
    normalize); calibrate first when in doubt.
    """
    prior = membership_to_prior(params, m)
    return prior_to_membership(params, posterior(prior, likelihood))


def binomial_likelihood(successes: int, failures: int, n: int = DEFAULT_GRID_SIZE) -> Likelihood:
    """Likelihood theta^s * (1-theta)^f of s successes and f failures on [0, 1]."""
    s, f = int(successes), int(failures)
    if s != successes or f != failures or s < 0 or f < 0:
        raise ValidationError(
            f"successes and failures must be nonnegative integers, got {successes!r}, {failures!r}"
        )
    return Likelihood.sample(lambda t: t**s * (1.0 - t) ** f, (0.0, 1.0), n)


def gaussian_likelihood(
    center: float, width: float, domain=(0.0, 1.0), n: int = DEFAULT_GRID_SIZE
) -> Likelihood:
    """Unnormalized Gaussian bump exp(-((t - center) / width)^2 / 2)."""
    center, width = float(center), float(width)
    if not (math.isfinite(center) and math.isfinite(width) and width > 0):
        raise ValidationError(f"need finite center and width > 0, got {center!r}, {width!r}")
    return Likelihood.sample(
        lambda t: np.exp(-0.5 * ((t - center) / width) ** 2), as_interval(domain), n
    )


def flat_likelihood(domain=(0.0, 1.0), n: int = DEFAULT_GRID_SIZE, value: float = 1.0) -> Likelihood:
    """Constant likelihood: conditioning on it changes nothing."""
    value = float(value)
    if not (math.isfinite(value) and value > 0):
        raise ValidationError(f"value must be positive and finite, got {value!r}")
    dom = as_interval(domain)
    return Likelihood(dom, np.full(int(n), value))
