"""Grid-sampled functions on a bounded interval.

Everything downstream (densities, membership curves, likelihoods) is built on
one substrate: a function sampled uniformly on a closed interval, evaluated by
linear interpolation and integrated by composite Simpson quadrature. The
sample count is therefore required to be odd. Instances are immutable and all
operations are pure, so values can be shared freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import (
    BracketingError,
    DomainError,
    GridMismatchError,
    NumericalError,
    ValidationError,
)

DEFAULT_GRID_SIZE = 2001
DENSITY_TOL = 1e-6


@dataclass(frozen=True)
class Interval:
    """Closed bounded interval [lo, hi] of positive length."""

    lo: float
    hi: float

    def __post_init__(self):
        object.__setattr__(self, "lo", float(self.lo))
        object.__setattr__(self, "hi", float(self.hi))
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValidationError("interval endpoints must be finite")
        if not self.lo < self.hi:
            raise ValidationError(
                f"interval needs lo < hi, got [{self.lo!r}, {self.hi!r}]"
            )

    @property
    def length(self) -> float:
        return self.hi - self.lo

    def contains(self, theta: float) -> bool:
        return self.lo <= theta <= self.hi


def as_interval(domain) -> Interval:
    """Coerce an Interval or (lo, hi) pair into an Interval."""
    if isinstance(domain, Interval):
        return domain
    try:
        lo, hi = domain
    except (TypeError, ValueError):
        raise ValidationError(f"domain must be an Interval or a (lo, hi) pair, got {domain!r}")
    return Interval(lo, hi)


@dataclass(frozen=True, eq=False, repr=False)
class GridFunction:
    """A real function on a bounded interval, uniformly sampled.

    ``values[k]`` is the sample at ``lo + k * (hi - lo) / (n - 1)``. Between
    samples the function is the linear interpolant; outside the domain it is
    undefined. The sample count must be odd and at least 3 so that composite
    Simpson quadrature applies to the whole grid.
    """

    domain: Interval
    values: np.ndarray

    def __post_init__(self):
        vals = np.array(self.values, dtype=float)
        if vals.ndim != 1:
            raise ValidationError("values must be a one-dimensional sequence")
        n = vals.shape[0]
        if n < 3 or n % 2 == 0:
            raise ValidationError(f"need an odd number of samples >= 3, got {n}")
        if not np.all(np.isfinite(vals)):
            raise ValidationError("all samples must be finite")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def step(self) -> float:
        return self.domain.length / (self.n - 1)

    @property
    def thetas(self) -> np.ndarray:
        """Abscissae of the samples."""
        return np.linspace(self.domain.lo, self.domain.hi, self.n)

    def __call__(self, theta):
        return evaluate(self, theta)

    def __repr__(self):
        return (
            f"{type(self).__name__}(domain=[{self.domain.lo!r}, {self.domain.hi!r}],"
            f" n={self.n})"
        )

    @classmethod
    def sample(cls, func: Callable, domain, n: int = DEFAULT_GRID_SIZE, **kwargs):
        """Construct by sampling a vectorized callable on a uniform grid."""
        dom = as_interval(domain)
        return cls(dom, func(np.linspace(dom.lo, dom.hi, int(n))), **kwargs)


@dataclass(frozen=True, eq=False, repr=False)
class Density(GridFunction):
    """A grid function that is nonnegative and integrates to one.

    ``tol`` is the allowed deviation of the Simpson integral from 1. The
    default suits well-resolved curves; producers that legitimately carry more
    quadrature slack (the inverse map) pass a looser gate explicitly.
    """

    tol: float = DENSITY_TOL

    def __post_init__(self):
        super().__post_init__()
        if np.any(self.values < 0):
            raise ValidationError("density values must be nonnegative")
        total = integrate(self)
        if abs(total - 1.0) > self.tol:
            raise ValidationError(
                f"density must integrate to 1 within {self.tol!r}; got {total!r}"
            )


@dataclass(frozen=True, eq=False, repr=False)
class Membership(GridFunction):
    """A grid function with every sample in [0, 1]."""

    def __post_init__(self):
        super().__post_init__()
        if np.any(self.values < 0) or np.any(self.values > 1):
            raise ValidationError("membership values must lie in [0, 1]")


@dataclass(frozen=True, eq=False, repr=False)
class Likelihood(GridFunction):
    """Pointwise likelihood of the observed data: nonnegative, not all zero."""

    def __post_init__(self):
        super().__post_init__()
        if np.any(self.values < 0):
            raise ValidationError("likelihood values must be nonnegative")
        if not np.any(self.values > 0):
            raise ValidationError("likelihood must be positive somewhere")


def evaluate(f: GridFunction, theta):
    """Linear interpolation of ``f`` at ``theta`` (scalar or array).

    Exact at grid points. Raises DomainError for points outside the domain,
    endpoints inclusive.
    """
    t = np.asarray(theta, dtype=float)
    if np.any(t < f.domain.lo) or np.any(t > f.domain.hi):
        raise DomainError(
            f"evaluation point outside domain [{f.domain.lo!r}, {f.domain.hi!r}]"
        )
    out = np.interp(t, f.thetas, f.values)
    if t.ndim == 0:
        return float(out)
    return out


@lru_cache(maxsize=None)
def simpson_weights(n: int) -> np.ndarray:
    """Composite Simpson weights (1, 4, 2, ..., 4, 1) for an odd n."""
    if n < 3 or n % 2 == 0:
        raise ValidationError(f"Simpson weights need an odd n >= 3, got {n}")
    w = np.ones(n)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    w.setflags(write=False)
    return w


def integrate_values(values: np.ndarray, step: float) -> float:
    """Composite Simpson sum of uniformly spaced samples."""
    return float(values @ simpson_weights(values.shape[0])) * (step / 3.0)


def integrate(f: GridFunction) -> float:
    """Composite Simpson integral of ``f`` over its domain.

    Exact (up to rounding) for polynomials of degree <= 3 sampled on any
    valid grid.
    """
    return integrate_values(f.values, f.step)


def require_same_grid(f: GridFunction, g: GridFunction) -> None:
    """Reject binary operations across different grids instead of resampling."""
    if f.domain != g.domain or f.n != g.n:
        raise GridMismatchError(
            "functions must share the same domain and sample count; got "
            f"{f!r} and {g!r}"
        )


def solve_root(
    g: Callable[[float], float],
    x_lo: float,
    x_hi: float,
    target: float = 0.0,
    tol: float = 1e-10,
    max_iter: int = 200,
) -> float:
    """Bisection solve of ``g(x) = target`` for continuous monotone ``g``.

    Returns x with |g(x) - target| <= tol and a final bracket width of at
    most tol * max(1, |x|). The bracket must contain a sign change of
    ``g - target`` unless an endpoint already meets the tolerance.
    """
    x_lo, x_hi = float(x_lo), float(x_hi)
    if not (math.isfinite(x_lo) and math.isfinite(x_hi)) or not x_lo < x_hi:
        raise ValidationError(f"need a finite bracket with x_lo < x_hi, got [{x_lo!r}, {x_hi!r}]")
    if not (tol > 0 and math.isfinite(tol)):
        raise ValidationError(f"tol must be a positive finite number, got {tol!r}")
    f_lo = g(x_lo) - target
    if abs(f_lo) <= tol:
        return x_lo
    f_hi = g(x_hi) - target
    if abs(f_hi) <= tol:
        return x_hi
    if (f_lo > 0) == (f_hi > 0):
        raise BracketingError(
            f"no sign change of g - target over [{x_lo!r}, {x_hi!r}]: "
            f"endpoint residuals {f_lo!r} and {f_hi!r}"
        )
    lo, hi = x_lo, x_hi
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        f_mid = g(mid) - target
        if f_mid == 0.0:
            return mid
        if abs(f_mid) <= tol and (hi - lo) <= tol * max(1.0, abs(mid)):
            return mid
        if mid == lo or mid == hi:
            # bracket collapsed to adjacent floats
            if abs(f_mid) <= tol:
                return mid
            raise NumericalError(
                "bracket collapsed before meeting the tolerance; "
                "g may be discontinuous at the root"
            )
        if (f_mid > 0) == (f_hi > 0):
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid
    raise NumericalError(f"bisection did not converge within {max_iter} iterations")
