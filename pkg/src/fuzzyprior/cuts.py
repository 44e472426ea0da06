"""Level-set operations on membership curves.

Cuts, core and support are taken under the piecewise-linear interpolant, and
cut sets store closed intervals. The support is therefore the topological
closure of the open set {m > 0}: a finite representation needs closed
endpoints, and the discrepancy is a measure-zero boundary. For the same
reason a sampled indicator is crisp only up to its interpolation ramps, one
grid cell wide at each jump.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .grid import Membership


@dataclass(frozen=True)
class CutSet:
    """Finite union of closed, pairwise disjoint, non-touching subintervals.

    Degenerate single-point intervals are kept: a level that only touches a
    peak is reported as that point rather than dropped.
    """

    intervals: tuple[tuple[float, float], ...] = ()

    def __post_init__(self):
        ivals = tuple((float(a), float(b)) for a, b in self.intervals)
        for a, b in ivals:
            if not (math.isfinite(a) and math.isfinite(b)) or a > b:
                raise ValidationError(f"bad cut interval [{a!r}, {b!r}]")
        for (_, b_prev), (a_next, _) in zip(ivals, ivals[1:]):
            if not b_prev < a_next:
                raise ValidationError("cut intervals must be sorted and non-touching")
        object.__setattr__(self, "intervals", ivals)

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    @property
    def n_components(self) -> int:
        return len(self.intervals)

    @property
    def measure(self) -> float:
        """Total length of the union."""
        return math.fsum(b - a for a, b in self.intervals)

    def contains(self, theta: float) -> bool:
        return any(a <= theta <= b for a, b in self.intervals)

    def issubset(self, other: "CutSet", tol: float = 0.0) -> bool:
        """True if every component lies inside some component of ``other``.

        Correct subset test for nested level sets, whose components never
        straddle two components of a larger cut.
        """
        return all(
            any(oa - tol <= a and b <= ob + tol for oa, ob in other.intervals)
            for a, b in self.intervals
        )

    def approx_equal(self, other: "CutSet", tol: float) -> bool:
        if len(self.intervals) != len(other.intervals):
            return False
        return all(
            abs(a - oa) <= tol and abs(b - ob) <= tol
            for (a, b), (oa, ob) in zip(self.intervals, other.intervals)
        )


def _merge_cells(starts, ends, keep, above) -> CutSet:
    """Merge per-cell subintervals into maximal disjoint intervals.

    Two consecutive kept cells chain exactly when they share a sample at or
    above the level, in which case the first ends where the second starts.
    """
    idx = np.flatnonzero(keep)
    if idx.size == 0:
        return CutSet()
    chained = (np.diff(idx) == 1) & above[idx[1:]]
    breaks = np.flatnonzero(~chained)
    first = np.concatenate(([0], breaks + 1))
    last = np.concatenate((breaks, [idx.size - 1]))
    merged: list[tuple[float, float]] = []
    for i, j in zip(first, last):
        s, e = float(starts[idx[i]]), float(ends[idx[j]])
        # rounding in the crossing ratio can make neighbouring groups touch
        if merged and s <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], e))
        else:
            merged.append((s, e))
    return CutSet(tuple(merged))


def gamma_cut(m: Membership, gamma: float) -> CutSet:
    """Closure of {theta : m(theta) >= gamma} under the linear interpolant.

    Crossing points are located by exact linear inversion on the bracketing
    grid cell.
    """
    gamma = float(gamma)
    if not 0.0 <= gamma <= 1.0:
        raise ValidationError(f"gamma must lie in [0, 1], got {gamma!r}")
    if gamma == 0.0:
        return CutSet(((m.domain.lo, m.domain.hi),))
    y = m.values
    xs = m.thetas
    above = y >= gamma
    left_above, right_above = above[:-1], above[1:]
    yl, yr = y[:-1], y[1:]
    xl, xr = xs[:-1], xs[1:]
    with np.errstate(divide="ignore", invalid="ignore"):
        t = (gamma - yl) / (yr - yl)
    # t is only used on crossing cells, where it lies in [0, 1]; the clip
    # keeps float slop from pushing the crossing outside its cell
    cross = xl + np.clip(t, 0.0, 1.0) * (xr - xl)
    cross = np.clip(cross, xl, xr)
    starts = np.where(left_above, xl, cross)
    ends = np.where(right_above, xr, cross)
    keep = left_above | right_above
    return _merge_cells(starts, ends, keep, above)


def core(m: Membership) -> CutSet:
    """The 1-cut: points with full membership."""
    return gamma_cut(m, 1.0)


def support(m: Membership) -> CutSet:
    """Closure of {theta : m(theta) > 0} under the linear interpolant."""
    y = m.values
    xs = m.thetas
    positive = y > 0
    keep = positive[:-1] | positive[1:]
    # a cell with any positive endpoint is positive on a dense subset, so its
    # closure is the whole cell
    starts = xs[:-1]
    ends = xs[1:]
    # cells chain whenever both are kept (they always share an endpoint)
    idx = np.flatnonzero(keep)
    if idx.size == 0:
        return CutSet()
    breaks = np.flatnonzero(np.diff(idx) != 1)
    first = np.concatenate(([0], breaks + 1))
    last = np.concatenate((breaks, [idx.size - 1]))
    return CutSet(
        tuple((float(starts[idx[i]]), float(ends[idx[j]])) for i, j in zip(first, last))
    )


def complement(m: Membership) -> Membership:
    """Pointwise 1 - m."""
    return Membership(m.domain, 1.0 - m.values)


def is_crisp(m: Membership, tol: float) -> bool:
    """True if every sample is within ``tol`` of 0 or 1."""
    if tol < 0:
        raise ValidationError(f"tol must be nonnegative, got {tol!r}")
    y = m.values
    return bool(np.all(np.minimum(np.abs(y), np.abs(y - 1.0)) <= tol))


def is_convex_fuzzy(m: Membership) -> bool:
    """True if every cut is a single interval (or empty).

    For a piecewise-linear interpolant the cut topology can only change at
    sample values, so sweeping the distinct samples is exhaustive.
    """
    for gamma in np.unique(m.values):
        if gamma == 0.0:
            continue
        if gamma_cut(m, float(gamma)).n_components > 1:
            return False
    return True
