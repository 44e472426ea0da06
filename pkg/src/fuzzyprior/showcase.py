"""The standard worked conversion behind the ``figure1`` CLI command.

A cubic bump membership is inverted under four different loss-coefficient
choices; the four calibrated priors all map back to the same bump, and their
peaks order by how concentrated each loss makes the prior. The computation
doubles as a regression anchor for the calibration arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .decision import prior_to_membership
from .errors import NumericalError
from .grid import DEFAULT_GRID_SIZE, Membership, evaluate
from .inverse import calibrate_b2, membership_to_prior

BUMP_COEFFICIENT = 6.075
EXPORT_POINTS = 501
ROUNDTRIP_GATE = 1e-4


def bump_membership(n: int = DEFAULT_GRID_SIZE) -> Membership:
    """Cubic bump 6.075 * t^2 * (1 - t) on [0, 1].

    Peaks at 0.9 at t = 2/3 and touches zero only at the endpoints, so it is
    fuzzy but not strictly interior.
    """
    return Membership.sample(
        lambda t: BUMP_COEFFICIENT * t * t * (1.0 - t), (0.0, 1.0), n
    )


@dataclass(frozen=True)
class ShowcaseCase:
    """One loss-coefficient choice with its expected calibrated b2."""

    a1: float
    a2: float
    b1: float
    b2_expected: float
    label: str


SHOWCASE_CASES = (
    ShowcaseCase(1.0, 7.0, 0.01, 5.15, "a1=1 a2=7 b1=0.01"),
    ShowcaseCase(1.0, 7.0, 3.35, 0.072, "a1=1 a2=7 b1=3.35"),
    ShowcaseCase(4.0, 2.0, 0.01, 9.02, "a1=4 a2=2 b1=0.01"),
    ShowcaseCase(4.0, 2.0, 4.50, 0.76, "a1=4 a2=2 b1=4.50"),
)


@dataclass(frozen=True, eq=False)
class CaseResult:
    case: ShowcaseCase
    b1_max: float
    b2: float
    prior_max: float
    prior_argmax: float
    roundtrip_error: float
    curve: np.ndarray


@dataclass(frozen=True, eq=False)
class ShowcaseResult:
    n: int
    export_thetas: np.ndarray
    membership_curve: np.ndarray
    cases: tuple[CaseResult, ...]

    @property
    def ranking(self) -> tuple[str, ...]:
        """Case labels ordered by prior peak height, tallest first."""
        return tuple(
            c.case.label
            for c in sorted(self.cases, key=lambda c: c.prior_max, reverse=True)
        )


def build_showcase(
    n: int = DEFAULT_GRID_SIZE, export_points: int = EXPORT_POINTS
) -> ShowcaseResult:
    """Calibrate all four cases and export plot-ready curves.

    Verifies that every calibrated prior maps back to the bump within the
    roundtrip gate; export resolution is decoupled from the computation grid.
    """
    m = bump_membership(n)
    xs = np.linspace(m.domain.lo, m.domain.hi, int(export_points))
    thetas = m.thetas
    results = []
    for case in SHOWCASE_CASES:
        cal = calibrate_b2(case.a1, case.a2, case.b1, m)
        prior = membership_to_prior(cal.loss_params, m)
        back = prior_to_membership(cal.loss_params, prior)
        err = float(np.max(np.abs(back.values - m.values)))
        if err > ROUNDTRIP_GATE:
            raise NumericalError(
                f"case {case.label}: prior does not map back to the bump "
                f"(sup error {err!r} > {ROUNDTRIP_GATE!r})"
            )
        k = int(np.argmax(prior.values))
        results.append(
            CaseResult(
                case=case,
                b1_max=cal.b1_max,
                b2=cal.b2,
                prior_max=float(prior.values[k]),
                prior_argmax=float(thetas[k]),
                roundtrip_error=err,
                curve=evaluate(prior, xs),
            )
        )
    return ShowcaseResult(
        n=m.n,
        export_thetas=xs,
        membership_curve=evaluate(m, xs),
        cases=tuple(results),
    )
