"""Self-describing JSON specifications for the curves the CLI consumes.

A spec is a flat JSON object selected by its ``family`` key:

    {"family": "uniform"}                               optional "domain": [lo, hi]
    {"family": "beta", "alpha": 3, "beta": 2}           on [0, 1]; alpha, beta >= 1
    {"family": "triangular", "left": 0, "mode": 0.3, "right": 1}
    {"family": "poly_eq9"}                              built-in cubic bump on [0, 1]
    {"family": "binomial_likelihood", "successes": 1, "failures": 0}
    {"family": "grid", "domain": [0, 1], "values": [0, 0.5, 1, 0.5, 0]}

Any spec except ``grid`` may carry ``"n"`` (odd, >= 3) to pin its own sample
count; otherwise the command-level default applies. ``grid`` specs take their
sample count from ``values`` directly. Named density families are normalized
by their own quadrature so they satisfy the density invariant at any n.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .errors import ValidationError
from .grid import (
    DEFAULT_GRID_SIZE,
    Density,
    Interval,
    Likelihood,
    Membership,
    integrate_values,
)
from .showcase import BUMP_COEFFICIENT

_FAMILY_FIELDS = {
    "uniform": {"domain"},
    "beta": {"alpha", "beta"},
    "triangular": {"left", "mode", "right"},
    "poly_eq9": set(),
    "binomial_likelihood": {"successes", "failures"},
    "grid": {"domain", "values"},
}


def _require_number(spec: dict, field: str) -> float:
    if field not in spec:
        raise ValidationError(f"family {spec['family']!r} requires field {field!r}")
    value = spec[field]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"field {field!r} must be a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ValidationError(f"field {field!r} must be finite, got {value!r}")
    return value


def _require_count(spec: dict, field: str) -> int:
    value = _require_number(spec, field)
    if value != int(value) or value < 0:
        raise ValidationError(f"field {field!r} must be a nonnegative integer, got {spec[field]!r}")
    return int(value)


def _parse_domain(spec: dict, default=(0.0, 1.0)) -> Interval:
    raw = spec.get("domain")
    if raw is None:
        return Interval(*default)
    if not isinstance(raw, (list, tuple)) or len(raw) != 2:
        raise ValidationError(f"field 'domain' must be a [lo, hi] pair, got {raw!r}")
    return Interval(float(raw[0]), float(raw[1]))


def parse_spec(source) -> dict:
    """Parse and validate a function spec from JSON text or a dict.

    Returns a normalized plain dict; rejects unknown families and fields,
    naming the offender.
    """
    if isinstance(source, str):
        try:
            obj = json.loads(source)
        except json.JSONDecodeError as exc:
            raise ValidationError(
                f"spec is not valid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
            ) from exc
    else:
        obj = source
    if not isinstance(obj, dict):
        raise ValidationError(f"spec must be a JSON object, got {type(obj).__name__}")
    family = obj.get("family")
    if family not in _FAMILY_FIELDS:
        known = ", ".join(sorted(_FAMILY_FIELDS))
        raise ValidationError(f"unknown family {family!r}; expected one of: {known}")
    allowed = _FAMILY_FIELDS[family] | {"family"}
    if family != "grid":
        allowed = allowed | {"n"}
    for key in obj:
        if key not in allowed:
            raise ValidationError(f"unknown field {key!r} for family {family!r}")

    spec: dict = {"family": family}
    if "n" in obj:
        n = obj["n"]
        if isinstance(n, bool) or not isinstance(n, int) or n < 3 or n % 2 == 0:
            raise ValidationError(f"field 'n' must be an odd integer >= 3, got {n!r}")
        spec["n"] = n

    if family == "uniform":
        dom = _parse_domain(obj)
        spec["domain"] = [dom.lo, dom.hi]
    elif family == "beta":
        alpha = _require_number(obj, "alpha")
        beta = _require_number(obj, "beta")
        if alpha < 1 or beta < 1:
            raise ValidationError(
                "beta requires alpha >= 1 and beta >= 1; smaller shapes are "
                "unbounded and incompatible with a grid representation"
            )
        spec["alpha"] = alpha
        spec["beta"] = beta
    elif family == "triangular":
        left = _require_number(obj, "left")
        mode = _require_number(obj, "mode")
        right = _require_number(obj, "right")
        if not left < right:
            raise ValidationError(f"triangular needs left < right, got {left!r}, {right!r}")
        if not left <= mode <= right:
            raise ValidationError(f"triangular needs left <= mode <= right, got mode {mode!r}")
        spec["left"], spec["mode"], spec["right"] = left, mode, right
    elif family == "binomial_likelihood":
        spec["successes"] = _require_count(obj, "successes")
        spec["failures"] = _require_count(obj, "failures")
    elif family == "grid":
        dom = _parse_domain(obj)
        spec["domain"] = [dom.lo, dom.hi]
        values = obj.get("values")
        if not isinstance(values, (list, tuple)) or len(values) < 3:
            raise ValidationError("grid requires field 'values' with at least 3 samples")
        if len(values) % 2 == 0:
            raise ValidationError(f"grid needs an odd number of values, got {len(values)}")
        vals = []
        for k, v in enumerate(values):
            if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(float(v)):
                raise ValidationError(f"grid value {k} must be a finite number, got {v!r}")
            vals.append(float(v))
        spec["values"] = vals
    return spec


def serialize_spec(spec: dict) -> str:
    """Canonical one-line JSON form; parse -> serialize -> parse is idempotent."""
    return json.dumps(parse_spec(spec), sort_keys=True)


def spec_grid_size(spec: dict, default: int = DEFAULT_GRID_SIZE) -> int:
    if spec["family"] == "grid":
        return len(spec["values"])
    return int(spec.get("n", default))


def _beta_log_norm(alpha: float, beta: float) -> float:
    return math.lgamma(alpha) + math.lgamma(beta) - math.lgamma(alpha + beta)


def _beta_values(t: np.ndarray, alpha: float, beta: float) -> np.ndarray:
    return t ** (alpha - 1.0) * (1.0 - t) ** (beta - 1.0) / math.exp(_beta_log_norm(alpha, beta))


def _triangle_values(t: np.ndarray, left: float, mode: float, right: float) -> np.ndarray:
    vals = np.zeros_like(t)
    if mode > left:
        rising = t <= mode
        vals[rising] = (t[rising] - left) / (mode - left)
    if mode < right:
        falling = t > mode
        vals[falling] = (right - t[falling]) / (right - mode)
    vals[t == mode] = 1.0
    return vals


def _raw_values(spec: dict, n: int) -> tuple[Interval, np.ndarray]:
    """Sample the family's natural (unnormalized) shape."""
    family = spec["family"]
    if family == "grid":
        dom = Interval(*spec["domain"])
        return dom, np.asarray(spec["values"], dtype=float)
    n = spec_grid_size(spec, n)
    if family == "uniform":
        dom = Interval(*spec["domain"])
        return dom, np.ones(n)
    if family == "triangular":
        dom = Interval(spec["left"], spec["right"])
        t = np.linspace(dom.lo, dom.hi, n)
        return dom, _triangle_values(t, spec["left"], spec["mode"], spec["right"])
    dom = Interval(0.0, 1.0)
    t = np.linspace(0.0, 1.0, n)
    if family == "beta":
        return dom, _beta_values(t, spec["alpha"], spec["beta"])
    if family == "poly_eq9":
        return dom, BUMP_COEFFICIENT * t * t * (1.0 - t)
    if family == "binomial_likelihood":
        return dom, t ** spec["successes"] * (1.0 - t) ** spec["failures"]
    raise ValidationError(f"unknown family {family!r}")


def build_density(spec: dict, n: int = DEFAULT_GRID_SIZE) -> Density:
    """Build a prior density from a spec.

    Named families (uniform, beta, triangular) are normalized by their own
    Simpson integral, so they satisfy the density invariant at any n; grid
    values are taken verbatim and must already integrate to 1.
    """
    family = spec["family"]
    if family in ("poly_eq9", "binomial_likelihood"):
        raise ValidationError(
            f"family {family!r} is not a density family; supply a grid spec instead"
        )
    dom, vals = _raw_values(spec, n)
    if family != "grid":
        step = dom.length / (vals.shape[0] - 1)
        vals = vals / integrate_values(vals, step)
    return Density(dom, vals)


def build_membership(spec: dict, n: int = DEFAULT_GRID_SIZE) -> Membership:
    """Build a membership curve from a spec.

    ``uniform`` is the constant-1 (crisp whole-domain) membership and
    ``triangular`` peaks at 1; density and likelihood families are rejected.
    """
    family = spec["family"]
    if family in ("beta", "binomial_likelihood"):
        raise ValidationError(
            f"family {family!r} is not a membership family; supply a grid spec instead"
        )
    dom, vals = _raw_values(spec, n)
    return Membership(dom, vals)


def build_likelihood(spec: dict, n: int = DEFAULT_GRID_SIZE) -> Likelihood:
    """Build a likelihood from a spec; any nonnegative family qualifies."""
    dom, vals = _raw_values(spec, n)
    return Likelihood(dom, vals)
