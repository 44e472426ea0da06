"""Level-set operations: cuts, core, support, complement, crispness, convexity."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzyprior import (
    CutSet,
    Interval,
    Membership,
    ValidationError,
    complement,
    core,
    gamma_cut,
    is_convex_fuzzy,
    is_crisp,
    support,
)
from fuzzyprior.showcase import bump_membership

DOM = Interval(0.0, 1.0)


def indicator(lo, hi, n=2001):
    """Sampled indicator of [lo, hi]; crisp up to one interpolation ramp cell."""
    t = np.linspace(0.0, 1.0, n)
    return Membership(DOM, np.where((t >= lo) & (t <= hi), 1.0, 0.0))


def triangle(n=2001):
    t = np.linspace(0.0, 1.0, n)
    return Membership(DOM, np.where(t <= 0.5, 2 * t, 2 * (1 - t)))


class TestCutSet:
    def test_invariants(self):
        CutSet(((0.0, 0.2), (0.5, 0.5), (0.7, 1.0)))
        with pytest.raises(ValidationError):
            CutSet(((0.5, 0.2),))
        with pytest.raises(ValidationError):
            CutSet(((0.0, 0.5), (0.5, 1.0)))  # touching

    def test_queries(self):
        cs = CutSet(((0.0, 0.2), (0.6, 1.0)))
        assert not cs.is_empty
        assert cs.n_components == 2
        assert cs.measure == pytest.approx(0.6)
        assert cs.contains(0.1) and cs.contains(0.6) and not cs.contains(0.4)
        assert cs.issubset(CutSet(((0.0, 1.0),)))
        assert not CutSet(((0.0, 1.0),)).issubset(cs)
        assert CutSet().is_empty and CutSet().issubset(cs)


class TestGammaCut:
    def test_triangle_half_level(self):
        cut = gamma_cut(triangle(), 0.5)
        assert cut.n_components == 1
        (lo, hi), = cut.intervals
        assert lo == pytest.approx(0.25, abs=1e-12)
        assert hi == pytest.approx(0.75, abs=1e-12)

    def test_zero_level_is_whole_domain(self):
        for m in (triangle(), indicator(0.2, 0.4), bump_membership(201)):
            assert gamma_cut(m, 0.0).intervals == ((0.0, 1.0),)

    def test_bump_peak_level_is_single_point(self):
        # the bump peaks at exactly 0.9 at t = 2/3; n = 3001 puts 2/3 on the grid
        cut = gamma_cut(bump_membership(3001), 0.9)
        assert cut.n_components == 1
        (lo, hi), = cut.intervals
        assert hi - lo <= 1e-9
        assert lo == pytest.approx(2.0 / 3.0, abs=1e-9)

    def test_level_above_peak_is_empty(self):
        assert gamma_cut(bump_membership(3001), 0.95).is_empty

    def test_rejects_bad_gamma(self):
        with pytest.raises(ValidationError):
            gamma_cut(triangle(), 1.5)
        with pytest.raises(ValidationError):
            gamma_cut(triangle(), -0.1)

    def test_nesting(self):
        rng = np.random.default_rng(42)
        for _ in range(20):
            m = Membership(DOM, rng.uniform(0, 1, 201))
            cuts = [gamma_cut(m, g) for g in np.linspace(0.05, 1.0, 12)]
            for lower, higher in zip(cuts, cuts[1:]):
                assert higher.issubset(lower, tol=1e-12)

    def test_core_within_cut_within_support(self):
        rng = np.random.default_rng(9)
        for _ in range(10):
            m = Membership(DOM, rng.uniform(0, 1, 101))
            c = core(m)
            s = support(m)
            for g in (0.2, 0.5, 0.8, 1.0):
                cut = gamma_cut(m, g)
                assert c.issubset(cut, tol=1e-12)
                assert cut.issubset(s, tol=1e-12)

    def test_crisp_cuts_agree_up_to_one_cell(self):
        m = indicator(0.2, 0.4)
        h = m.step
        cuts = [gamma_cut(m, g) for g in (0.1, 0.5, 0.9, 1.0)]
        for cut in cuts[1:]:
            assert cut.approx_equal(cuts[0], tol=h)

    def test_two_bumps_give_two_components(self):
        t = np.linspace(0.0, 1.0, 2001)
        m = Membership(DOM, np.exp(-200 * (t - 0.25) ** 2) + np.exp(-200 * (t - 0.75) ** 2))
        assert gamma_cut(m, 0.5).n_components == 2

    @given(
        seed=st.integers(0, 2**32 - 1),
        g1=st.floats(0.0, 1.0, allow_nan=False),
        g2=st.floats(0.0, 1.0, allow_nan=False),
    )
    @settings(max_examples=60, deadline=None)
    def test_nesting_property(self, seed, g1, g2):
        lower, higher = sorted((g1, g2))
        rng = np.random.default_rng(seed)
        m = Membership(DOM, rng.uniform(0.0, 1.0, 101))
        assert gamma_cut(m, higher).issubset(gamma_cut(m, lower), tol=1e-12)


class TestCore:
    def test_indicator(self):
        # the 1-level set is exactly the sampled plateau; 0.2 and 0.4 are grid points
        assert core(indicator(0.2, 0.4)).approx_equal(CutSet(((0.2, 0.4),)), tol=1e-12)

    def test_bump_has_empty_core(self):
        # peak value 0.9 < 1
        assert core(bump_membership()).is_empty

    def test_constant_one(self):
        m = Membership(DOM, np.ones(11))
        assert core(m).intervals == ((0.0, 1.0),)


class TestSupport:
    def test_indicator_within_one_cell(self):
        m = indicator(0.2, 0.4)
        h = m.step * (1 + 1e-9)
        (lo, hi), = support(m).intervals
        assert abs(lo - 0.2) <= h
        assert abs(hi - 0.4) <= h

    def test_bump_support_is_whole_domain(self):
        assert support(bump_membership()).intervals == ((0.0, 1.0),)

    def test_constant_zero_is_empty(self):
        assert support(Membership(DOM, np.zeros(11))).is_empty

    def test_isolated_positive_sample(self):
        vals = np.zeros(11)
        vals[5] = 0.7
        (lo, hi), = support(Membership(DOM, vals)).intervals
        assert lo == pytest.approx(0.4)
        assert hi == pytest.approx(0.6)


class TestComplement:
    def test_constant(self):
        m = Membership(DOM, np.full(11, 0.3))
        np.testing.assert_allclose(complement(m).values, 0.7)

    def test_involution_exact(self):
        rng = np.random.default_rng(21)
        m = Membership(DOM, rng.uniform(0, 1, 501))
        np.testing.assert_array_equal(complement(complement(m)).values, m.values)

    def test_indicator_complement(self):
        m = indicator(0.2, 0.4, n=11)
        np.testing.assert_array_equal(complement(m).values, 1.0 - m.values)
        assert is_crisp(complement(m), 0.0)


class TestPredicates:
    def test_is_crisp(self):
        assert is_crisp(indicator(0.2, 0.4), 0.0)
        assert not is_crisp(Membership(DOM, np.full(11, 0.5)), 1e-6)
        assert not is_crisp(bump_membership(), 1e-6)
        with pytest.raises(ValidationError):
            is_crisp(bump_membership(), -1.0)

    def test_convexity(self):
        assert is_convex_fuzzy(bump_membership(501))
        assert is_convex_fuzzy(Membership(DOM, np.full(11, 0.4)))
        t = np.linspace(0.0, 1.0, 501)
        two_bumps = Membership(
            DOM, 0.9 * np.exp(-300 * (t - 0.3) ** 2) + 0.8 * np.exp(-300 * (t - 0.7) ** 2)
        )
        assert not is_convex_fuzzy(two_bumps)
