"""Posterior computation and the membership update pipeline."""

import math

import numpy as np
import pytest
from scipy.stats import beta as beta_dist

from fuzzyprior import (
    DegenerateEvidenceError,
    Density,
    GridMismatchError,
    Interval,
    Likelihood,
    LossParams,
    Membership,
    ValidationError,
    binomial_likelihood,
    calibrate_b2,
    flat_likelihood,
    fuzzy_update,
    gamma_cut,
    gaussian_likelihood,
    posterior,
)
from fuzzyprior.showcase import bump_membership

DOM = Interval(0.0, 1.0)
N = 2001


def beta_density(a, b, n=N):
    return Density.sample(lambda t: beta_dist.pdf(t, a, b), (0.0, 1.0), n)


class TestPosterior:
    def test_flat_likelihood_is_identity(self):
        pi = beta_density(2, 2)
        post = posterior(pi, flat_likelihood(n=N, value=3.7))
        np.testing.assert_allclose(post.values, pi.values, atol=1e-14)

    def test_uniform_times_slope(self):
        pi = Density(DOM, np.ones(N))
        post = posterior(pi, binomial_likelihood(1, 0, n=N))
        np.testing.assert_allclose(post.values, 2.0 * pi.thetas, atol=1e-12)

    def test_conjugate_beta_oracle(self):
        # Beta(2,2) prior and one success give a Beta(3,2) posterior
        post = posterior(beta_density(2, 2), binomial_likelihood(1, 0, n=N))
        expected = beta_dist.pdf(post.thetas, 3, 2)
        assert np.max(np.abs(post.values - expected)) <= 1e-6

    def test_scale_invariance_power_of_two_exact(self):
        rng = np.random.default_rng(3)
        pi = beta_density(3, 2)
        lik_vals = rng.uniform(0.1, 2.0, N)
        base = posterior(pi, Likelihood(DOM, lik_vals))
        for c in (0.25, 2.0, 1024.0):
            scaled = posterior(pi, Likelihood(DOM, c * lik_vals))
            np.testing.assert_array_equal(scaled.values, base.values)

    def test_scale_invariance_general_constant(self):
        rng = np.random.default_rng(4)
        pi = beta_density(3, 2)
        lik_vals = rng.uniform(0.1, 2.0, N)
        base = posterior(pi, Likelihood(DOM, lik_vals))
        for c in (3.0, 0.7, 1e6):
            scaled = posterior(pi, Likelihood(DOM, c * lik_vals))
            np.testing.assert_allclose(scaled.values, base.values, rtol=1e-13)

    def test_sequential_consistency(self):
        pi = beta_density(2, 3)
        lik1 = binomial_likelihood(1, 0, n=N)
        lik2 = binomial_likelihood(0, 2, n=N)
        stepwise = posterior(posterior(pi, lik1), lik2)
        pooled = posterior(pi, Likelihood(DOM, lik1.values * lik2.values))
        assert np.max(np.abs(stepwise.values - pooled.values)) <= 1e-9

    def test_degenerate_evidence(self):
        from fuzzyprior.grid import integrate_values

        t = np.linspace(0.0, 1.0, N)
        left = np.where(t <= 0.4, 1.0, 0.0)
        pi = Density(DOM, left / integrate_values(left, 1.0 / (N - 1)))
        lik = Likelihood(DOM, np.where(t >= 0.8, 1.0, 0.0))
        with pytest.raises(DegenerateEvidenceError):
            posterior(pi, lik)

    def test_grid_mismatch(self):
        with pytest.raises(GridMismatchError):
            posterior(beta_density(2, 2, n=101), flat_likelihood(n=103))


class TestFuzzyUpdate:
    def _interior_setup(self):
        m = Membership(DOM, 0.05 + 0.9 * bump_membership(N).values)
        cal = calibrate_b2(1.0, 7.0, 0.01, m)
        return m, cal.loss_params

    def test_flat_likelihood_identity(self):
        m, params = self._interior_setup()
        updated = fuzzy_update(m, params, flat_likelihood(n=N))
        assert np.max(np.abs(updated.values - m.values)) <= 1e-6

    def test_one_success_shifts_cuts_right(self):
        m = bump_membership(N)
        cal = calibrate_b2(1.0, 7.0, 0.01, m)
        updated = fuzzy_update(m, cal.loss_params, binomial_likelihood(1, 0, n=N))
        for g in (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8):
            before = gamma_cut(m, g)
            after = gamma_cut(updated, g)
            assert not before.is_empty and not after.is_empty
            assert after.intervals[0][0] >= before.intervals[0][0] - 1e-6

    def test_narrow_likelihood_concentrates_at_its_center(self):
        # a near-point-mass likelihood saturates the membership to 1 on a
        # small plateau bracketing its center
        m, params = self._interior_setup()
        center = 0.45
        updated = fuzzy_update(m, params, gaussian_likelihood(center, 0.01, n=N))
        maximizers = updated.thetas[updated.values == updated.values.max()]
        assert maximizers.min() <= center <= maximizers.max()
        assert abs(maximizers.mean() - center) <= 0.005

    def test_propagates_infeasible_parameters(self):
        from fuzzyprior import NotADensityError

        m, _ = self._interior_setup()
        with pytest.raises(NotADensityError):
            fuzzy_update(m, LossParams(1.0, 7.0, 0.01, 50.0), flat_likelihood(n=N))


class TestLikelihoodConstructors:
    def test_binomial_values(self):
        lik = binomial_likelihood(2, 1, n=5)
        t = lik.thetas
        np.testing.assert_allclose(lik.values, t**2 * (1 - t))
        assert lik.values[0] == 0.0 and lik.values[-1] == 0.0

    def test_binomial_zero_counts_is_flat(self):
        lik = binomial_likelihood(0, 0, n=11)
        np.testing.assert_array_equal(lik.values, 1.0)

    def test_binomial_rejects_negative_or_fractional(self):
        with pytest.raises(ValidationError):
            binomial_likelihood(-1, 0)
        with pytest.raises(ValidationError):
            binomial_likelihood(1.5, 0)

    def test_gaussian_peaks_at_center(self):
        lik = gaussian_likelihood(0.3, 0.05, n=1001)
        assert lik.thetas[np.argmax(lik.values)] == pytest.approx(0.3, abs=1e-3)
        assert lik.values.max() <= 1.0
        with pytest.raises(ValidationError):
            gaussian_likelihood(0.3, 0.0)

    def test_flat_requires_positive_value(self):
        with pytest.raises(ValidationError):
            flat_likelihood(value=0.0)
        with pytest.raises(ValidationError):
            flat_likelihood(value=math.inf)
