"""Scikit-learn estimator layer: contract compliance and numerical agreement."""

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import Pipeline

from fuzzyprior import (
    Density,
    FuzzyBayesUpdate,
    Interval,
    LossParams,
    Membership,
    MembershipToPrior,
    NotADensityError,
    PriorToMembership,
    ValidationError,
    calibrate_b2,
    membership_to_prior,
    prior_to_membership,
)
from fuzzyprior.estimators import check_curve_matrix
from fuzzyprior.grid import integrate_values
from fuzzyprior.showcase import bump_membership

DOM = Interval(0.0, 1.0)
N = 201


def interior_curve(n=N):
    return 0.05 + 0.9 * bump_membership(n).values


def random_density_rows(rng, rows, n=N):
    vals = rng.uniform(0.05, 1.0, (rows, n))
    totals = np.array([integrate_values(v, 1.0 / (n - 1)) for v in vals])
    return vals / totals[:, None]


class TestCheckCurveMatrix:
    def test_reshapes_single_curve(self):
        X = check_curve_matrix(np.zeros(5))
        assert X.shape == (1, 5)

    def test_rejects_even_width(self):
        with pytest.raises(ValidationError):
            check_curve_matrix(np.zeros((2, 4)))

    def test_rejects_width_mismatch(self):
        with pytest.raises(ValidationError):
            check_curve_matrix(np.zeros((2, 5)), n_features=7)


class TestPriorToMembership:
    def test_matches_functional_path(self):
        rng = np.random.default_rng(2)
        X = random_density_rows(rng, 5)
        est = PriorToMembership(a1=1.0, a2=2.0, b1=0.3, b2=1.5)
        out = est.fit_transform(X)
        params = LossParams(1.0, 2.0, 0.3, 1.5)
        for row, expected_row in zip(X, out):
            m = prior_to_membership(params, Density(DOM, row))
            np.testing.assert_array_equal(expected_row, m.values)

    def test_fit_records_thresholds(self):
        est = PriorToMembership(a1=1.0, a2=7.0, b1=0.01, b2=5.15)
        est.fit(np.ones(N))
        assert est.thresholds_[0] == pytest.approx(0.01 / 8)
        assert est.thresholds_[1] == pytest.approx(5.16)
        assert est.n_features_in_ == N

    def test_requires_fit_before_transform(self):
        with pytest.raises(NotFittedError):
            PriorToMembership().transform(np.ones(N))

    def test_rejects_non_density_rows(self):
        est = PriorToMembership()
        with pytest.raises(ValidationError):
            est.fit(2.0 * np.ones(N))

    def test_rejects_invalid_coefficients_at_fit(self):
        with pytest.raises(ValidationError):
            PriorToMembership(a1=0.0, a2=0.0).fit(np.ones(N))


class TestMembershipToPrior:
    def test_fit_learns_calibration(self):
        m = interior_curve()
        est = MembershipToPrior(a1=1.0, a2=7.0, b1=0.01).fit(m)
        cal = calibrate_b2(1.0, 7.0, 0.01, Membership(DOM, m))
        assert est.b2_ == cal.b2
        assert est.c1_ == cal.c1
        assert est.c2_ == cal.c2
        assert est.b1_max_ == cal.b1_max
        assert est.interior_

    def test_transform_matches_functional_path(self):
        m = interior_curve()
        est = MembershipToPrior(a1=1.0, a2=7.0, b1=0.01).fit(m)
        prior_row = est.transform(m)[0]
        params = LossParams(1.0, 7.0, 0.01, est.b2_)
        expected = membership_to_prior(params, Membership(DOM, m))
        np.testing.assert_array_equal(prior_row, expected.values)

    def test_inverse_transform_roundtrip(self):
        m = interior_curve()
        est = MembershipToPrior(a1=2.0, a2=3.0, b1=0.1).fit(m)
        back = est.inverse_transform(est.transform(m))[0]
        assert np.max(np.abs(back - m)) <= 1e-6

    def test_fit_rejects_multiple_rows(self):
        with pytest.raises(ValidationError):
            MembershipToPrior().fit(np.tile(interior_curve(), (2, 1)))

    def test_transform_rejects_unnormalizable_rows(self):
        m = interior_curve()
        est = MembershipToPrior(a1=1.0, a2=7.0, b1=0.01).fit(m)
        with pytest.raises(NotADensityError):
            est.transform(np.full(N, 0.1))

    def test_requires_fit(self):
        with pytest.raises(NotFittedError):
            MembershipToPrior().transform(interior_curve())


class TestFuzzyBayesUpdate:
    def test_flat_likelihood_identity(self):
        m = interior_curve()
        b2 = MembershipToPrior(a1=1.0, a2=7.0, b1=0.01).fit(m).b2_
        est = FuzzyBayesUpdate(a1=1.0, a2=7.0, b1=0.01, b2=b2, likelihood=np.ones(N))
        out = est.fit(m).transform(m)[0]
        assert np.max(np.abs(out - m)) <= 1e-6

    def test_requires_likelihood(self):
        with pytest.raises(ValidationError):
            FuzzyBayesUpdate().fit(interior_curve())

    def test_rejects_likelihood_width_mismatch(self):
        with pytest.raises(ValidationError):
            FuzzyBayesUpdate(likelihood=np.ones(7)).fit(interior_curve())

    def test_matches_functional_pipeline(self):
        from fuzzyprior import Likelihood, fuzzy_update

        m = interior_curve()
        b2 = MembershipToPrior(a1=1.0, a2=7.0, b1=0.01).fit(m).b2_
        t = np.linspace(0.0, 1.0, N)
        lik = t * (1 - t) + 0.1
        est = FuzzyBayesUpdate(a1=1.0, a2=7.0, b1=0.01, b2=b2, likelihood=lik)
        out = est.fit(m).transform(m)[0]
        params = LossParams(1.0, 7.0, 0.01, b2)
        expected = fuzzy_update(Membership(DOM, m), params, Likelihood(DOM, lik))
        np.testing.assert_allclose(out, expected.values, atol=1e-15)


class TestSklearnContract:
    @pytest.mark.parametrize(
        "est",
        [
            PriorToMembership(a1=1.0, a2=2.0, b1=0.3, b2=1.5),
            MembershipToPrior(a1=1.0, a2=7.0, b1=0.01),
            FuzzyBayesUpdate(a1=1.0, a2=7.0, b1=0.01, b2=5.15, likelihood=np.ones(N)),
        ],
    )
    def test_get_params_set_params_clone(self, est):
        params = est.get_params()
        assert "a1" in params and "domain" in params
        cloned_params = clone(est).get_params()
        assert cloned_params.keys() == params.keys()
        for key, value in params.items():
            assert np.array_equal(cloned_params[key], value)
        est.set_params(a1=3.25)
        assert est.get_params()["a1"] == 3.25

    def test_fit_returns_self(self):
        est = PriorToMembership()
        assert est.fit(np.ones(N)) is est

    def test_pipeline_roundtrip(self):
        m = interior_curve()
        inv = MembershipToPrior(a1=1.0, a2=7.0, b1=0.01).fit(m)
        pipe = Pipeline(
            [
                ("invert", MembershipToPrior(a1=1.0, a2=7.0, b1=0.01)),
                ("convert", PriorToMembership(a1=1.0, a2=7.0, b1=0.01, b2=inv.b2_, density_tol=1e-4)),
            ]
        )
        out = pipe.fit_transform(m.reshape(1, -1))
        assert np.max(np.abs(out[0] - m)) <= 1e-6

    def test_custom_domain(self):
        rng = np.random.default_rng(8)
        vals = rng.uniform(0.1, 1.0, N)
        vals = vals / integrate_values(vals, 2.0 / (N - 1))
        est = PriorToMembership(a1=1.0, a2=1.0, b1=0.1, b2=1.0, domain=(0.0, 2.0))
        out = est.fit_transform(vals)
        params = LossParams(1.0, 1.0, 0.1, 1.0)
        expected = prior_to_membership(params, Density(Interval(0.0, 2.0), vals))
        np.testing.assert_array_equal(out[0], expected.values)
