"""Mittag-Leffler and incomplete-beta evaluators against independent oracles."""

import math

import mpmath as mp
import numpy as np
import pytest
from scipy import integrate

from cfpp.errors import DomainError, NonConvergenceError
from cfpp.special import (
    EvalOptions,
    MLParams,
    complete_beta,
    incomplete_beta,
    ml_deriv,
    ml_one,
    ml_three,
    ml_two,
    ml_weights,
)


def ml_series_oracle(alpha, beta, gamma, x, dps=160, terms=4000):
    """Direct high-precision summation, independent of the library path.

    All parameter arithmetic stays in mpf; mixing in float operations (for
    example k * alpha + beta in double) perturbs the gamma arguments by one
    double ulp, which is already visible at the 1e-11 comparison level.
    """
    with mp.workdps(dps):
        a, b, g, xm = mp.mpf(alpha), mp.mpf(beta), mp.mpf(gamma), mp.mpf(x)
        total = mp.mpf(0)
        for k in range(terms):
            term = (
                mp.gamma(g + k) * xm**k / (mp.gamma(g) * mp.factorial(k) * mp.gamma(k * a + b))
            )
            total += term
            if k > 20 and abs(term) < mp.mpf("1e-40") * max(abs(total), mp.mpf(1)):
                break
        return float(total)


class TestMittagLefflerValues:
    def test_zero_argument_is_one_over_gamma_beta(self):
        assert ml_three(MLParams(0.7, 1.0, 1.0), 0.0) == 1.0
        assert ml_two(0.5, 1.0, 0.0) == 1.0
        np.testing.assert_allclose(
            ml_two(0.6, 2.5, 0.0), 1.0 / math.gamma(2.5), rtol=1e-14
        )

    def test_exponential_special_case(self):
        np.testing.assert_allclose(ml_three(MLParams(1, 1, 1), 1.0), math.e, rtol=1e-13)
        np.testing.assert_allclose(ml_two(1, 1, -1.0), math.exp(-1), rtol=1e-13)
        np.testing.assert_allclose(ml_one(1.0, -10.0), math.exp(-10), rtol=1e-12)

    def test_gamma_collapse_to_exponential(self):
        # Gamma(2+k) / (k! Gamma(k+2)) = 1/k!, so E^2_{1,2}(x) sums to e^x
        np.testing.assert_allclose(
            ml_three(MLParams(1, 2, 2), 0.5), math.exp(0.5), rtol=1e-13
        )

    def test_erfc_identity_at_half(self):
        # E_{1/2,1}(-1) = e * erfc(1), a second independent oracle
        np.testing.assert_allclose(
            ml_two(0.5, 1, -1.0), math.e * math.erfc(1.0), rtol=1e-12
        )

    @pytest.mark.parametrize("alpha", [0.4, 0.6, 0.85, 1.0])
    @pytest.mark.parametrize("x", [-8.0, -2.5, -0.3, 0.7, 3.0])
    def test_against_series_oracle(self, alpha, x):
        got = ml_three(MLParams(alpha, 1.2, 2.0), x)
        want = ml_series_oracle(alpha, 1.2, 2.0, x)
        np.testing.assert_allclose(got, want, rtol=1e-11)

    def test_heavy_cancellation_region(self):
        # x = -30 at alpha = 0.6 loses > 20 digits in double precision
        got = ml_one(0.6, -30.0)
        want = ml_series_oracle(0.6, 1.0, 1.0, -30.0, dps=200)
        np.testing.assert_allclose(got, want, rtol=1e-10)

    def test_two_vs_three_parameter_consistency(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            alpha = rng.uniform(0.3, 1.0)
            beta = rng.uniform(0.5, 3.0)
            x = rng.uniform(-5.0, 2.0)
            np.testing.assert_allclose(
                ml_two(alpha, beta, x),
                ml_three(MLParams(alpha, beta, 1.0), x),
                rtol=1e-12,
            )


class TestMittagLefflerDomain:
    def test_accuracy_domain_enforced(self):
        with pytest.raises(DomainError):
            ml_two(0.5, 1.0, -51.0)
        with pytest.raises(DomainError):
            ml_three(MLParams(0.8, 1, 1), 50.5)

    def test_invalid_parameters(self):
        with pytest.raises(DomainError):
            MLParams(-0.5, 1, 1)
        with pytest.raises(DomainError):
            MLParams(0.5, 0.0, 1)
        with pytest.raises(DomainError):
            EvalOptions(rel_tol=2.0)
        with pytest.raises(DomainError):
            EvalOptions(max_terms=0)

    def test_term_budget_exhaustion(self):
        with pytest.raises(NonConvergenceError):
            ml_two(0.5, 1.0, -20.0, EvalOptions(max_terms=10))


class TestDerivative:
    def test_exp_derivative_at_zero(self):
        np.testing.assert_allclose(ml_deriv(1, 1, 1, 0.0), 1.0, rtol=1e-14)

    def test_zeroth_derivative_is_the_function(self):
        assert ml_deriv(0.7, 1.3, 0, -0.4) == ml_two(0.7, 1.3, -0.4)

    @pytest.mark.parametrize("alpha,beta", [(0.5, 1.0), (0.7, 1.0), (0.9, 1.5)])
    @pytest.mark.parametrize("x", [-2.0, -0.3, 0.5])
    def test_first_derivative_vs_central_difference(self, alpha, beta, x):
        h = 1e-4
        fd = (ml_two(alpha, beta, x + h) - ml_two(alpha, beta, x - h)) / (2 * h)
        np.testing.assert_allclose(ml_deriv(alpha, beta, 1, x), fd, atol=1e-6, rtol=1e-6)

    def test_second_derivative_vs_central_difference(self):
        alpha, beta, x, h = 0.5, 1.0, -0.3, 1e-4
        fd = (
            ml_two(alpha, beta, x + h) - 2 * ml_two(alpha, beta, x) + ml_two(alpha, beta, x - h)
        ) / h**2
        np.testing.assert_allclose(ml_deriv(alpha, beta, 2, x), fd, atol=1e-6, rtol=1e-5)

    def test_negative_order_rejected(self):
        with pytest.raises(DomainError):
            ml_deriv(0.5, 1.0, -1, 0.0)


class TestSummationIdentity:
    @pytest.mark.parametrize("alpha", [0.5, 0.7, 0.9])
    def test_weighted_sum_telescopes(self, alpha):
        # sum_k (y t^a)^k E^{k+1}_{a, k a + 1}(x t^a) = E_a((x+y) t^a)
        t, x, y = 1.3, -1.1, 0.6
        xa, ya = x * t**alpha, y * t**alpha
        total, k = 0.0, 0
        while k < 200:
            term = ya**k * ml_three(MLParams(alpha, k * alpha + 1.0, k + 1.0), xa)
            total += term
            if abs(term) < 1e-14 and k > 5:
                break
            k += 1
        np.testing.assert_allclose(total, ml_one(alpha, (x + y) * t**alpha), atol=1e-8)

    def test_normalization_case(self):
        # y = lambda_0, x = -lambda_0: the weights sum to E_alpha(0) = 1
        for alpha in (0.5, 0.8):
            w = ml_weights(alpha, 2.4, 80)
            np.testing.assert_allclose(w.sum(), 1.0, atol=1e-9)


class TestWeightVector:
    def test_matches_single_evaluations(self):
        for alpha, x in ((0.6, 3.0), (0.85, 12.0), (1.0, 5.0)):
            w = ml_weights(alpha, x, 10)
            single = np.array(
                [x**k * ml_three(MLParams(alpha, k * alpha + 1, k + 1), -x) for k in range(11)]
            )
            np.testing.assert_allclose(w, single, rtol=1e-10, atol=1e-16)

    def test_entries_are_probabilities(self):
        w = ml_weights(0.7, 8.0, 60)
        assert np.all(w >= 0)
        assert np.all(w <= 1)
        assert w.sum() <= 1 + 1e-12

    def test_zero_argument(self):
        w = ml_weights(0.5, 0.0, 5)
        np.testing.assert_array_equal(w, [1, 0, 0, 0, 0, 0])

    def test_domain_checks(self):
        with pytest.raises(DomainError):
            ml_weights(1.5, 1.0, 4)
        with pytest.raises(DomainError):
            ml_weights(0.5, -1.0, 4)
        with pytest.raises(DomainError):
            ml_weights(0.5, 60.0, 4)


class TestIncompleteBeta:
    def test_uniform_integrand(self):
        np.testing.assert_allclose(incomplete_beta(1, 1, 0.3), 0.3, rtol=1e-14)

    def test_complete_value_at_one(self):
        for a, b in ((0.5, 1.5), (2.0, 3.0), (0.7, 0.7)):
            want = math.gamma(a) * math.gamma(b) / math.gamma(a + b)
            np.testing.assert_allclose(incomplete_beta(a, b, 1.0), want, rtol=1e-13)

    @pytest.mark.parametrize(
        "a,b,x",
        [(0.5, 1.5, 0.5), (0.7, 1.7, 0.25), (2.5, 0.8, 0.9), (0.6, 0.6, 0.97), (3.0, 4.0, 0.02)],
    )
    def test_against_quadrature_oracle(self, a, b, x):
        want, err = integrate.quad(
            lambda u: u ** (a - 1) * (1 - u) ** (b - 1), 0.0, x,
            epsabs=1e-13, epsrel=1e-13, points=[0.0, x],
        )
        assert err < 1e-11
        np.testing.assert_allclose(incomplete_beta(a, b, x), want, rtol=1e-10, atol=1e-12)

    def test_monotone_in_x(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            a, b = rng.uniform(0.3, 3.0, 2)
            xs = np.sort(rng.uniform(0, 1, 12))
            vals = [incomplete_beta(a, b, x) for x in xs]
            assert all(v2 >= v1 - 1e-15 for v1, v2 in zip(vals, vals[1:]))

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            incomplete_beta(-1.0, 1.0, 0.5)
        with pytest.raises(DomainError):
            incomplete_beta(1.0, 0.0, 0.5)
        with pytest.raises(DomainError):
            incomplete_beta(1.0, 1.0, 1.5)

    def test_complement_region_accuracy(self):
        # x above the symmetry switch exercises the complement route
        a, b, x = 0.5, 0.6, 0.999
        want, _ = integrate.quad(
            lambda u: u ** (a - 1) * (1 - u) ** (b - 1), 0.0, x,
            epsabs=1e-13, epsrel=1e-13, points=[0.0, x],
        )
        np.testing.assert_allclose(incomplete_beta(a, b, x), want, rtol=1e-9)

    def test_complete_beta_helper(self):
        np.testing.assert_allclose(complete_beta(2.0, 3.0), 1.0 / 12.0, rtol=1e-13)
