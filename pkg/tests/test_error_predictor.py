import math

import numpy as np
import pytest

from singquad import (GeneralJump, Power, PowerLog, PredictorConfig,
                      SingularIntegrand, apply_rule, coefficient_bounds,
                      compute_rule, exact_integral, gamma_fn, gauss_envelope,
                      leading_term, log_case_leading, log_envelope_constants,
                      power_case_leading, predicted_order, psi0_solve,
                      recommend_n, zeta_fn)
from singquad.error_predictor import psi0_residual
from singquad.singularity_model import phase


def power(b, k, alpha, envelope=None):
    return SingularIntegrand(b, Power(k, alpha), envelope=envelope)


def powerlog(b, k, beta):
    return SingularIntegrand(b, PowerLog(k, beta))


class TestLeadingTerm:
    def test_zero_jump_gives_zero(self):
        fam = GeneralJump(real_eval=lambda x: x ** 4,
                          jump_eval=lambda y, n: np.zeros_like(y) * 1j,
                          holder_k=5, holder_alpha=1.0)
        f = SingularIntegrand(0.2, fam)
        assert leading_term(f, 100) == 0.0

    def test_bounded_by_closed_form_envelope(self):
        f = power(0.4, 0, 0.5)
        u = coefficient_bounds(f).upper
        v = leading_term(f, 100)
        assert abs(v) <= 1.05 * u * 100 ** -1.5

    def test_example5_matches_measured_remainder(self):
        # |R_n - leading| <= C n^-3 with one C calibrated over the range
        f = power(0.4, 0, 1.0, envelope=gauss_envelope(0.4))
        exact = exact_integral(f).value
        cs = []
        for n in (100, 200, 400, 600):
            rn = exact - apply_rule(compute_rule(n), f)
            cs.append(abs(rn - leading_term(f, n)) * n ** 3)
        c = max(cs)
        n = 200
        rn = exact - apply_rule(compute_rule(n), f)
        assert abs(rn - leading_term(f, n)) <= c * n ** -3.0

    def test_min_n(self):
        with pytest.raises(ValueError):
            leading_term(power(0.4, 0, 0.5), 9)

    def test_truncation_insensitive(self):
        f = power(0.4, 0, 1.0, envelope=gauss_envelope(0.4))
        a = leading_term(f, 100, PredictorConfig(M=10.0))
        b = leading_term(f, 100, PredictorConfig(M=14.0))
        assert a == pytest.approx(b, rel=1e-10)


class TestParityReduction:
    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    @pytest.mark.parametrize("alpha", [0.25, 0.5, 0.75, 1.0])
    def test_consistency_with_general_route(self, k, alpha):
        for b in (0.4, math.cos(math.pi / 6)):
            for n in (50, 150, 400):
                f = power(b, k, alpha)
                lead = leading_term(f, n)
                red = power_case_leading(f, n)
                if abs(lead) > 1e-14:
                    assert abs(red - lead) / abs(lead) <= 1e-8

    def test_requested_consistency_point(self):
        f = power(0.4, 2, 1.0)
        lead = leading_term(f, 150)
        red = power_case_leading(f, 150)
        assert abs(red - lead) / abs(lead) <= 1e-8

    def test_zero_at_sin_psi_zero(self):
        # k = 1 mod 4 leading term vanishes when cos((2n+1) phi) = 0
        f = power(math.cos(math.pi / 6), 1, 0.5)
        for n in (7, 13, 103):   # n = 1 mod 6 gives cos((2n+1)pi/6) = 0
            assert abs(phase(f, n).cos_phase) < 1e-9
            assert abs(power_case_leading(f, n)) <= 1e-12 * 1.0

    def test_family_mismatch(self):
        with pytest.raises(TypeError):
            power_case_leading(powerlog(0.4, 1, 0.0), 100)
        with pytest.raises(TypeError):
            log_case_leading(power(0.4, 0, 0.5), 100)


class TestCoefficientBounds:
    def test_k0_alpha05_closed_form(self):
        f = power(0.4, 0, 0.5)
        cb = coefficient_bounds(f)
        sphi = math.sin(math.acos(0.4))
        ref = (math.sin(math.pi / 4) * sphi ** 1.5 * gamma_fn(1.5)
               * 2 ** 0.5 * zeta_fn(1.5))
        assert cb.upper == pytest.approx(ref, rel=1e-13)
        assert cb.lower == pytest.approx(-(1 - 2 ** -0.5) * ref, rel=1e-13)
        assert cb.attained

    def test_cross_check_by_maximizing_reduced_form(self):
        # scan cos Psi by scanning the reduced integral directly; the
        # approach to the cos Psi = -1 end is O((1+cos Psi)^(sigma/2))
        f = power(0.4, 0, 0.5)
        cb = coefficient_bounds(f)
        sphi = math.sin(math.acos(0.4))
        from singquad.error_predictor import _graded_nodes, _reduced_kernel
        y, w = _graded_nodes(40.0, 1920, 0.5)
        vals = []
        for cpsi in np.concatenate([[-1 + 1e-13],
                                    np.linspace(-0.95, 1.0, 40)]):
            kern = _reduced_kernel(0, y, sphi, cpsi, 0.0)
            integral = float(np.dot(w, y ** 0.5 * kern))
            vals.append(-2.0 * math.sin(math.pi / 4) * integral)
        assert max(vals) == pytest.approx(cb.upper, rel=5e-3)
        assert min(vals) == pytest.approx(cb.lower, rel=5e-3)

    def test_strict_flag_for_odd_k(self):
        cb = coefficient_bounds(power(0.4, 1, 1.0))
        assert not cb.attained
        assert cb.upper == pytest.approx(-cb.lower, rel=1e-14)
        sphi = math.sin(math.acos(0.4))
        ref = (sphi ** 3 * gamma_fn(3.0) / 2.0
               * (1.0 - 2.0 ** -3) * zeta_fn(3.0))
        assert cb.upper == pytest.approx(ref, rel=1e-13)

    def test_negative_alpha_ordering(self):
        cb = coefficient_bounds(power(0.4, 1, -0.5))
        assert cb.lower < 0 < cb.upper

    def test_predicted_coefficient_stays_in_envelope(self):
        # scaled parity-route predictions live inside the attained bounds
        # for even k and strictly inside the symmetric bound for odd k
        for k, alpha in ((0, 1.0), (2, 0.5)):
            f = power(0.4, k, alpha)
            cb = coefficient_bounds(f)
            for n in range(40, 400, 7):
                scaled = power_case_leading(f, n) * n ** (k + alpha + 1.0)
                assert cb.lower - 1e-12 <= scaled <= cb.upper + 1e-12
        for k, alpha in ((1, 1.0), (3, 0.5)):
            f = power(0.4, k, alpha)
            cb = coefficient_bounds(f)
            for n in range(40, 400, 7):
                scaled = power_case_leading(f, n) * n ** (k + alpha + 1.0)
                assert abs(scaled) < cb.upper


class TestLogCase:
    @pytest.mark.parametrize("k,beta", [(0, 1.0), (1, 0.0), (1, 0.5)])
    def test_consistency_with_general_route(self, k, beta):
        f = powerlog(0.4, k, beta)
        for n in (60, 150):
            lead = leading_term(f, n)
            red = log_case_leading(f, n)
            if abs(lead) > 1e-14:
                assert abs(red - lead) / abs(lead) <= 1e-8

    def test_log_envelope_reference_constants(self):
        env1 = log_envelope_constants(powerlog(0.4, 0, 1.0))
        assert env1.attained
        a_up, b_up = env1.upper
        a_lo, b_lo = env1.lower
        assert a_up == pytest.approx(0.691, abs=0.01)
        assert b_up == pytest.approx(0.162, abs=0.01)
        assert a_lo == pytest.approx(-1.382, abs=0.01)
        assert b_lo == pytest.approx(-1.282, abs=0.01)

        env2 = log_envelope_constants(powerlog(0.4, 1, 0.0))
        assert not env2.attained
        a_sym, b_sym = env2.upper
        assert a_sym == pytest.approx(0.0, abs=1e-12)
        assert b_sym == pytest.approx(1.628, abs=0.01)


class TestPsi0:
    def test_root_for_k0_alpha05(self):
        c0 = psi0_solve(0, 0.5)
        assert -1.0 < c0 <= 0.0            # crude estimate is near 0
        assert abs(psi0_residual(0, 0.5, c0)) <= 1e-10

    def test_monotone_in_cos_psi(self):
        grid = np.linspace(-1 + 1e-6, 1.0, 11)
        vals = [psi0_residual(0, 0.5, c) for c in grid]
        assert np.all(np.diff(vals) > 0)

    def test_regime_guard(self):
        with pytest.raises(ValueError):
            psi0_solve(1, 0.5)


class TestRecommend:
    def test_phase_zero_sizes_first_for_odd_k(self):
        f = SingularIntegrand(math.cos(math.pi / 6), Power(1, 1.0))
        ranked = recommend_n(f, 10, 45)
        zero_phase = {n for n in range(10, 46)
                      if abs(phase(f, n).cos_phase) < 1e-9}
        assert set(ranked[:len(zero_phase)]) == zero_phase

    def test_empty_range(self):
        with pytest.raises(ValueError):
            recommend_n(power(0.4, 0, 0.5), 100, 50)


class TestPredictedOrder:
    def test_regime_table(self):
        p = predicted_order(power(0.4, 0, 0.5))
        assert p.order_exponent == pytest.approx(1.5)
        assert (p.regime_exponent, p.regime_log_factor) == (2.0, False)

        p = predicted_order(power(0.4, 0, 1.0))
        assert p.order_exponent == pytest.approx(2.0)
        assert (p.regime_exponent, p.regime_log_factor) == (3.0, True)

        p = predicted_order(power(0.4, 1, 0.5))
        assert p.order_exponent == pytest.approx(2.5)
        assert (p.regime_exponent, p.regime_log_factor) == (3.5, False)

    def test_log_flag_for_powerlog(self):
        p = predicted_order(powerlog(0.4, 0, 1.0))
        assert p.order_log_factor
        assert p.order_exponent == pytest.approx(2.0)
        assert not predicted_order(powerlog(0.4, 1, 0.0)).order_log_factor
