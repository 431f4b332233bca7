import cmath
import math

import numpy as np
import pytest

from sincfrac import (CATALOGUE, DomainError, FracOrder, NumericError, frac_derivative,
                      fourier_image_kernel, fourier_image_operator, laplace_image_kernel,
                      laplace_image_operator, nsinc, numerical_laplace, numerical_sumudu,
                      sumudu_image_kernel, sumudu_image_operator)
from sincfrac.transforms import numerical_fourier_kernel

HALF = FracOrder(0.5)
INV_SQRT_2PI = 1 / math.sqrt(2 * math.pi)
ARCTAN_PI_OVER_PI = 0.401906738047706342  # atan(pi)/pi, mpmath


class TestFourier:
    @pytest.mark.parametrize("xi", [-100.0, -3.0, 0.0, 1.0, math.pi, 2 * math.pi, 1e6])
    def test_literal_mode_constant(self, xi):
        assert fourier_image_kernel(HALF, xi) == pytest.approx(INV_SQRT_2PI, rel=1e-15)

    def test_band_limited_examples(self):
        assert fourier_image_kernel(HALF, 2 * math.pi, "band-limited") == 0.0
        assert fourier_image_kernel(HALF, 0.0, "band-limited") == pytest.approx(INV_SQRT_2PI)
        assert fourier_image_kernel(HALF, math.pi, "band-limited") == pytest.approx(INV_SQRT_2PI / 2)

    def test_scaling_with_order(self):
        o = FracOrder(0.2)
        assert fourier_image_kernel(o, 0.1) == pytest.approx(INV_SQRT_2PI * 0.8 / 0.2)

    @pytest.mark.parametrize("xi", np.linspace(-2.0, 6.0, 12))
    def test_band_limited_matches_quadrature(self, xi):
        if abs(abs(xi) - math.pi) < 1e-6:
            pytest.skip("cutoff")
        ref = numerical_fourier_kernel(HALF, float(xi))
        assert abs(fourier_image_kernel(HALF, float(xi), "band-limited") - ref) <= 1e-4

    def test_nonfinite_xi(self):
        with pytest.raises(DomainError):
            fourier_image_kernel(HALF, math.inf)

    def test_bad_mode(self):
        with pytest.raises(DomainError):
            fourier_image_kernel(HALF, 1.0, "rectangular")

    def test_operator_zero_frequency(self):
        assert fourier_image_operator(lambda xi: 3.0, 0.0, HALF) == 0

    @pytest.mark.parametrize("xi", [0.5, 2.0, 7.0])
    def test_operator_literal_mode(self, xi):
        pi_hat = CATALOGUE["gaussian"].fourier
        assert fourier_image_operator(pi_hat, xi, HALF) == pytest.approx(
            1j * xi * INV_SQRT_2PI * pi_hat(xi))

    @pytest.mark.parametrize("mode", ["as-paper", "band-limited"])
    @pytest.mark.parametrize("xi", [0.3, 1.7, 5.0])
    def test_operator_conjugate_symmetry(self, mode, xi):
        pi_hat = CATALOGUE["gaussian"].fourier
        a = fourier_image_operator(pi_hat, xi, HALF, mode)
        b = fourier_image_operator(pi_hat, -xi, HALF, mode)
        assert b == pytest.approx(a.conjugate())

    def test_operator_band_limited_vanishes_outside(self):
        assert fourier_image_operator(1.0, 4.0, HALF, "band-limited") == 0


class TestLaplace:
    def test_kernel_at_pi(self):
        assert laplace_image_kernel(HALF, math.pi) == pytest.approx(0.25, rel=1e-15)

    def test_kernel_large_s(self):
        assert laplace_image_kernel(HALF, 1e8) == pytest.approx(1e-8, rel=1e-12)

    def test_kernel_small_order(self):
        assert laplace_image_kernel(FracOrder(1e-6), 2.0) == pytest.approx(0.5, rel=1e-9)

    @pytest.mark.parametrize("s", [0.0, -1.0, complex(0, 2)])
    def test_kernel_half_plane(self, s):
        with pytest.raises(DomainError):
            laplace_image_kernel(HALF, s)

    def test_kernel_complex_matches_quadrature(self):
        s = complex(1.0, 2.0)
        est = numerical_laplace(lambda t: nsinc(-t), s)
        assert abs(laplace_image_kernel(HALF, s) - est.value) <= 1e-8

    def test_kernel_complex_conjugate(self):
        s = complex(0.7, 3.0)
        assert laplace_image_kernel(HALF, s.conjugate()) == pytest.approx(
            laplace_image_kernel(HALF, s).conjugate())

    def test_operator_zero_input(self):
        assert laplace_image_operator(0.0, 0.0, 2.0, HALF) == 0.0

    def test_operator_linear(self):
        s = math.pi
        assert laplace_image_operator(1 / s**2, 0.0, s, HALF) == pytest.approx(1 / (4 * math.pi), rel=1e-14)

    def test_operator_exp_decay(self):
        # atan(pi)/pi * (1/2 - 1)
        assert laplace_image_operator(0.5, 1.0, 1.0, HALF) == pytest.approx(-0.200953369, abs=1e-9)

    @pytest.mark.parametrize("c", [1 / 3, 1.0, 3.0])
    @pytest.mark.parametrize("s", [0.5, 2.0])
    def test_kernel_identity(self, c, s):
        order = FracOrder(c / (1 + c))
        est = numerical_laplace(lambda t: nsinc(-c * t), s)
        assert abs(est.value - laplace_image_kernel(order, s)) <= 1e-6 * abs(est.value)

    @pytest.mark.parametrize("name", ["linear", "exp-decay", "sine"])
    @pytest.mark.parametrize("varpi", [0.25, 0.75])
    def test_convolution_identity(self, name, varpi):
        entry = CATALOGUE[name]
        order = FracOrder(varpi)
        s = 2.0
        est = numerical_laplace(lambda mu: frac_derivative(entry.spec, 0.0, mu, order), s,
                                rel_tol=1e-10)
        expected = laplace_image_operator(entry.laplace(s), entry.value_at_zero, s, order)
        assert abs(est.value - expected) <= 1e-6 * abs(expected)


class TestNumericalForward:
    def test_constant(self):
        est = numerical_laplace(lambda t: 1.0, 2.0, t_max=50)
        assert abs(est.value - 0.5) <= 1e-10
        assert est.tail < 1e-40 and est.t_max == 50

    def test_linear(self):
        assert abs(numerical_laplace(lambda t: t, 1.0, t_max=60).value - 1.0) <= 1e-9

    def test_kernel(self):
        est = numerical_laplace(lambda t: nsinc(-t), 1.0)
        assert est.value == pytest.approx(ARCTAN_PI_OVER_PI, abs=1e-10)

    def test_automatic_cut(self):
        est = numerical_laplace(lambda t: 1.0, 0.5)
        assert est.t_max * 0.5 >= 32 and est.value == pytest.approx(2.0, abs=1e-10)

    def test_bad_t_max(self):
        with pytest.raises(DomainError):
            numerical_laplace(lambda t: 1.0, 1.0, t_max=-1.0)

    def test_quadrature_failure(self):
        with pytest.raises(NumericError):
            numerical_laplace(lambda t: math.sin(1e4 * t) / max(t, 1e-300) ** 0.999, 1.0, t_max=1e3)

    @pytest.mark.parametrize("zeta", [0.1, 1.0, 3.0])
    def test_sumudu_constant(self, zeta):
        assert numerical_sumudu(lambda t: 1.0, zeta).value == pytest.approx(1.0, abs=1e-10)

    @pytest.mark.parametrize("zeta", [0.1, 1.0, 3.0])
    def test_sumudu_monomial(self, zeta):
        assert numerical_sumudu(lambda t: t, zeta).value == pytest.approx(zeta, rel=1e-9)

    def test_sumudu_exponential(self):
        assert numerical_sumudu(lambda t: math.exp(0.5 * t), 1.0).value == pytest.approx(2.0, rel=1e-9)

    def test_sumudu_is_scaled_laplace(self):
        f = CATALOGUE["sine"].spec
        zeta = 0.7
        lap = numerical_laplace(lambda t: float(f(t)), 1 / zeta)
        assert numerical_sumudu(lambda t: float(f(t)), zeta).value == lap.value / zeta


class TestSumudu:
    def test_kernel_small_zeta(self):
        assert sumudu_image_kernel(HALF, 1e-12) == pytest.approx(1.0, abs=1e-15)

    def test_kernel_example(self):
        assert sumudu_image_kernel(HALF, 1 / math.pi) == pytest.approx(math.pi / 4, rel=1e-15)

    def test_kernel_large_zeta(self):
        assert sumudu_image_kernel(HALF, 1e12) < 1e-11

    @pytest.mark.parametrize("zeta", [0.0, -0.5])
    def test_domain(self, zeta):
        with pytest.raises(DomainError):
            sumudu_image_kernel(HALF, zeta)
        with pytest.raises(DomainError):
            sumudu_image_operator(1.0, 0.0, zeta, HALF)

    @pytest.mark.parametrize("zeta", [0.2, 1.0, 4.0])
    def test_kernel_matches_forward(self, zeta):
        est = numerical_sumudu(lambda t: nsinc(-t), zeta)
        assert sumudu_image_kernel(HALF, zeta) == pytest.approx(est.value, abs=1e-9)

    def test_operator_constant_difference(self):
        assert sumudu_image_operator(2.5, 2.5, 0.3, HALF) == 0.0

    def test_operator_linear_modes(self):
        z = 1 / math.pi
        assert sumudu_image_operator(z, 0.0, z, HALF) == pytest.approx(0.25, rel=1e-14)
        assert sumudu_image_operator(z, 0.0, z, HALF, "as-paper") == pytest.approx(math.pi / 4, rel=1e-14)

    def test_dual_mode_matches_forward_transform(self):
        z = 1 / math.pi
        spec = CATALOGUE["linear"].spec
        est = numerical_sumudu(lambda mu: frac_derivative(spec, 0.0, mu, HALF), z, rel_tol=1e-10)
        assert est.value == pytest.approx(0.25, rel=1e-7)

    @pytest.mark.parametrize("name", ["linear", "exp-decay", "sine", "quadratic"])
    @pytest.mark.parametrize("zeta", [0.1, 0.5, 2.0])
    def test_duality_with_laplace(self, name, zeta):
        entry = CATALOGUE[name]
        order = FracOrder(0.35, 1.4)
        s = 1 / zeta
        lap = laplace_image_operator(entry.laplace(s), entry.value_at_zero, s, order)
        dual = sumudu_image_operator(entry.sumudu(zeta), entry.value_at_zero, zeta, order)
        assert abs(dual - lap / zeta) <= 1e-9 * max(1.0, abs(dual))
        literal = sumudu_image_operator(entry.sumudu(zeta), entry.value_at_zero, zeta, order, "as-paper")
        assert literal == pytest.approx(dual / zeta, rel=1e-15)

    def test_bad_mode(self):
        with pytest.raises(DomainError):
            sumudu_image_operator(1.0, 0.0, 1.0, HALF, "literal")
