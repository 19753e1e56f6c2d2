"""Special-function closed forms against their independent oracles."""

import cmath
import math

import numpy as np
import pytest

from sphmult import specfun as sf
from sphmult.errors import ConvergenceError, DomainError, PoleError
from sphmult.quadrature import QuadratureSpec, integrate

TIGHT = QuadratureSpec(1e-11, 1e-16, 60000, 5.0)


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def gamma_grid(seed, count=100):
    rng = np.random.default_rng(seed)
    return [
        complex(a, b)
        for a, b in zip(rng.uniform(0.1, 5.0, count), rng.uniform(-5.0, 5.0, count))
    ]


class TestGamma:
    def test_at_one(self):
        assert rel(sf.gamma(1), 1.0) < 1e-14

    def test_at_half(self):
        assert rel(sf.gamma(0.5), math.sqrt(math.pi)) < 1e-14

    def test_duplication_spot(self):
        z = 0.3 + 0.2j
        lhs = sf.gamma(2 * z)
        rhs = 2 ** (2 * z - 1) / math.sqrt(math.pi) * sf.gamma(z) * sf.gamma(z + 0.5)
        assert rel(lhs, rhs) < 1e-12

    def test_pole(self):
        with pytest.raises(PoleError):
            sf.gamma(-2)
        with pytest.raises(PoleError):
            sf.gamma(-3 + 1e-14j)
        with pytest.raises(PoleError):
            sf.gamma(0.0)

    def test_duplication_grid(self):
        for z in gamma_grid(1):
            lhs = sf.gamma(2 * z)
            rhs = 2 ** (2 * z - 1) / math.sqrt(math.pi) * sf.gamma(z) * sf.gamma(z + 0.5)
            assert rel(lhs, rhs) < 1e-12

    def test_recurrence_grid(self):
        for z in gamma_grid(2):
            assert rel(sf.gamma(z + 1), z * sf.gamma(z)) < 1e-12

    def test_conjugation_grid(self):
        for z in gamma_grid(3):
            assert rel(sf.gamma(z.conjugate()), sf.gamma(z).conjugate()) < 1e-12

    def test_reflection_grid(self):
        for z in gamma_grid(4):
            lhs = sf.gamma(z) * sf.gamma(1 - z)
            rhs = math.pi / cmath.sin(math.pi * z)
            assert rel(lhs, rhs) < 1e-12

    def test_rgamma_vanishes_at_poles(self):
        assert sf.rgamma(0) == 0
        assert sf.rgamma(-5) == 0
        assert rel(sf.rgamma(2.5), 1 / sf.gamma(2.5)) < 1e-14


class TestDigamma:
    def test_against_difference_quotient(self):
        for z in (1.0, 2.7, 0.4 + 1.3j, 3.0 - 2.0j):
            h = 1e-6
            numeric = (sf.gamma(z + h) - sf.gamma(z - h)) / (2 * h * sf.gamma(z))
            assert abs(sf.digamma(z) - numeric) < 1e-7

    def test_euler_constant(self):
        assert abs(sf.digamma(1.0) + sf.EULER_GAMMA) < 1e-13


class TestBeta:
    def test_trivial_values(self):
        assert rel(sf.beta(1, 1), 1.0) < 1e-14
        assert rel(sf.beta(0.5, 0.5), math.pi) < 1e-13

    def test_quadrature_oracle(self):
        # m = 2 instance B(m/2, m/2) plus generic complex arguments
        for a, b in ((1.0, 1.0), (1.3 + 0.4j, 2.2), (0.9, 0.7 - 0.2j)):
            oracle = integrate(
                lambda t: t ** (a - 1) * (1 - t) ** (b - 1),
                0.0,
                1.0,
                TIGHT,
                vectorized=True,
            )
            assert rel(sf.beta(a, b), oracle) < 1e-9

    def test_domain(self):
        with pytest.raises(DomainError):
            sf.beta(-0.5, 1.0)
        with pytest.raises(DomainError):
            sf.beta(1.0, 0.0)


class TestHyp2F1:
    def test_at_zero(self):
        assert sf.hyp2f1(0.7 + 2j, -1.3, 0.4, 0.0) == 1.0

    def test_terminating_b_zero(self):
        assert sf.hyp2f1(2.3 + 1j, 0.0, 1.7, 0.63) == 1.0

    def test_log_closed_form(self):
        # F(1,1;2;z) = -log(1-z)/z, evaluated with the standard library
        for z in (0.5, -0.8, 0.25, 0.9, 0.99):
            expected = -math.log1p(-z) / z
            assert rel(sf.hyp2f1(1, 1, 2, z), expected) < 1e-11

    def test_c_pole_rejected(self):
        with pytest.raises(DomainError):
            sf.hyp2f1(0.3, 0.4, 0, 0.2)
        with pytest.raises(DomainError):
            sf.hyp2f1(0.3, 0.4, -2, 0.2)

    def test_unsupported_region(self):
        with pytest.raises(DomainError):
            sf.hyp2f1(0.3, 0.4, 1.2, 0.95j)
        with pytest.raises(DomainError):
            sf.hyp2f1(0.3, 0.4, 1.2, 1.5)

    def test_euler_integral_oracle(self):
        # F(a,b;c;z) = G(c)/(G(b)G(c-b)) * int_0^1 t^(b-1)(1-t)^(c-b-1)(1-tz)^(-a)
        cases = [
            (0.4 + 0.1j, 0.8, 1.9, -7.3),
            (0.25, 1.1, 2.3 + 0.5j, 0.6),
            (1.2 - 0.6j, 0.9, 2.4, 0.93),
        ]
        for a, b, c, z in cases:
            oracle = (
                sf.gamma(c)
                / (sf.gamma(b) * sf.gamma(c - b))
                * integrate(
                    lambda t: t ** (b - 1) * (1 - t) ** (c - b - 1) * (1 - t * z) ** (-a),
                    0.0,
                    1.0,
                    TIGHT,
                    vectorized=True,
                )
            )
            assert rel(sf.hyp2f1(a, b, c, z), oracle) < 1e-9

    def test_gauss_limit(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            a = complex(rng.uniform(0.1, 1.2), rng.uniform(-1.0, 1.0))
            b = complex(rng.uniform(0.1, 1.2), rng.uniform(-1.0, 1.0))
            c = a + b + complex(rng.uniform(0.55, 2.0), rng.uniform(-0.4, 0.4))
            near_one = sf.hyp2f1(a, b, c, 1.0 - 1e-13)
            assert rel(near_one, sf.gauss_value(a, b, c)) < 1e-6

    def test_log_case_matches_series(self):
        a, b = 0.4 + 0.3j, 1.2 - 0.3j
        for z in (0.9, 0.97):
            via_connection = sf.hyp2f1(a, b, a + b, z)
            via_series = sf._hyp2f1_series(a, b, a + b, z, 1e-14)
            assert rel(via_connection, via_series) < 1e-11

    def test_unit_argument(self):
        assert rel(sf.hyp2f1(0.3, 0.2, 1.7, 1.0), sf.gauss_value(0.3, 0.2, 1.7)) < 1e-13
        with pytest.raises((ConvergenceError, DomainError)):
            sf.hyp2f1(1.0, 1.0, 2.0, 1.0)  # diverges: c - a - b = 0


class TestBesselK:
    def test_order_symmetry_example(self):
        assert rel(sf.bessel_k(0.7j, 1.0), sf.bessel_k(-0.7j, 1.0)) < 1e-14

    def test_half_integer_closed_form(self):
        for x in (0.2, 1.0, 3.7, 10.0):
            expected = math.sqrt(math.pi / (2 * x)) * math.exp(-x)
            assert rel(sf.bessel_k(0.5, x), expected) < 1e-12

    def test_k0_square_integral(self):
        val = sf.bessel_product_moment(0.0, 0.0, 0.0)
        assert rel(val, math.pi**2 / 4) < 1e-10

    def test_symmetry_and_conjugation_grid(self):
        rng = np.random.default_rng(6)
        for _ in range(50):
            nu = complex(rng.uniform(-1.4, 1.4), rng.uniform(-2.5, 2.5))
            x = rng.uniform(0.02, 8.0)
            assert rel(sf.bessel_k(nu, x), sf.bessel_k(-nu, x)) < 1e-10
            assert (
                rel(sf.bessel_k(nu, x).conjugate(), sf.bessel_k(nu.conjugate(), x))
                < 1e-10
            )

    def test_domain(self):
        with pytest.raises(DomainError):
            sf.bessel_k(0.3, 0.0)
        with pytest.raises(DomainError):
            sf.bessel_k(0.3, -1.0)

    def test_small_x_matches_quadrature(self):
        # continuity across the small-argument handoff
        nu = 0.4 + 0.9j
        just_above = sf.bessel_k(nu, 1.1e-8)
        closed = complex(sf._bessel_small_x(nu, 1.1e-8))
        assert rel(just_above, closed) < 1e-12

    def test_batch_matches_scalar(self):
        nu = 0.3 - 1.1j
        xs = np.array([1e-12, 1e-9, 0.05, 1.0, 4.0])
        batch = sf.bessel_k_many(nu, xs)
        singles = [sf.bessel_k(nu, float(x)) for x in xs]
        assert max(rel(a, b) for a, b in zip(batch, singles)) < 1e-12


class TestWeberSchafheitlin:
    def test_all_zero_instance(self):
        # the integral itself is pi^2/4; the four-Gamma product is pi^2
        assert rel(sf.weber_schafheitlin_rhs(0, 0, 0), math.pi**2 / 4) < 1e-13
        four_gammas = sf.weber_schafheitlin_rhs(0, 0, 0) * 2**2 * sf.gamma(1.0)
        assert rel(four_gammas, math.pi**2) < 1e-13

    def test_domain_violation(self):
        with pytest.raises(DomainError):
            sf.weber_schafheitlin_rhs(0, 0, 1)

    def test_norm_numerator_instance(self):
        # (nu, mu, rho) = (s, conj s, 1-m) reproduces the kernel-vector
        # norm numerator
        from sphmult.spherical import bessel_vector_norm_sq

        for m, s in ((1, 0.3 + 0.8j), (2, -0.6 + 1.1j), (3, 0.9 - 0.4j)):
            moment = sf.weber_schafheitlin_rhs(s, np.conjugate(s), 1 - m)
            half = m / 2.0
            via_norm = (
                bessel_vector_norm_sq(m, s)
                * sf.gamma(half).real ** 2
                * abs(sf.gamma(half + s)) ** 2
                / (2.0 ** (3 - m) * sf.gamma(float(m)).real)
            )
            assert rel(moment, via_norm) < 1e-12

    def test_quadrature_agreement(self):
        cases = [
            (0.0, 0.0, 0.0),
            (0.3 + 0.5j, 0.2 - 0.4j, 0.3),
            (-0.25 + 0.3j, 0.4 + 0.1j, 0.15),
            (0.5, 0.25, -0.5),
            (0.1 + 1.5j, 0.1 - 1.5j, -1.0),
        ]
        for nu, mu, rho in cases:
            lhs = sf.bessel_product_moment(nu, mu, -rho)
            rhs = sf.weber_schafheitlin_rhs(nu, mu, rho)
            assert rel(lhs, rhs) < 1e-7

    def test_moment_domain(self):
        with pytest.raises(DomainError):
            sf.bessel_product_moment(0.6, 0.6, -0.3)  # not integrable at 0


class TestIntegrate:
    def test_constant(self):
        assert rel(integrate(lambda t: np.ones_like(t), 0, 1, vectorized=True), 1.0) < 1e-12

    def test_sine(self):
        assert rel(integrate(np.sin, 0, math.pi, vectorized=True), 2.0) < 1e-10

    def test_semi_infinite(self):
        val = integrate(
            lambda r: np.exp(-r) * r, 0.0, math.inf, decay_rate=1.0, vectorized=True
        )
        assert rel(val, 1.0) < 1e-10

    def test_semi_infinite_requires_decay(self):
        with pytest.raises(DomainError):
            integrate(lambda r: np.exp(-r), 0.0, math.inf, vectorized=True)

    def test_scalar_map(self):
        val = integrate(lambda t: complex(t) ** 2, 0.0, 1.0)
        assert rel(val, 1.0 / 3.0) < 1e-10

    def test_budget_exhaustion_attaches_estimate(self):
        spec = QuadratureSpec(1e-14, 1e-300, 30, 5.0)
        with pytest.raises(ConvergenceError) as excinfo:
            integrate(
                lambda t: np.abs(t - 1.0 / math.pi) ** 0.1, 0.0, 1.0, spec,
                vectorized=True,
            )
        assert excinfo.value.best_estimate is not None
        assert excinfo.value.achieved_error is not None

    def test_spec_validation(self):
        with pytest.raises(DomainError):
            QuadratureSpec(relative_tolerance=0.0)
        with pytest.raises(DomainError):
            QuadratureSpec(max_panels=0)
