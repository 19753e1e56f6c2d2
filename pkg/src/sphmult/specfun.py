"""Special functions of complex parameters.

Everything here is built from two primitives: a Lanczos evaluation of the
Gamma function and composite Gauss-Legendre quadrature.  The module keeps
its own closed forms and its quadrature oracles strictly separate, so each
side can be used to validate the other:

* ``gamma``/``beta``/``hyp2f1`` are closed-form evaluations,
* ``bessel_k`` evaluates the cosh-integral representation
  K_nu(x) = int_0^inf exp(-x*cosh(t)) * cosh(nu*t) dt  (x > 0),
* ``weber_schafheitlin_rhs`` is the Gamma-product closed form of the
  moment integral int_0^inf K_nu(r) K_mu(r) r^(-rho) dr, and
  ``bessel_product_moment`` is its quadrature counterpart.

Target accuracy is 1e-12 relative for the closed forms and the caller's
QuadratureSpec tolerance for the integral routines.
"""

from __future__ import annotations

import cmath
import math
from typing import Sequence

import numpy as np

from .errors import ConvergenceError, DomainError, PoleError
from .quadrature import DEFAULT_SPEC, QuadratureSpec, _GL_NODES, _GL_WEIGHTS

SPECIAL_RTOL = 1e-12
MAX_SERIES_TERMS = 100_000

_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)

# Lanczos approximation, g = 7 with 9 coefficients.  Accurate to about
# 1e-13 relative on the half-plane Re z >= 0.5; the reflection formula
# covers the rest.
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_POLE_TOL = 1e-12


def _near_nonpositive_integer(z: complex, tol: float = _POLE_TOL) -> bool:
    n = round(z.real)
    return n <= 0 and abs(z - n) < tol


def gamma(z: complex) -> complex:
    """Gamma function of a complex argument.

    Satisfies the recurrence Gamma(z+1) = z*Gamma(z), Legendre's
    duplication formula and conjugation symmetry to ~1e-13 relative.

    Raises PoleError within 1e-12 of the poles at 0, -1, -2, ...
    """
    z = complex(z)
    if _near_nonpositive_integer(z):
        raise PoleError(f"gamma pole at or near z={z}")
    if z.real < 0.5:
        # Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)).
        return math.pi / (cmath.sin(math.pi * z) * gamma(1.0 - z))
    zz = z - 1.0
    acc = _LANCZOS[0]
    for i, c in enumerate(_LANCZOS[1:], start=1):
        acc += c / (zz + i)
    t = zz + _LANCZOS_G + 0.5
    return _SQRT_TWO_PI * t ** (zz + 0.5) * cmath.exp(-t) * acc


def rgamma(z: complex) -> complex:
    """Reciprocal Gamma function; zero at the poles of Gamma."""
    z = complex(z)
    if _near_nonpositive_integer(z):
        return 0.0 + 0.0j
    return 1.0 / gamma(z)


def beta(a: complex, b: complex) -> complex:
    """Beta function B(a, b) = Gamma(a)Gamma(b)/Gamma(a+b) for Re a, Re b > 0."""
    a, b = complex(a), complex(b)
    if a.real <= 0 or b.real <= 0:
        raise DomainError("beta requires arguments with positive real part")
    return gamma(a) * gamma(b) / gamma(a + b)


# B_2k / (2k) for k = 1..7: coefficients of the digamma asymptotic tail.
_DIGAMMA_TAIL = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)


def digamma(z: complex) -> complex:
    """Logarithmic derivative of Gamma, psi(z) = Gamma'(z)/Gamma(z)."""
    z = complex(z)
    if _near_nonpositive_integer(z):
        raise PoleError(f"digamma pole at or near z={z}")
    if z.real < 0.5:
        return digamma(1.0 - z) - math.pi / cmath.tan(math.pi * z)
    acc = 0.0 + 0.0j
    while z.real < 9.0:
        acc -= 1.0 / z
        z += 1.0
    inv2 = 1.0 / (z * z)
    tail = 0.0 + 0.0j
    power = inv2
    for coeff in _DIGAMMA_TAIL:
        tail += coeff * power
        power *= inv2
    return acc + cmath.log(z) - 0.5 / z - tail


def _pochhammer_is_terminating(a: complex) -> int | None:
    """Return k >= 0 when a == -k (so the series terminates), else None."""
    n = round(a.real)
    if n <= 0 and abs(a - n) < _POLE_TOL:
        return -n
    return None


def _hyp2f1_series(a, b, c, z, rtol, max_terms=MAX_SERIES_TERMS):
    """Gauss series with the three-consecutive-small-terms stopping rule."""
    term = 1.0 + 0.0j
    total = 1.0 + 0.0j
    small = 0
    for k in range(max_terms):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z
        total += term
        if abs(term) <= rtol * abs(total):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise ConvergenceError(
        f"hypergeometric series did not converge within {max_terms} terms",
        best_estimate=total,
        achieved_error=abs(term),
    )


def _hyp2f1_log_case(a, b, w, rtol):
    """F(a, b; a+b; 1-w) via the logarithmic connection expansion.

    Valid for small |w| (w = 1-z) when c = a + b exactly; the expansion is
    sum_n [(a)_n (b)_n / (n!)^2] * [2 psi(n+1) - psi(a+n) - psi(b+n) - log w] w^n
    times Gamma(a+b)/(Gamma(a)Gamma(b)).
    """
    if w == 0:
        raise ConvergenceError("2F1 diverges at unit argument when c = a + b")
    log_w = cmath.log(w)
    poch = 1.0 + 0.0j
    psi_n1 = digamma(1.0)
    psi_a = digamma(a)
    psi_b = digamma(b)
    total = 0.0 + 0.0j
    for n in range(MAX_SERIES_TERMS):
        term = poch * (2.0 * psi_n1 - psi_a - psi_b - log_w)
        total += term
        if n > 2 and abs(term) <= rtol * abs(total):
            break
        poch *= (a + n) * (b + n) / ((n + 1.0) ** 2) * w
        psi_n1 += 1.0 / (n + 1.0)
        psi_a += 1.0 / (a + n)
        psi_b += 1.0 / (b + n)
    else:
        raise ConvergenceError("logarithmic 2F1 expansion did not converge")
    return gamma(a + b) * rgamma(a) * rgamma(b) * total


class _IntegerSeparation(Exception):
    """Internal: c - a - b is (near) a nonzero integer, connection formula unusable."""


def _hyp2f1_near_one(a, b, c, w, rtol):
    """F(a, b; c; 1-w) for small real w >= 0 via the z -> 1-z connection.

    F = A * F(a, b; a+b-c+1; w) + B * w^(c-a-b) * F(c-a, c-b; c-a-b+1; w)
    with A = G(c)G(c-a-b)/(G(c-a)G(c-b)), B = G(c)G(a+b-c)/(G(a)G(b)).
    """
    d = c - a - b
    n = round(d.real)
    if abs(d - n) < 1e-8:
        if n == 0 and abs(d) < 1e-13:
            return _hyp2f1_log_case(a, b, w, rtol)
        raise _IntegerSeparation()
    if w == 0:
        if d.real > 0:
            return gamma(c) * gamma(d) * rgamma(c - a) * rgamma(c - b)
        raise ConvergenceError(
            "2F1 diverges at unit argument for Re(c-a-b) <= 0"
        )
    coeff_a = gamma(c) * gamma(d) * rgamma(c - a) * rgamma(c - b)
    coeff_b = gamma(c) * gamma(-d) * rgamma(a) * rgamma(b)
    f1 = _hyp2f1_series(a, b, a + b - c + 1.0, w, rtol)
    f2 = _hyp2f1_series(c - a, c - b, d + 1.0, w, rtol)
    return coeff_a * f1 + coeff_b * w**d * f2


_SERIES_RADIUS = 0.75


def _hyp2f1_zw(a, b, c, z, w, rtol):
    """Core dispatcher; ``z`` and ``w`` are the same point with w = 1 - z.

    Passing both lets callers that know 1-z exactly (e.g. sech^2 r paired
    with tanh^2 r) avoid the cancellation of forming it from z.
    """
    a, b, c = complex(a), complex(b), complex(c)
    if _near_nonpositive_integer(c):
        raise DomainError("2F1 undefined for c a non-positive integer")
    if z == 0:
        return 1.0 + 0.0j
    ka = _pochhammer_is_terminating(a)
    kb = _pochhammer_is_terminating(b)
    if ka is not None or kb is not None:
        k = min(x for x in (ka, kb) if x is not None)
        return _hyp2f1_series(a, b, c, z, rtol, max_terms=k + 4)
    if abs(z) <= _SERIES_RADIUS:
        return _hyp2f1_series(a, b, c, z, rtol)
    if z.imag == 0.0:
        x = z.real
        if x < 0.0:
            # Pfaff transformation maps (-inf, 0) into [0, 1).
            zz = x / (x - 1.0)
            ww = 1.0 / (1.0 - x)
            return (1.0 - x) ** (-a) * _hyp2f1_zw(a, c - b, c, zz, ww, rtol)
        if x <= 1.0:
            wr = w.real if isinstance(w, complex) else float(w)
            try:
                return _hyp2f1_near_one(a, b, c, wr, rtol)
            except _IntegerSeparation:
                # Nonzero integer c-a-b: no linear connection formula.
                # The plain series still converges for z < 1, slowly.
                if x < 0.999:
                    return _hyp2f1_series(a, b, c, x, rtol)
                raise ConvergenceError(
                    "2F1 with integer c-a-b unsupported this close to z = 1"
                )
    raise DomainError(
        "2F1 argument outside the supported region "
        "(|z| <= 0.75, real z < 0, or real z in [0.75, 1])"
    )


def hyp2f1(a: complex, b: complex, c: complex, z: complex,
           rtol: float = SPECIAL_RTOL) -> complex:
    """Gauss hypergeometric function F(a, b; c; z).

    Supported arguments: any complex z with |z| <= 0.75 (power series),
    real z < 0 (Pfaff transformation), and real z in [0.75, 1] (connection
    formula at unit argument, including the logarithmic case c = a + b).
    Other regions raise DomainError; they are never needed here.
    """
    z = complex(z)
    return _hyp2f1_zw(a, b, c, z, 1.0 - z, rtol)


def gauss_value(a: complex, b: complex, c: complex) -> complex:
    """F(a, b; c; 1) = G(c)G(c-a-b) / (G(c-a)G(c-b)) for Re(c-a-b) > 0."""
    d = complex(c) - a - b
    if d.real <= 0:
        raise DomainError("2F1 at unit argument requires Re(c-a-b) > 0")
    return gamma(c) * gamma(d) * rgamma(c - a) * rgamma(c - b)


# ---------------------------------------------------------------------------
# Modified Bessel function of the second kind, complex order.

EULER_GAMMA = 0.5772156649015329

# Below this the two leading terms of the small-argument expansion are
# already exact to double precision (corrections are O(x^2) relative).
_BESSEL_SMALL_X = 1e-8


def _bessel_small_x(nu: complex, x):
    """Leading small-x form of K_nu; valid for x < _BESSEL_SMALL_X.

    Returns None when the order is too close to a nonzero integer for the
    Gamma(+-nu) pair to be evaluated stably; callers then fall back to
    quadrature.
    """
    n = round(nu.real)
    if abs(nu - n) < 1e-6 and abs(nu.imag) < 1e-6:
        if n == 0 and abs(nu) < 1e-12:
            return -(np.log(x / 2.0) + EULER_GAMMA) + 0.0j
        return None
    half = np.asarray(x, dtype=float) / 2.0
    return 0.5 * (gamma(nu) * half ** (-nu) + gamma(-nu) * half**nu)


def _bessel_truncation(x: float, sigma: float, budget: float, margin: float) -> float:
    """Smallest T with x*cosh(T) - sigma*T >= budget + margin."""
    target = budget + margin
    t = math.acosh(max(2.0, target / x)) if x < target / 2.0 else 1.0
    for _ in range(4):
        t = math.acosh(max(2.0, (target + sigma * t) / x))
    return max(t, 1.0)


def _bessel_panels(t_max: float, imag_rate: float) -> np.ndarray:
    width = min(0.7, 2.4 / (1.0 + imag_rate))
    n = max(4, int(math.ceil(t_max / width)))
    return np.linspace(0.0, t_max, n + 1)


def _bessel_eval(nu: complex, x: float, edges: np.ndarray) -> complex:
    halves = 0.5 * (edges[1:] - edges[:-1])
    mids = 0.5 * (edges[1:] + edges[:-1])
    ts = (mids[:, None] + halves[:, None] * _GL_NODES[None, :]).ravel()
    vals = np.exp(-x * np.cosh(ts)) * np.cosh(nu * ts)
    vals = vals.reshape(len(mids), len(_GL_NODES))
    return complex(np.sum(halves * (vals @ _GL_WEIGHTS)))


def bessel_k(nu: complex, x: float, spec: QuadratureSpec = DEFAULT_SPEC) -> complex:
    """K_nu(x) for x > 0 and complex order nu, from the cosh integral.

    The integrand decays like exp(-x*cosh(t) + |Re nu| t); truncation is
    chosen so the discarded tail is below the working tolerance relative
    to the integrand's peak, then pushed out by the spec's margin.
    Symmetry in nu and conjugation symmetry hold by construction.
    """
    x = float(x)
    if x <= 0:
        raise DomainError("bessel_k requires x > 0")
    nu = complex(nu)
    if x < _BESSEL_SMALL_X:
        small = _bessel_small_x(nu, x)
        if small is not None:
            return complex(small)
    sigma = abs(nu.real)
    # Peak of the integrand envelope exp(-x cosh t + sigma t); cut the
    # tail roughly 40 e-folds (~4e-18) below it.
    t_peak = math.asinh(sigma / x) if sigma > 0 else 0.0
    peak_log = -x * math.cosh(t_peak) + sigma * t_peak
    budget = peak_log + 40.0
    t_max = _bessel_truncation(x, sigma, budget, spec.truncation_margin)
    edges = _bessel_panels(t_max, abs(nu.imag))
    val = _bessel_eval(nu, x, edges)
    for _ in range(3):
        finer = np.linspace(0.0, edges[-1], 2 * (len(edges) - 1) + 1)
        val2 = _bessel_eval(nu, x, finer)
        err = abs(val - val2)
        edges, val = finer, val2
        if err <= SPECIAL_RTOL * max(abs(val2), spec.absolute_tolerance):
            return val
    if abs(val) < spec.absolute_tolerance:
        return val
    raise ConvergenceError(
        "bessel_k quadrature did not converge", best_estimate=val, achieved_error=err
    )


def bessel_k_many(nu: complex, xs: Sequence[float],
                  spec: QuadratureSpec = DEFAULT_SPEC) -> np.ndarray:
    """Vector of K_nu over positive abscissas.

    Small abscissas go through the closed small-x form in one vectorized
    sweep; the rest are integrated individually.
    """
    nu = complex(nu)
    xs = np.asarray(xs, dtype=float)
    out = np.empty(xs.shape, dtype=complex)
    small = xs < _BESSEL_SMALL_X
    if small.any():
        vals = _bessel_small_x(nu, xs[small])
        if vals is None:
            small = np.zeros_like(small)
        else:
            out[small] = vals
    for i in np.nonzero(~small)[0]:
        out[i] = bessel_k(nu, float(xs[i]), spec)
    return out


def weber_schafheitlin_rhs(nu: complex, mu: complex, rho: complex) -> complex:
    """Closed form of int_0^inf K_nu(r) K_mu(r) r^(-rho) dr.

    Equals the product of the four Gammas of (1 +- nu +- mu - rho)/2
    divided by 2^(rho+2) * Gamma(1-rho); requires Re(1 +- nu +- mu - rho)
    to be positive for all four sign choices.
    """
    nu, mu, rho = complex(nu), complex(mu), complex(rho)
    prod = 1.0 + 0.0j
    for snu in (1.0, -1.0):
        for smu in (1.0, -1.0):
            arg = (1.0 + snu * nu + smu * mu - rho) / 2.0
            if arg.real <= 0:
                raise DomainError(
                    "moment integral undefined: Re(1 +- nu +- mu - rho) must be positive"
                )
            prod *= gamma(arg)
    return prod / (2.0 ** (rho + 2.0) * gamma(1.0 - rho))


def bessel_product_moment(nu: complex, mu: complex, power: complex,
                          spec: QuadratureSpec = DEFAULT_SPEC) -> complex:
    """Quadrature of int_0^inf K_nu(r) K_mu(r) r^power dr.

    Runs in the log variable r = e^v, which turns the algebraic endpoint
    behaviour r^(power - |Re nu| - |Re mu|) into clean exponential decay.
    This is the independent oracle for ``weber_schafheitlin_rhs`` (with
    power = -rho) and for every L^2 norm built on Bessel kernels.
    """
    nu, mu, power = complex(nu), complex(mu), complex(power)
    decay_left = power.real + 1.0 - abs(nu.real) - abs(mu.real)
    if decay_left <= 0:
        raise DomainError("moment integrand is not integrable at r = 0")
    depth = -math.log(spec.absolute_tolerance) + spec.truncation_margin
    v_min = -depth / decay_left
    # Large-r decay is exp(-2 e^v); solve 2 e^v - (Re power + 1) v >= depth.
    v_max = math.log(0.5 * depth + 2.0)
    for _ in range(4):
        v_max = math.log(0.5 * (depth + max(0.0, (power.real + 1.0) * v_max)) + 2.0)
    osc = abs(nu.imag) + abs(mu.imag) + abs(power.imag)
    width = min(0.9, math.pi / (2.0 * (1.0 + osc)))
    n = max(8, int(math.ceil((v_max - v_min) / width)))

    conjugate_pair = mu == nu.conjugate()

    def evaluate(n_panels):
        edges = np.linspace(v_min, v_max, n_panels + 1)
        halves = 0.5 * (edges[1:] - edges[:-1])
        mids = 0.5 * (edges[1:] + edges[:-1])
        vs = (mids[:, None] + halves[:, None] * _GL_NODES[None, :]).ravel()
        rs = np.exp(vs)
        k1 = bessel_k_many(nu, rs, spec)
        k2 = np.conjugate(k1) if conjugate_pair else bessel_k_many(mu, rs, spec)
        integrand = k1 * k2 * np.exp((power + 1.0) * vs)
        integrand = integrand.reshape(len(mids), len(_GL_NODES))
        return complex(np.sum(halves * (integrand @ _GL_WEIGHTS)))

    val = evaluate(n)
    for _ in range(3):
        val2 = evaluate(2 * n)
        err = abs(val - val2)
        n, val = 2 * n, val2
        if err <= spec.relative_tolerance * max(abs(val2), spec.absolute_tolerance):
            return val
    raise ConvergenceError(
        "bessel moment quadrature did not converge",
        best_estimate=val,
        achieved_error=err,
    )
