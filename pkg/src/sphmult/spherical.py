"""Spherical function evaluation and multiplier norms on the Lorentz groups.

The radial spherical function is evaluated through the stable
hypergeometric form

    phi_s(a_r) = cosh(r)^(s - m/2) * F(m/4 - s/2, m0/4 - s/2; (m+m0)/4; tanh(r)^2)

after flipping s so Re(s) >= 0 (phi_s is even in s) and r to |r| (it is
even in r).  The pair (tanh^2 r, sech^2 r) is passed to the
hypergeometric core together, so the argument can sit arbitrarily close
to 1 without cancellation; far beyond the asymptotic handoff radius the
Harish-Chandra form c(s) e^((s - m/2) r) takes over.

The completely bounded multiplier norm on SO0(1,n) is the Gamma
expression

    G(m/2+sig) G(m/2-sig) |G(m/2+it)|^2
    -----------------------------------   (s = sig + i t, |sig| < m/2),
    G(m/2)^2 |G(m/2+s) G(m/2-s)|

equal to 1 at s = +-m/2 and undefined elsewhere; ``multiplier_l1_norm``
recomputes it as the L^1 norm of the squared-Bessel kernel and is the
quadrature cross-check.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ConvergenceError, DomainError, NotAMultiplierError
from .groups import RankOneGroup, StripPosition, as_spectral, classify
from .quadrature import (
    DEFAULT_SPEC,
    QuadratureSpec,
    _GL_NODES,
    _GL_WEIGHTS,
    composite,
    integrate,
    oscillation_edges,
)
from .specfun import (
    SPECIAL_RTOL,
    _hyp2f1_zw,
    bessel_k,
    bessel_k_many,
    bessel_product_moment,
    gamma,
    hyp2f1,
)


class EvalMethod(Enum):
    HYPERGEOMETRIC_STABLE = "hypergeometric_stable"
    HYPERGEOMETRIC_DIRECT = "hypergeometric_direct"
    INTEGRAL_QUADRATURE = "integral_quadrature"
    ASYMPTOTIC = "asymptotic"


@dataclass(frozen=True)
class SphericalValue:
    value: complex
    method: EvalMethod

    def __complex__(self):
        return complex(self.value)


def _log_cosh(r: float) -> float:
    r = abs(r)
    return r + math.log1p(math.exp(-2.0 * r)) - math.log(2.0)


def _cosh_pow(r: float, exponent: complex) -> complex:
    return cmath.exp(exponent * _log_cosh(r))


def _switch_radius(sigma: float) -> float:
    return max(8.0, 20.0 / sigma)


def phi(group: RankOneGroup, s, r: float) -> SphericalValue:
    """Spherical function phi_s(a_r) on the given rank-one group.

    Any real r and complex s are accepted; evaluation symmetrizes both.
    Beyond the handoff radius (with Re s > 0) the asymptotic form is
    used; the relative error of the handoff itself is below e^-40.
    """
    m, m0 = group.m, group.m0
    sc = complex(as_spectral(s).value)
    if sc.real < 0:
        sc = -sc
    rr = abs(float(r))
    if rr == 0.0:
        return SphericalValue(1.0 + 0.0j, EvalMethod.HYPERGEOMETRIC_STABLE)
    if sc.real > 0 and rr > _switch_radius(sc.real):
        return SphericalValue(_phi_asymptotic(m, m0, sc, rr), EvalMethod.ASYMPTOTIC)
    a = m / 4.0 - sc / 2.0
    b = m0 / 4.0 - sc / 2.0
    c = (m + m0) / 4.0
    th = math.tanh(rr)
    z = th * th
    w = math.exp(-2.0 * _log_cosh(rr))
    try:
        f = _hyp2f1_zw(a, b, c, z, w, SPECIAL_RTOL)
        return SphericalValue(
            _cosh_pow(rr, sc - m / 2.0) * f, EvalMethod.HYPERGEOMETRIC_STABLE
        )
    except ConvergenceError:
        pass
    try:
        f = hyp2f1(m / 4.0 + sc / 2.0, m / 4.0 - sc / 2.0, c, -math.sinh(rr) ** 2)
        return SphericalValue(f, EvalMethod.HYPERGEOMETRIC_DIRECT)
    except ConvergenceError:
        if m0 == m + 2:
            val = phi_lorentz_integral(m, sc, rr, DEFAULT_SPEC)
            return SphericalValue(val, EvalMethod.INTEGRAL_QUADRATURE)
        raise


def phi_lorentz_integral(m: int, s, r: float,
                         spec: QuadratureSpec = DEFAULT_SPEC) -> complex:
    """Quadrature form of phi_s(a_r) on SO0(1, m+1).

    Evaluates G((m+1)/2) / (sqrt(pi) G(m/2)) *
    int_0^pi sin(th)^(m-1) (cosh r + sinh r cos th)^(-(s + m/2)) dth,
    which is even in both r and s.  The base is formed as
    cosh(r) (delta + 2 tanh(r) cos^2(th/2)) with delta = 1 - tanh(r)
    computed from e^(-2r), so the boundary layer at th = pi never
    cancels.  The layer itself has width ~e^(-|r|); beyond |r| of about
    25 it is narrower than adaptive bisection can resolve and this
    representation should not be used as an oracle.
    """
    if m < 1:
        raise DomainError("m must be at least 1")
    sc = complex(as_spectral(s).value)
    rr = abs(float(r))
    th = math.tanh(rr)
    delta = 2.0 * math.exp(-2.0 * rr) / (1.0 + math.exp(-2.0 * rr))  # 1 - tanh
    log_ch = _log_cosh(rr)
    expo = -(sc + m / 2.0)

    def integrand(theta):
        log_base = log_ch + np.log(delta + 2.0 * th * np.cos(theta / 2.0) ** 2)
        return np.sin(theta) ** (m - 1) * np.exp(expo * log_base)

    const = (gamma((m + 1) / 2.0) / (math.sqrt(math.pi) * gamma(m / 2.0))).real
    return const * integrate(integrand, 0.0, math.pi, spec, vectorized=True)


def phi_lorentz_hyp2(m: int, s, r: float) -> complex:
    """Second closed form of phi_s(a_r) on SO0(1, m+1), for r >= 0.

    e^(-(m/2+s) r) * F(m/2+s, m/2; m; 1 - e^(-2r)); the hypergeometric
    argument is passed together with its exact complement e^(-2r).
    """
    if r < 0:
        raise DomainError("phi_lorentz_hyp2 requires r >= 0; symmetrize first")
    sc = complex(as_spectral(s).value)
    w = math.exp(-2.0 * r)
    z = -math.expm1(-2.0 * r)
    f = _hyp2f1_zw(m / 2.0 + sc, m / 2.0, float(m), z, w, SPECIAL_RTOL)
    return cmath.exp(-(m / 2.0 + sc) * r) * f


def _c_function(m: int, m0: int, sc: complex) -> complex:
    return (
        2.0 ** (m / 2.0 - sc)
        * gamma((m + m0) / 4.0)
        * gamma(sc)
        / (gamma(m / 4.0 + sc / 2.0) * gamma(m0 / 4.0 + sc / 2.0))
    )


def c_function(group: RankOneGroup, s) -> complex:
    """Harish-Chandra c(s) for Re(s) > 0: the coefficient of e^((s-m/2)r)
    in the large-r behaviour of phi_s(a_r)."""
    sc = complex(as_spectral(s).value)
    if sc.real <= 0:
        raise DomainError("c_function requires Re(s) > 0")
    return _c_function(group.m, group.m0, sc)


def _phi_asymptotic(m: int, m0: int, sc: complex, r: float) -> complex:
    return _c_function(m, m0, sc) * cmath.exp((sc - m / 2.0) * r)


def phi_asymptotic(group: RankOneGroup, s, r: float) -> complex:
    """Leading large-r form c(s) e^((s - m/2) r), for Re(s) > 0."""
    sc = complex(as_spectral(s).value)
    if sc.real <= 0:
        raise DomainError("phi_asymptotic requires Re(s) > 0")
    return _phi_asymptotic(group.m, group.m0, sc, float(r))


def cb_norm_lorentz(m: int, s) -> float:
    """Completely bounded Fourier multiplier norm of phi_s on SO0(1, m+1).

    Defined for s in the open strip (the Gamma expression, real and
    >= 1) and at s = +-m/2 (exactly 1, stated separately because the
    naive formula hits a Gamma pole there).  Raises NotAMultiplierError
    on the rest of the boundary and outside the closed strip.
    """
    sp = as_spectral(s)
    position = classify(sp, m)
    if position is StripPosition.BOUNDARY_CONSTANT:
        return 1.0
    if position is not StripPosition.INTERIOR:
        raise NotAMultiplierError(
            f"phi_s is not a completely bounded multiplier at s={sp.value} (m={m})"
        )
    sigma, t = float(sp.sigma), float(sp.t)
    half = m / 2.0
    sc = complex(sigma, t)
    num = (
        gamma(half + sigma).real
        * gamma(half - sigma).real
        * abs(gamma(complex(half, t))) ** 2
    )
    den = gamma(half).real ** 2 * abs(gamma(half + sc) * gamma(half - sc))
    return num / den


_SPHERE_CONST_CACHE: dict[int, float] = {}


def _c_m(m: int) -> float:
    """Normalization sqrt(G(m) / (pi^(m/2) G(m/2))) of the kernel vectors."""
    if m not in _SPHERE_CONST_CACHE:
        _SPHERE_CONST_CACHE[m] = math.sqrt(
            gamma(float(m)).real / (math.pi ** (m / 2.0) * gamma(m / 2.0).real)
        )
    return _SPHERE_CONST_CACHE[m]


def bessel_vector(m: int, s, x_norm: float,
                  spec: QuadratureSpec = DEFAULT_SPEC) -> complex:
    """Radial profile of the L^2(R^m) vector whose matrix coefficients
    realize phi_s on the solvable part:

        c_m * 2^(1-m/2) / G(m/2 + s) * K_s(x_norm),  x_norm > 0,

    with c_m = sqrt(G(m)/(pi^(m/2) G(m/2))).  Requires s in the open strip.
    """
    sp = as_spectral(s)
    if classify(sp, m) is not StripPosition.INTERIOR:
        raise DomainError("bessel_vector requires s in the open strip")
    if x_norm <= 0:
        raise DomainError("bessel_vector requires x_norm > 0")
    sc = complex(sp.value)
    return (
        _c_m(m)
        * 2.0 ** (1.0 - m / 2.0)
        / gamma(m / 2.0 + sc)
        * bessel_k(sc, x_norm, spec)
    )


def bessel_vector_norm_sq(m: int, s) -> float:
    """Squared L^2 norm of the kernel vector, in closed Gamma form.

    Real, positive, equal to 1 on the imaginary axis, and symmetric in
    both sigma -> -sigma and t -> -t.
    """
    sp = as_spectral(s)
    if classify(sp, m) is not StripPosition.INTERIOR:
        raise DomainError("bessel_vector_norm_sq requires s in the open strip")
    sigma, t = float(sp.sigma), float(sp.t)
    half = m / 2.0
    sc = complex(sigma, t)
    num = (
        gamma(half + sigma).real
        * gamma(half - sigma).real
        * abs(gamma(complex(half, t))) ** 2
    )
    den = gamma(half).real ** 2 * abs(gamma(half + sc)) ** 2
    return num / den


def multiplier_l1_norm(m: int, s, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """L^1 norm of the squared-Bessel kernel whose Fourier transform is
    phi_s restricted to the nilpotent part; equals cb_norm_lorentz.

    Computed by quadrature:  2^(3-m) G(m) / (G(m/2)^2 |G(m/2+s) G(m/2-s)|)
    times int_0^inf |K_s(r)|^2 r^(m-1) dr.
    """
    sp = as_spectral(s)
    if classify(sp, m) is not StripPosition.INTERIOR:
        raise DomainError("multiplier_l1_norm requires s in the open strip")
    sc = complex(sp.value)
    half = m / 2.0
    moment = bessel_product_moment(sc, sc.conjugate(), m - 1.0, spec)
    const = (
        2.0 ** (3.0 - m)
        * gamma(float(m)).real
        / (gamma(half).real ** 2 * abs(gamma(half + sc) * gamma(half - sc)))
    )
    return const * moment.real


# ---------------------------------------------------------------------------
# The extension of phi_s to the solvable part, by direct quadrature.


def _angular_factor(m: int, lam: np.ndarray) -> np.ndarray:
    """int_{S^(m-1)} cos(lam <omega, e1>) dsurface(omega), vectorized in lam."""
    lam = np.asarray(lam, dtype=float)
    if m == 1:
        return 2.0 * np.cos(lam)
    if m == 2:
        n = 64 + 8 * int(np.ceil(np.max(np.abs(lam)) / 4.0))
        theta = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
        return np.cos(np.outer(lam, np.cos(theta))).sum(axis=1) * (2.0 * math.pi / n)
    if m == 3:
        n = 48 + 8 * int(np.ceil(np.max(np.abs(lam)) / 4.0))
        nodes, weights = np.polynomial.legendre.leggauss(n)
        return 2.0 * math.pi * np.cos(np.outer(lam, nodes)) @ weights
    raise DomainError("direct quadrature supports m in {1, 2, 3}")


def phi_on_na(m: int, s, r: float, y, spec: QuadratureSpec = DEFAULT_SPEC) -> complex:
    """phi_s(a_r n_y) through the Bessel-kernel coefficient integral.

    For y = 0 this reproduces phi_s(a_r); for r = 0 it is the Fourier
    transform of the squared-Bessel kernel at y.  Supports m in {1,2,3}
    and s in the open strip.
    """
    if m not in (1, 2, 3):
        raise DomainError("phi_on_na supports m in {1, 2, 3}")
    sp = as_spectral(s)
    if classify(sp, m) is not StripPosition.INTERIOR:
        raise DomainError("phi_on_na requires s in the open strip")
    sc = complex(sp.value)
    r = float(r)
    y_norm = float(np.linalg.norm(np.atleast_1d(np.asarray(y, dtype=float))))
    lam = math.exp(r) * y_norm  # oscillation rate of the plane wave

    sigma = abs(sc.real)
    decay_left = m - 2.0 * sigma
    depth = -math.log(spec.absolute_tolerance) + spec.truncation_margin
    v_min = -depth / decay_left
    x_max = depth / (1.0 + math.exp(r))
    v_max = math.log(max(x_max, 1e-3))

    t_osc = 2.0 * abs(sc.imag)
    edges = oscillation_edges(
        v_min, v_max, lambda v: lam * math.exp(v) + t_osc, base_width=0.8
    )

    scale = math.exp(r)

    def build(edges_arr):
        halves = 0.5 * (edges_arr[1:] - edges_arr[:-1])
        mids = 0.5 * (edges_arr[1:] + edges_arr[:-1])
        vs = (mids[:, None] + halves[:, None] * _GL_NODES[None, :]).ravel()
        xs = np.exp(vs)
        k_near = bessel_k_many(sc, xs, spec)
        k_far = bessel_k_many(sc, scale * xs, spec)
        vals = k_near * k_far * _angular_factor(m, lam * xs) * np.exp(m * vs)
        vals = vals.reshape(len(mids), len(_GL_NODES))
        return complex(np.sum(halves * (vals @ _GL_WEIGHTS)))

    integral = build(edges)
    for _ in range(2):
        finer = np.sort(np.concatenate([edges, 0.5 * (edges[1:] + edges[:-1])]))
        refined = build(finer)
        err = abs(integral - refined)
        edges, integral = finer, refined
        if err <= spec.relative_tolerance * max(abs(refined), spec.absolute_tolerance):
            break

    pref = (
        math.pi ** (-m / 2.0)
        * 2.0 ** (2.0 - m)
        * math.exp(m * r / 2.0)
        * gamma(float(m)).real
        / (gamma(m / 2.0).real * gamma(m / 2.0 + sc) * gamma(m / 2.0 - sc))
    )
    return pref * integral


def cesaro_extract(phi_map, x0: float, n: int) -> complex:
    """Point-mass estimator (1/n) int_n^{2n} e^(i r x0) phi(r) dr.

    Recovers the mass a regular measure puts at x0 from its transform
    phi, in the limit n -> infinity; finite n gives an O(1/n) estimate.
    The sampled map may be scalar or vectorized.
    """
    if n < 1:
        raise DomainError("cesaro_extract requires n >= 1")
    lo, hi = float(n), 2.0 * float(n)
    n_panels = max(8, int(math.ceil(hi - lo)))
    edges = np.linspace(lo, hi, n_panels + 1)

    def integrand(rs):
        try:
            vals = np.asarray(phi_map(rs), dtype=complex)
            if vals.shape != rs.shape:
                raise TypeError
        except TypeError:
            vals = np.array([complex(phi_map(float(r))) for r in rs], dtype=complex)
        return np.exp(1j * x0 * rs) * vals

    return composite(integrand, edges) / float(n)
