"""Adaptive Gauss-Legendre quadrature.

A single engine backs every numerical integral in the package: 15-point
Gauss-Legendre panels refined by bisection, with the per-panel error taken
as the difference between a panel estimate and the sum of its two halves.
Semi-infinite domains are truncated from a caller-declared exponential
decay envelope; the truncation point is pushed out by
``truncation_margin`` so the discarded tail sits safely below the
absolute tolerance.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DomainError

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(15)


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and budget for a numerical integral."""

    relative_tolerance: float = 1e-8
    absolute_tolerance: float = 1e-14
    max_panels: int = 20000
    truncation_margin: float = 5.0

    def __post_init__(self):
        if self.relative_tolerance <= 0 or self.absolute_tolerance <= 0:
            raise DomainError("quadrature tolerances must be positive")
        if self.max_panels < 1:
            raise DomainError("max_panels must be at least 1")


DEFAULT_SPEC = QuadratureSpec()


def _as_vectorized(f: Callable) -> Callable:
    def wrapped(xs):
        return np.array([complex(f(float(x))) for x in xs], dtype=complex)

    return wrapped


def _panel(f, a, b):
    """15-point Gauss-Legendre estimate on [a, b]."""
    half = 0.5 * (b - a)
    xs = 0.5 * (a + b) + half * _GL_NODES
    ys = np.asarray(f(xs), dtype=complex)
    return half * np.dot(_GL_WEIGHTS, ys)


def integrate(
    f: Callable,
    a: float,
    b: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
    *,
    decay_rate: float | None = None,
    vectorized: bool = False,
) -> complex:
    """Integrate ``f`` over [a, b] to the tolerances in ``spec``.

    ``b`` may be ``math.inf``, in which case ``decay_rate`` must give a
    rate lambda such that |f(x)| decays at least like exp(-lambda*x); the
    domain is then truncated where that envelope falls below the absolute
    tolerance.  Set ``vectorized=True`` when ``f`` accepts numpy arrays.

    Raises ConvergenceError (with the best estimate attached) when the
    panel budget runs out before the error estimate meets the tolerance.
    """
    if not vectorized:
        f = _as_vectorized(f)
    if math.isinf(b):
        if decay_rate is None or decay_rate <= 0:
            raise DomainError(
                "semi-infinite integration requires a positive decay_rate envelope"
            )
        span = (-math.log(spec.absolute_tolerance) + spec.truncation_margin) / decay_rate
        b = a + span
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError("integration endpoints must be finite after truncation")
    if a == b:
        return 0.0 + 0.0j

    # Seed with a handful of panels so a feature missed by one coarse
    # panel cannot fool the global error estimate.
    edges = np.linspace(a, b, 9)
    heap = []
    counter = 0
    total = 0.0 + 0.0j
    total_err = 0.0
    n_panels = 0
    min_width = (b - a) * 1e-14

    def push(lo, hi):
        nonlocal counter, total, total_err, n_panels
        coarse = _panel(f, lo, hi)
        mid = 0.5 * (lo + hi)
        left = _panel(f, lo, mid)
        right = _panel(f, mid, hi)
        fine = left + right
        err = abs(coarse - fine)
        if hi - lo < min_width:
            err = 0.0  # cannot usefully refine further
        total += fine
        total_err += err
        heapq.heappush(heap, (-err, counter, lo, hi, fine, left, right))
        counter += 1
        n_panels += 3

    for lo, hi in zip(edges[:-1], edges[1:]):
        push(lo, hi)

    while total_err > max(spec.relative_tolerance * abs(total), spec.absolute_tolerance):
        if n_panels >= spec.max_panels:
            raise ConvergenceError(
                "quadrature panel budget exhausted",
                best_estimate=total,
                achieved_error=total_err,
            )
        neg_err, _, lo, hi, fine, left, right = heapq.heappop(heap)
        if -neg_err <= 0.0:
            break  # every remaining panel is at the refinement floor
        total -= fine
        total_err += neg_err  # removes the popped panel's error
        mid = 0.5 * (lo + hi)
        push(lo, mid)
        push(mid, hi)

    return total


def composite(
    f: Callable,
    edges: np.ndarray,
    *,
    vectorized: bool = True,
) -> complex:
    """Non-adaptive composite Gauss-Legendre over the given panel edges."""
    if not vectorized:
        f = _as_vectorized(f)
    halves = 0.5 * (edges[1:] - edges[:-1])
    mids = 0.5 * (edges[1:] + edges[:-1])
    xs = (mids[:, None] + halves[:, None] * _GL_NODES[None, :]).ravel()
    ys = np.asarray(f(xs), dtype=complex).reshape(len(mids), len(_GL_NODES))
    return complex(np.sum(halves * (ys @ _GL_WEIGHTS)))


def oscillation_edges(a: float, b: float, rate: Callable[[float], float],
                      base_width: float = 0.9) -> np.ndarray:
    """Panel edges sized against a local oscillation rate (radians/unit).

    Keeps each panel under roughly half an oscillation period so the
    15-point rule stays in its spectrally accurate regime.
    """
    edges = [a]
    x = a
    while x < b:
        w = min(base_width, math.pi / (2.0 * (1.0 + abs(rate(x)))))
        x = min(b, x + w)
        edges.append(x)
    return np.array(edges)
