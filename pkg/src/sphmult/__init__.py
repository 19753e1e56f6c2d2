"""Spherical functions on rank-one Lorentz groups and their multiplier norms.

The package provides:

* ``specfun``      -- Gamma/Beta/2F1, modified Bessel K of complex order,
                      and the Gamma closed form of the K-product moment
                      integral, each paired with a quadrature oracle;
* ``groups``       -- parameter blocks for the four rank-one families and
                      classification of spectral parameters against the
                      boundedness strip;
* ``spherical``    -- spherical function evaluation, Harish-Chandra
                      asymptotics, the completely bounded multiplier norm
                      on the Lorentz groups, and Bessel-kernel vectors;
* ``lorentz``      -- concrete Lorentz matrices, the sphere action and
                      its cocycle, stereographic transport, and
                      representation-coefficient quadratures;
* ``tree``         -- reduced words in free products, homogeneous-tree
                      spheres, radialization and radial convolution;
* ``cli``          -- the ``sphmult`` command line front end.
"""

from .errors import (
    CapacityError,
    ConvergenceError,
    DomainError,
    InvariantError,
    NotAMultiplierError,
    PoleError,
    SphmultError,
)
from .groups import (
    Family,
    RankOneGroup,
    SpectralParameter,
    StripPosition,
    classify,
    params_for,
)
from .quadrature import DEFAULT_SPEC, QuadratureSpec, integrate
from .specfun import (
    bessel_k,
    bessel_product_moment,
    beta,
    gamma,
    hyp2f1,
    weber_schafheitlin_rhs,
)
from .spherical import (
    EvalMethod,
    SphericalValue,
    bessel_vector,
    bessel_vector_norm_sq,
    c_function,
    cb_norm_lorentz,
    cesaro_extract,
    multiplier_l1_norm,
    phi,
    phi_asymptotic,
    phi_lorentz_hyp2,
    phi_lorentz_integral,
    phi_on_na,
)

__all__ = [
    "CapacityError",
    "ConvergenceError",
    "DomainError",
    "InvariantError",
    "NotAMultiplierError",
    "PoleError",
    "SphmultError",
    "Family",
    "RankOneGroup",
    "SpectralParameter",
    "StripPosition",
    "classify",
    "params_for",
    "DEFAULT_SPEC",
    "QuadratureSpec",
    "integrate",
    "bessel_k",
    "bessel_product_moment",
    "beta",
    "gamma",
    "hyp2f1",
    "weber_schafheitlin_rhs",
    "EvalMethod",
    "SphericalValue",
    "bessel_vector",
    "bessel_vector_norm_sq",
    "c_function",
    "cb_norm_lorentz",
    "cesaro_extract",
    "multiplier_l1_norm",
    "phi",
    "phi_asymptotic",
    "phi_lorentz_hyp2",
    "phi_lorentz_integral",
    "phi_on_na",
]

__version__ = "0.1.0"
