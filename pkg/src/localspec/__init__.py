"""Spectral data of the dilation-invariant log-modulus operators over local
fields: Gamma factors, critical-line multipliers, exact p-adic Toeplitz
models, and a Mellin-side representation with a direct FFT oracle."""

from ._backend import BACKEND
from .characters import (
    CharacterComponent,
    Place,
    RamifiedComponentError,
    complex_component,
    complex_place,
    finite_place,
    ramified,
    real_even,
    real_odd,
    real_place,
    unramified,
)
from .exactscalar import ExactScalar
from .gamma_spectral import (
    SupEstimate,
    gamma_factor,
    h_line_series,
    k_line_series,
    minimum_h,
    spectral_h,
    spectral_k,
    spectral_kn,
    sup_abs_k,
)
from .mellin import (
    BoundaryDecayError,
    ComponentProfile,
    LineGrid,
    MultiplicativeFunction,
    SampledLineFunction,
    apply_spectral,
    decay_bound,
    direct_apply,
    from_multiplicative,
    to_multiplicative,
)
from .padic import (
    BandKind,
    KIND_A,
    KIND_H,
    KIND_K,
    NonHermitianError,
    OperatorTruncation,
    band_coefficient,
    binomial_kn,
    bracket_with_A,
    build_truncation,
    extreme_eigenvalues,
    inversion_conjugate,
    kind_kn,
    symbol,
    symbol_range,
    theta_value,
)
from .specfun import PoleError, digamma, log_gamma, polygamma

__version__ = "0.1.0"
