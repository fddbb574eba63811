"""Complex log-Gamma, digamma and polygamma.

The scalar engine under every Gamma factor and spectral multiplier in this
package.  Evaluation strategy: shift the argument up by the recurrence
``digamma(z) = digamma(z+1) - 1/z`` (and its integrated / differentiated
analogues) until Re(z) >= 12, then apply the Bernoulli asymptotic expansion.
``log_gamma`` returns the principal branch, continuous on the plane cut along
the negative real axis: the shifted identity
``log_gamma(z) = log_gamma(z+n) - sum Log(z+k)`` holds with principal logs on
the whole cut plane, which fixes the branch.

Arguments within 1e-8 of a pole (the non-positive integers) raise
``PoleError`` instead of returning huge values, so callers must route around
poles deliberately.

All functions accept a complex scalar or a numpy array and are pure; they are
safe to call concurrently.
"""

import numpy as np

from ._backend import BACKEND, kernels

__all__ = ["PoleError", "log_gamma", "digamma", "polygamma", "BACKEND"]


class PoleError(ValueError):
    """Evaluation requested at (or within 1e-8 of) a pole."""


def _dispatch(fn, z, *args):
    arr = np.asarray(z, dtype=np.complex128)
    if not np.all(np.isfinite(arr)):
        raise ValueError("non-finite argument")
    out = fn(*args, arr.ravel()) if args else fn(arr.ravel())
    out = out.reshape(arr.shape)
    if np.any(np.isnan(out)):
        raise PoleError("argument at or within 1e-8 of a non-positive integer")
    if np.isscalar(z) or arr.shape == ():
        return complex(out.reshape(-1)[0])
    return out


def log_gamma(s):
    """Principal branch of log Gamma(s).

    exp of the result equals Gamma(s); relative accuracy ~1e-13 for
    |s| <= 1e4 away from the poles.
    """
    return _dispatch(kernels.loggamma, s)


def digamma(s):
    """Gamma'(s)/Gamma(s) = -gamma - 1/s - sum_{j>=1} (1/(j+s) - 1/j)."""
    return _dispatch(kernels.digamma, s)


def polygamma(n, s):
    """n-th derivative of digamma, n >= 1.

    polygamma(1, s) = sum_{j>=0} 1/(j+s)^2 and the alternating factorial
    series for larger n.
    """
    if n < 1 or n != int(n):
        raise ValueError(f"order must be a positive integer, got {n!r}")
    return _dispatch(kernels.polygamma, s, int(n))
