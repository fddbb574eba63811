"""Pure-numpy kernels: vectorized recurrence shift + Bernoulli asymptotics.

This is the fallback path selected by ``LOCALSPEC_BACKEND=numpy``; the numba
module implements the same surface with scalar jitted loops.  Both must agree
to ~1e-13, which the test suite enforces.

Poles are signalled by NaN entries; the public wrappers in ``specfun`` turn
those into exceptions.
"""

import numpy as np

from ._tables import B2K_OVER_2K, B2K_STIRLING, B2K, LN_2PI, POLE_GUARD, SHIFT_THRESHOLD

_NB2K = len(B2K)


def _pole_mask(z):
    m = np.round(z.real)
    return (m <= 0.0) & (np.abs(z - m) < POLE_GUARD)


def loggamma(z):
    """Principal-branch log Gamma, elementwise over a complex array."""
    z = np.array(z, dtype=np.complex128, copy=True)
    out = np.zeros_like(z)
    bad = _pole_mask(z)
    z[bad] = 1.0  # placeholder, overwritten with NaN below
    # Shift with principal logs; the sum is accumulated pairwise by numpy
    # per round, which keeps the cancellation error tiny even for |z| ~ 1e4.
    mask = (z.real < SHIFT_THRESHOLD) & ~bad
    while mask.any():
        out[mask] -= np.log(z[mask])
        z[mask] += 1.0
        mask = (z.real < SHIFT_THRESHOLD) & ~bad
    w = 1.0 / z
    w2 = w * w
    ser = np.zeros_like(z)
    for k in range(_NB2K - 1, -1, -1):
        ser = (ser + B2K_STIRLING[k]) * w2
    ser = ser / w  # leaves sum B2k/(2k(2k-1)) w^(2k-1)
    out += (z - 0.5) * np.log(z) - z + 0.5 * LN_2PI + ser
    out[bad] = np.nan
    return out


def digamma(z):
    """Logarithmic derivative of Gamma, elementwise."""
    z = np.array(z, dtype=np.complex128, copy=True)
    out = np.zeros_like(z)
    bad = _pole_mask(z)
    z[bad] = 1.0
    mask = (z.real < SHIFT_THRESHOLD) & ~bad
    while mask.any():
        out[mask] -= 1.0 / z[mask]
        z[mask] += 1.0
        mask = (z.real < SHIFT_THRESHOLD) & ~bad
    w = 1.0 / z
    w2 = w * w
    ser = np.zeros_like(z)
    for k in range(_NB2K - 1, -1, -1):
        ser = (ser + B2K_OVER_2K[k]) * w2
    out += np.log(z) - 0.5 * w - ser
    out[bad] = np.nan
    return out


def polygamma(n, z):
    """n-th derivative of digamma (n >= 1), elementwise."""
    z = np.array(z, dtype=np.complex128, copy=True)
    out = np.zeros_like(z)
    bad = _pole_mask(z)
    z[bad] = 1.0
    fact_n = float(np.prod(np.arange(1, n + 1), dtype=np.float64)) if n > 0 else 1.0
    sign_shift = 1.0 if (n + 1) % 2 == 0 else -1.0
    mask = (z.real < SHIFT_THRESHOLD) & ~bad
    while mask.any():
        out[mask] += sign_shift * fact_n * z[mask] ** (-(n + 1))
        z[mask] += 1.0
        mask = (z.real < SHIFT_THRESHOLD) & ~bad
    w = 1.0 / z
    wn = w**n
    # (n-1)!/z^n + n!/(2 z^(n+1)) + sum_k B_2k (2k+n-1)!/(2k)! z^-(2k+n)
    acc = (fact_n / n) * wn + 0.5 * fact_n * wn * w
    w2 = w * w
    wp = wn * w2
    for k in range(_NB2K):
        ratio = 1.0
        for i in range(1, n):
            ratio *= 2.0 * (k + 1) + i
        acc += B2K[k] * ratio * wp
        wp = wp * w2
    sign = 1.0 if (n - 1) % 2 == 0 else -1.0
    out += sign * acc
    out[bad] = np.nan
    return out


def h_series_partial(t, nterms, pref, sigma, c):
    """Partial sums of the conductor-side critical-line series.

    Per point t, sums ``pref/j - 2u/(u^2+t^2)`` with ``u = sigma*j + c`` over
    ``j = 1..nterms-1``.  The Euler-Maclaurin tail is added by the caller.
    """
    t = np.asarray(t, dtype=np.float64)
    nterms = np.asarray(nterms)
    out = np.empty_like(t)
    for i in range(t.size):
        j = np.arange(1.0, float(nterms.flat[i]))
        u = sigma * j + c
        out.flat[i] = np.sum(pref / j - 2.0 * u / (u * u + t.flat[i] * t.flat[i]))
    return out


def k_series_partial(t, nterms, sigma, c):
    """Partial sums of the commutator-side series: 4ut/(u^2+t^2)^2, j >= 0."""
    t = np.asarray(t, dtype=np.float64)
    nterms = np.asarray(nterms)
    out = np.empty_like(t)
    for i in range(t.size):
        j = np.arange(0.0, float(nterms.flat[i]))
        u = sigma * j + c
        d = u * u + t.flat[i] * t.flat[i]
        out.flat[i] = np.sum(4.0 * u * t.flat[i] / (d * d))
    return out
