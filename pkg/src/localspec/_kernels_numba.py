"""Numba kernels: scalar recurrence shift + Bernoulli asymptotics, jit loops.

Same exported surface as ``_kernels_numpy``; selected by default when numba
imports cleanly.  Poles are signalled by NaN entries, as in the numpy path.
"""

import cmath
import math

import numpy as np
from numba import njit

from ._tables import B2K_OVER_2K, B2K_STIRLING, B2K, LN_2PI, POLE_GUARD, SHIFT_THRESHOLD

_NB2K = len(B2K)
_NAN = complex(float("nan"), float("nan"))


@njit(cache=True)
def _is_pole(z):
    m = math.floor(z.real + 0.5)
    return m <= 0.0 and abs(z - m) < POLE_GUARD


@njit(cache=True)
def _loggamma_scalar(z):
    if _is_pole(z):
        return _NAN
    # Kahan-compensated shift sum; |z| can be ~1e4 with ~1e4 shift terms.
    shift = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    while z.real < SHIFT_THRESHOLD:
        y = -cmath.log(z) - comp
        s = shift + y
        comp = (s - shift) - y
        shift = s
        z = z + 1.0
    w = 1.0 / z
    w2 = w * w
    ser = 0.0 + 0.0j
    for k in range(_NB2K - 1, -1, -1):
        ser = (ser + B2K_STIRLING[k]) * w2
    ser = ser / w
    return (z - 0.5) * cmath.log(z) - z + 0.5 * LN_2PI + ser + shift


@njit(cache=True)
def _digamma_scalar(z):
    if _is_pole(z):
        return _NAN
    shift = 0.0 + 0.0j
    while z.real < SHIFT_THRESHOLD:
        shift -= 1.0 / z
        z = z + 1.0
    w = 1.0 / z
    w2 = w * w
    ser = 0.0 + 0.0j
    for k in range(_NB2K - 1, -1, -1):
        ser = (ser + B2K_OVER_2K[k]) * w2
    return cmath.log(z) - 0.5 * w - ser + shift


@njit(cache=True)
def _polygamma_scalar(n, z):
    if _is_pole(z):
        return _NAN
    fact_n = 1.0
    for i in range(2, n + 1):
        fact_n *= i
    sign_shift = 1.0 if (n + 1) % 2 == 0 else -1.0
    shift = 0.0 + 0.0j
    while z.real < SHIFT_THRESHOLD:
        shift += sign_shift * fact_n * z ** (-(n + 1))
        z = z + 1.0
    w = 1.0 / z
    wn = w**n
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
    return sign * acc + shift


@njit(cache=True)
def _loggamma_arr(z):
    out = np.empty_like(z)
    for i in range(z.size):
        out.flat[i] = _loggamma_scalar(z.flat[i])
    return out


@njit(cache=True)
def _digamma_arr(z):
    out = np.empty_like(z)
    for i in range(z.size):
        out.flat[i] = _digamma_scalar(z.flat[i])
    return out


@njit(cache=True)
def _polygamma_arr(n, z):
    out = np.empty_like(z)
    for i in range(z.size):
        out.flat[i] = _polygamma_scalar(n, z.flat[i])
    return out


def loggamma(z):
    return _loggamma_arr(np.ascontiguousarray(z, dtype=np.complex128))


def digamma(z):
    return _digamma_arr(np.ascontiguousarray(z, dtype=np.complex128))


def polygamma(n, z):
    return _polygamma_arr(n, np.ascontiguousarray(z, dtype=np.complex128))


@njit(cache=True)
def _h_series_partial(t, nterms, pref, sigma, c):
    out = np.empty_like(t)
    for i in range(t.size):
        ti2 = t[i] * t[i]
        acc = 0.0
        for j in range(1, nterms[i]):
            u = sigma * j + c
            acc += pref / j - 2.0 * u / (u * u + ti2)
        out[i] = acc
    return out


@njit(cache=True)
def _k_series_partial(t, nterms, sigma, c):
    out = np.empty_like(t)
    for i in range(t.size):
        ti = t[i]
        ti2 = ti * ti
        acc = 0.0
        for j in range(nterms[i]):
            u = sigma * j + c
            d = u * u + ti2
            acc += 4.0 * u * ti / (d * d)
        out[i] = acc
    return out


def h_series_partial(t, nterms, pref, sigma, c):
    t = np.ascontiguousarray(t, dtype=np.float64)
    nterms = np.ascontiguousarray(nterms, dtype=np.int64)
    return _h_series_partial(t, nterms, pref, sigma, c)


def k_series_partial(t, nterms, sigma, c):
    t = np.ascontiguousarray(t, dtype=np.float64)
    nterms = np.ascontiguousarray(nterms, dtype=np.int64)
    return _k_series_partial(t, nterms, sigma, c)
