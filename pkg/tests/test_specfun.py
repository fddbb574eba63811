import math

import numpy as np
import pytest

from localspec.specfun import PoleError, digamma, log_gamma, polygamma

import oracles

EULER_GAMMA = 0.5772156649015328606065


def test_log_gamma_at_one_and_half():
    assert abs(log_gamma(1.0)) < 1e-13
    assert abs(log_gamma(0.5) - 0.5 * math.log(math.pi)) < 1e-13


def test_log_gamma_factorial_oracle():
    # Gamma(5) = 4! through the recurrence product, not through Gamma code.
    assert abs(log_gamma(5.0) - oracles.log_factorial(5)) < 1e-13
    assert abs(log_gamma(5.0) - math.log(24.0)) < 1e-12
    for n in (2, 3, 7, 20, 40):
        assert abs(log_gamma(float(n)) - oracles.log_factorial(n)) < 1e-11 * max(
            1.0, abs(oracles.log_factorial(n))
        )


def test_digamma_at_one_against_partial_sums():
    oracle = oracles.digamma_partial_sum(1.0, terms=10**7)
    assert abs(oracle - (-EULER_GAMMA)) < 1e-13  # oracle self-check
    assert abs(digamma(1.0) - oracle) < 1e-12
    assert abs(digamma(1.0) - (-0.5772156649015329)) < 1e-12


def test_digamma_recurrence_at_two():
    assert abs(digamma(2.0) - (1.0 - EULER_GAMMA)) < 1e-13


def test_digamma_quarter_closed_form():
    expected = -EULER_GAMMA - math.pi / 2.0 - 3.0 * math.log(2.0)
    assert abs(digamma(0.25) - expected) < 1e-12
    assert abs(expected - (-4.2274535333762654)) < 1e-12


def test_polygamma_values():
    assert abs(polygamma(1, 1.0) - oracles.polygamma_direct_sum(1, 1.0)) < 1e-11
    assert abs(polygamma(1, 1.0) - math.pi**2 / 6.0) < 1e-12
    assert abs(polygamma(1, 2.0) - (math.pi**2 / 6.0 - 1.0)) < 1e-12
    zeta3 = 1.2020569031595942854
    assert abs(polygamma(2, 1.0) - oracles.polygamma_direct_sum(2, 1.0)) < 1e-11
    assert abs(polygamma(2, 1.0) - (-2.0 * zeta3)) < 1e-11


def test_recurrence_property():
    rng = np.random.default_rng(42)
    s = rng.uniform(0.02, 20.0, 200) + 1j * rng.uniform(-50.0, 50.0, 200)
    res = np.abs(digamma(s + 1) - digamma(s) - 1.0 / s)
    assert float(np.max(res)) < 1e-12


def test_differentiated_recurrence_property():
    rng = np.random.default_rng(43)
    for n in range(1, 6):
        s = rng.uniform(0.2, 15.0, 50) + 1j * rng.uniform(-30.0, 30.0, 50)
        lhs = polygamma(n, s + 1) - polygamma(n, s)
        rhs = (-1.0) ** n * math.factorial(n) * s ** (-(n + 1))
        assert float(np.max(np.abs(lhs - rhs))) < 1e-11


def test_conjugation_property():
    rng = np.random.default_rng(44)
    s = rng.uniform(0.1, 18.0, 120) + 1j * rng.uniform(-40.0, 40.0, 120)
    res = np.abs(digamma(np.conj(s)) - np.conj(digamma(s)))
    assert float(np.max(res)) < 1e-13


def test_finite_difference_consistency():
    rng = np.random.default_rng(45)
    h = 1e-4
    s = rng.uniform(0.5, 10.0, 60) + 1j * rng.uniform(-10.0, 10.0, 60)
    fd = (digamma(s + h) - digamma(s - h)) / (2.0 * h)
    assert float(np.max(np.abs(fd - polygamma(1, s)))) < 1e-6


def test_series_oracle_equivalence():
    rng = np.random.default_rng(46)
    for _ in range(20):
        z = complex(rng.uniform(0.2, 10.0), rng.uniform(-10.0, 10.0))
        assert abs(digamma(z) - oracles.digamma_partial_sum(z, terms=10**6)) < 1e-10


def test_large_argument_accuracy():
    import mpmath as mp

    mp.mp.dps = 30
    for z in (9500.0 + 3000.0j, -9999.3 + 2.0j, 0.1 + 9000.0j):
        ours = log_gamma(z)
        ref = complex(mp.loggamma(mp.mpc(z)))
        assert abs(ours - ref) <= 1e-12 * max(1.0, abs(ref))
        assert abs(digamma(z) - complex(mp.digamma(mp.mpc(z)))) <= 1e-12 * abs(
            complex(mp.digamma(mp.mpc(z)))
        )


def test_exp_of_log_gamma_is_gamma():
    import mpmath as mp

    mp.mp.dps = 30
    for z in (0.3 + 0.4j, 2.5 - 3.0j, -1.5 + 2.0j):
        assert abs(np.exp(log_gamma(z)) - complex(mp.gamma(mp.mpc(z)))) < 1e-12 * abs(
            complex(mp.gamma(mp.mpc(z)))
        )


def test_principal_branch_continuity():
    # principal branch: imag part continuous across the upper half plane,
    # conjugate-symmetric, and equal to log|Gamma| on the positive axis
    z = -4.5 + 1e-3j
    assert abs(log_gamma(np.conj(z)) - np.conj(log_gamma(z))) < 1e-12
    vals = log_gamma(-4.5 + 1j * np.geomspace(1e-6, 1.0, 50))
    assert float(np.max(np.abs(np.diff(vals.imag)))) < 1.0  # no 2 pi jumps


def test_pole_errors():
    for bad in (0.0, -1.0, -2.0, -7.0, 0.0 + 0.0j, -3.0 + 1e-12j):
        with pytest.raises(PoleError):
            digamma(bad)
        with pytest.raises(PoleError):
            log_gamma(bad)
        with pytest.raises(PoleError):
            polygamma(1, bad)


def test_non_finite_rejected():
    with pytest.raises(ValueError):
        digamma(float("nan"))
    with pytest.raises(ValueError):
        log_gamma(complex(float("inf"), 0.0))


def test_polygamma_order_validation():
    with pytest.raises(ValueError):
        polygamma(0, 1.0)
    with pytest.raises(ValueError):
        polygamma(-2, 1.0)


def test_array_and_scalar_api():
    s = np.array([1.0 + 1j, 2.0 - 3j, 0.25])
    arr = digamma(s)
    assert arr.shape == s.shape
    assert isinstance(digamma(1.0 + 1j), complex)
    assert arr[0] == digamma(1.0 + 1j)


def test_backend_parity():
    from localspec import _kernels_numpy

    numba_kernels = pytest.importorskip("localspec._kernels_numba")
    rng = np.random.default_rng(47)
    z = rng.uniform(0.05, 30.0, 500) + 1j * rng.uniform(-80.0, 80.0, 500)
    for fn in ("digamma", "loggamma"):
        a = getattr(_kernels_numpy, fn)(z)
        b = getattr(numba_kernels, fn)(z)
        assert float(np.max(np.abs(a - b))) < 1e-12
    for n in (1, 2, 5):
        a = _kernels_numpy.polygamma(n, z)
        b = numba_kernels.polygamma(n, z)
        assert float(np.max(np.abs((a - b) / np.abs(a)))) < 1e-12
    t = np.linspace(0.0, 120.0, 300)
    nterms = np.maximum(64, np.ceil(4.0 * (np.abs(t) + 1.5))).astype(np.int64)
    a = _kernels_numpy.h_series_partial(t, nterms, 1.0, 2.0, 1.5)
    b = numba_kernels.h_series_partial(t, nterms, 1.0, 2.0, 1.5)
    assert float(np.max(np.abs(a - b))) < 1e-12
    a = _kernels_numpy.k_series_partial(t, nterms, 2.0, 1.5)
    b = numba_kernels.k_series_partial(t, nterms, 2.0, 1.5)
    assert float(np.max(np.abs(a - b))) < 1e-12
