"""Named invariant suites with measured residuals.

Each suite returns a list of ``CheckResult``; the CLI ``check`` subcommand
prints one line per result and exits nonzero on any failure, and the test
suite asserts the same results criterion by criterion.  Exact-arithmetic
checks report the residual as the string "exact".

Everything here is deterministic: random sample points come from fixed-seed
generators and the eigenvalue extraction uses a fixed start vector.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import mellin, padic
from ._tables import EULER_GAMMA
from .characters import complex_component, ramified, real_even, real_odd, unramified
from .exactscalar import ExactScalar
from .gamma_spectral import (
    gamma_factor,
    h_line_series,
    k_line_series,
    minimum_h,
    spectral_h,
    spectral_k,
    spectral_kn,
    sup_abs_k,
)
from .specfun import digamma, polygamma

__all__ = ["CheckResult", "run_suite", "SUITE_NAMES", "standard_bumps"]

SUITE_NAMES = ("specfun", "gamma", "padic", "mellin")


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    residual: float | str
    tolerance: float | str


def _result(suite, name, residual, tol):
    return CheckResult(suite, name, bool(residual <= tol), float(residual), float(tol))


def _exact(suite, name, ok):
    return CheckResult(suite, name, bool(ok), "exact" if ok else "broken", "exact")


def _archimedean_components():
    return [real_even(), real_odd()] + [complex_component(n) for n in range(-8, 9)]


def _strip_points(rng, count):
    return rng.uniform(0.05, 0.95, count) + 1j * rng.uniform(-20.0, 20.0, count)


# ---------------------------------------------------------------------------
# specfun
# ---------------------------------------------------------------------------


def digamma_series_oracle(s, terms=200_000):
    """Direct partial sums of the defining series with an integral tail.

    Independent of the asymptotic evaluation path: sums
    -gamma - 1/s - sum_{j<=J} (1/(j+s) - 1/j) and closes the tail with
    log(1+s/J) and two Euler-Maclaurin corrections.
    """
    s = complex(s)
    j = np.arange(1, terms + 1, dtype=np.float64)
    partial = np.sum(1.0 / (j + s) - 1.0 / j)
    J = float(terms)
    f = lambda x: 1.0 / (x + s) - 1.0 / x
    fp = lambda x: -1.0 / (x + s) ** 2 + 1.0 / x**2
    tail = -np.log(1.0 + s / (J + 1)) + 0.5 * f(J + 1) - fp(J + 1) / 12.0
    return -EULER_GAMMA - 1.0 / s - (partial + tail)


def suite_specfun():
    rng = np.random.default_rng(20231201)
    out = []

    s = rng.uniform(0.05, 20.0, 200) + 1j * rng.uniform(-50.0, 50.0, 200)
    res = np.max(np.abs(digamma(s + 1) - digamma(s) - 1.0 / s))
    out.append(_result("specfun", "digamma recurrence", res, 1e-12))

    worst = 0.0
    for n in range(1, 6):
        pts = rng.uniform(0.3, 15.0, 40) + 1j * rng.uniform(-30.0, 30.0, 40)
        lhs = polygamma(n, pts + 1) - polygamma(n, pts)
        rhs = (-1.0) ** n * math.factorial(n) * pts ** (-(n + 1))
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    out.append(_result("specfun", "differentiated recurrence", worst, 1e-11))

    pts = rng.uniform(0.1, 18.0, 100) + 1j * rng.uniform(-40.0, 40.0, 100)
    res = np.max(np.abs(digamma(np.conj(pts)) - np.conj(digamma(pts))))
    out.append(_result("specfun", "conjugation symmetry", res, 1e-13))

    h = 1e-4
    pts = rng.uniform(0.5, 10.0, 50) + 1j * rng.uniform(-10.0, 10.0, 50)
    fd = (digamma(pts + h) - digamma(pts - h)) / (2 * h)
    res = np.max(np.abs(fd - polygamma(1, pts)))
    out.append(_result("specfun", "finite-difference consistency", res, 1e-6))

    worst = 0.0
    for _ in range(20):
        z = complex(rng.uniform(0.2, 10.0), rng.uniform(-10.0, 10.0))
        worst = max(worst, abs(digamma(z) - digamma_series_oracle(z)))
    out.append(_result("specfun", "series-oracle equivalence", worst, 1e-10))
    return out


# ---------------------------------------------------------------------------
# gamma
# ---------------------------------------------------------------------------


def _all_components():
    return _archimedean_components() + [unramified(q) for q in (2.0, 3.0, 5.0)]


def suite_gamma():
    rng = np.random.default_rng(19981212)
    out = []

    pts = _strip_points(rng, 100)
    worst = 0.0
    for chi in _all_components():
        vals = gamma_factor(chi, pts) * gamma_factor(chi.inverse(), 1.0 - pts)
        worst = max(worst, float(np.max(np.abs(vals - chi.sign_at_minus_one()))))
    out.append(_result("gamma", "functional equation", worst, 1e-10))

    t = np.linspace(-50.0, 50.0, 1001)
    worst = 0.0
    for chi in _all_components():
        worst = max(
            worst, float(np.max(np.abs(np.abs(gamma_factor(chi, 0.5 + 1j * t)) - 1.0)))
        )
    out.append(_result("gamma", "unit modulus on the line", worst, 1e-10))

    worst = 0.0
    pts = _strip_points(rng, 25)
    for q in (2.0, 3.0, 5.0):
        chi = unramified(q)
        period = 2j * math.pi / math.log(q)
        worst = max(
            worst,
            float(np.max(np.abs(gamma_factor(chi, pts + period) - gamma_factor(chi, pts)))),
        )
    out.append(_result("gamma", "finite-place periodicity", worst, 1e-10))

    pts = _strip_points(rng, 40)
    worst_h = worst_k = 0.0
    for chi in _all_components():
        h1 = spectral_h(chi, pts)
        worst_h = max(
            worst_h,
            float(np.max(np.abs(h1 - spectral_h(chi.inverse(), 1.0 - pts)))),
            float(np.max(np.abs(np.conj(h1) - spectral_h(chi.inverse(), np.conj(pts))))),
            float(np.max(np.abs(spectral_h(chi, 0.5 + 1j * np.linspace(-9, 9, 41)).imag))),
        )
        k1 = spectral_k(chi, pts)
        worst_k = max(
            worst_k,
            float(np.max(np.abs(k1 + spectral_k(chi.inverse(), 1.0 - pts)))),
            float(np.max(np.abs(spectral_k(chi, 0.5 + 1j * np.linspace(-9, 9, 41)).imag))),
        )
    out.append(_result("gamma", "H symmetries", worst_h, 1e-10))
    out.append(_result("gamma", "K antisymmetries", worst_k, 1e-10))

    tg = np.linspace(-30.0, 30.0, 121)
    worst = 0.0
    for chi in _archimedean_components():
        worst = max(
            worst,
            float(np.max(np.abs(h_line_series(chi, tg) - spectral_h(chi, 0.5 + 1j * tg).real))),
            float(np.max(np.abs(k_line_series(chi, tg) - spectral_k(chi, 0.5 + 1j * tg).real))),
        )
    out.append(_result("gamma", "dual-path line series", worst, 1e-8))

    tg = np.linspace(0.0, 40.0, 161)
    worst = 0.0
    for chi in _archimedean_components():
        h = spectral_h(chi, 0.5 + 1j * tg).real
        mono = float(np.max(np.maximum(h[:-1] - h[1:], 0.0)))
        even = float(
            np.max(np.abs(spectral_h(chi, 0.5 + 1j * tg) - spectral_h(chi, 0.5 - 1j * tg)))
        )
        below = float(np.max(np.maximum(minimum_h(chi) - h, 0.0)))
        worst = max(worst, mono, even, below)
    out.append(_result("gamma", "h even, nondecreasing, above minimum", worst, 1e-12))

    worst = 0.0
    for chi in [real_even(), real_odd()] + [complex_component(n) for n in range(0, 9)]:
        res = abs(spectral_h(chi, 0.5).real - minimum_h(chi))
        worst = max(worst, res)
    out.append(_result("gamma", "minima closed forms", worst, 1e-12))

    tg = np.linspace(-25.0, 25.0, 101)
    worst = 0.0
    for n in range(0, 7):
        a = np.abs(spectral_k(complex_component(n + 2), 0.5 + 1j * tg))
        b = np.abs(spectral_k(complex_component(n), 0.5 + 1j * tg))
        worst = max(worst, float(np.max(a - b)))
    out.append(_result("gamma", "dominance across complex components", worst, 1e-14))

    t = np.geomspace(10.0, 1e4, 200)
    kt = np.abs(spectral_k(real_even(), 0.5 + 1j * t) * t)
    bounded = float(np.max(kt))
    out.append(_result("gamma", "commutator decay |k t| bounded", bounded, 2.0))
    out.append(
        _result(
            "gamma",
            "commutator smallness at t = 1000",
            abs(spectral_k(real_even(), 0.5 + 1000j)),
            5e-3,
        )
    )

    sups = [sup_abs_k(chi).value for chi in _all_components() + [ramified(7.0)]]
    out.append(
        _exact("gamma", "finite suprema for all components", all(np.isfinite(sups)))
    )

    worst = max(
        abs(complex(spectral_k(ramified(q), 0.3 + 0.4j))) for q in (2.0, 5.0)
    )
    worst = max(
        worst,
        max(abs(complex(spectral_kn(ramified(3), n, 0.6))) for n in range(1, 5)),
    )
    out.append(_exact("gamma", "ramified commutators vanish", worst == 0.0))
    return out


# ---------------------------------------------------------------------------
# padic
# ---------------------------------------------------------------------------


def suite_padic():
    out = []
    rng = np.random.default_rng(5)

    # scalar ring is a ring under numeric evaluation
    def rand_scalar():
        return ExactScalar(
            (
                int(rng.integers(0, 3)),
                int(rng.integers(-4, 5)),
                Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 7))),
                Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 7))),
            )
            for _ in range(3)
        )

    worst = 0.0
    for q in (2.0, 3.0):
        for _ in range(100):
            a, b = rand_scalar(), rand_scalar()
            va, vb = a.evaluate(q), b.evaluate(q)
            worst = max(
                worst,
                abs((a * b).evaluate(q) - va * vb) / max(1.0, abs(va * vb)),
                abs((a + b).evaluate(q) - (va + vb)) / max(1.0, abs(va + vb)),
            )
    out.append(_result("padic", "evaluation is a ring homomorphism", worst, 1e-12))

    # matrix elements: entry (j, k) is -i (log q)^2 (k - j) q^(-|k-j|/2)
    ok = True
    for m in range(-20, 21):
        kj = -m  # k - j at band offset m = j - k
        if m == 0:
            expected = ExactScalar()
        else:
            expected = ExactScalar.term(re=0, im=-kj, a=2, b=-abs(kj))
        ok &= padic.band_coefficient(padic.KIND_K, m) == expected
    out.append(_exact("padic", "commutator band matches matrix elements", ok))

    ok = True
    for kind in (padic.KIND_H, padic.KIND_K):
        for m in range(-20, 21):
            if m == 0:
                continue
            lhs = padic.band_coefficient(kind, m)
            rhs = ExactScalar.term(b=-m) * padic.theta_value(kind, -m).conjugate()
            ok &= lhs == rhs
    out.append(_exact("padic", "bands from sphere integration", ok))

    minus_i = ExactScalar.term(re=0, im=-1)
    ok = True
    for q in (2.0, 3.0, 5.0):
        h = padic.build_truncation(padic.KIND_H, q, 21)
        k = padic.build_truncation(padic.KIND_K, q, 21)
        ok &= padic.bracket_with_A(h).scale(minus_i).entries == k.entries
    out.append(_exact("padic", "K equals -i [A, H]", ok))

    ok = True
    for order in range(0, 5):
        bn = padic.binomial_kn(2.0, order, 32)
        ref = padic.build_truncation(
            padic.KIND_H if order == 0 else padic.kind_kn(order), 2.0, 32
        )
        ok &= bn.interior_equals(ref, order)
    out.append(_exact("padic", "binomial expansion interior equality", ok))

    h = padic.build_truncation(padic.KIND_H, 2.0, 12)
    k = padic.build_truncation(padic.KIND_K, 2.0, 12)
    k2 = padic.build_truncation(padic.kind_kn(2), 2.0, 12)
    k3 = padic.build_truncation(padic.kind_kn(3), 2.0, 12)
    ok = (
        padic.inversion_conjugate(h).entries == h.entries
        and padic.inversion_conjugate(k).entries == k.scale(-1).entries
        and padic.inversion_conjugate(k2).entries == k2.entries
        and padic.inversion_conjugate(k3).entries == k3.scale(-1).entries
    )
    out.append(_exact("padic", "inversion conjugation signs", ok))

    ok = h.is_toeplitz() and k.is_toeplitz() and k2.is_toeplitz()
    ok &= h.is_hermitian() and k.is_hermitian()
    ok &= all(not k.entry(j, j) for j in range(-12, 13))
    ok &= all(
        k.entry(j, i).terms[0][2] == 0
        for j in range(-12, 13)
        for i in range(-12, 13)
        if j != i
    )
    out.append(_exact("padic", "Toeplitz and Hermitian structure", ok))

    thetas = np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False)
    worst = 0.0
    for q in (2.0, 3.0):
        for kind in (padic.KIND_H, padic.KIND_K, padic.kind_kn(2), padic.kind_kn(3)):
            band = {
                m: padic.band_coefficient(kind, m).evaluate(q)
                for m in range(-200, 201)
                if m
            }
            for th in thetas:
                series = sum(c * np.exp(1j * m * th) for m, c in band.items())
                worst = max(worst, abs(series - padic.symbol(kind, q, th)))
    out.append(_result("padic", "band Fourier series matches symbol", worst, 1e-10))

    taus = np.linspace(-3.0, 3.0, 25)
    worst = 0.0
    for q in (2.0, 3.0, 5.0):
        chi = unramified(q)
        for tau in taus:
            worst = max(
                worst,
                abs(
                    padic.symbol(padic.KIND_K, q, tau * math.log(q))
                    - spectral_k(chi, 0.5 + 1j * tau)
                ),
            )
    out.append(_result("padic", "symbol pins the line orientation", worst, 1e-10))

    lo_s, hi_s = padic.symbol_range(padic.KIND_K, 2.0)
    gaps = []
    extremes = {}
    for M in (32, 64, 128, 256):
        lo, hi = padic.extreme_eigenvalues(
            padic.build_truncation(padic.KIND_K, 2.0, M), 1e-10
        )
        extremes[M] = (lo, hi)
        gaps.append(hi_s - hi)
    lo, hi = extremes[256]
    inside = max(lo_s - lo, hi - hi_s)
    out.append(_result("padic", "truncation spectra inside symbol range", inside, 1e-8))
    worst_gap = float(np.max(np.diff(gaps)))
    out.append(
        _result("padic", "Szego convergence toward the endpoints", worst_gap, 1e-12)
    )

    lo3, hi3 = padic.extreme_eigenvalues(
        padic.build_truncation(padic.KIND_H, 3.0, 256), 1e-10
    )
    lo3_s, hi3_s = padic.symbol_range(padic.KIND_H, 3.0)
    out.append(
        _result("padic", "conductor truncation below symbol max", hi3 - hi3_s, 1e-8)
    )

    q = 1e4
    _, hi_big = padic.symbol_range(padic.KIND_K, q)
    lead = 2.0 * math.log(q) ** 2 / math.sqrt(q)
    out.append(
        _result("padic", "large-q supremum near leading mode", abs(hi_big - lead) / lead, 1e-2)
    )
    return out


# ---------------------------------------------------------------------------
# mellin
# ---------------------------------------------------------------------------


def _bump_radial(r):
    out = np.zeros_like(r)
    m = np.abs(r - 3.0) < 1.0
    out[m] = np.exp(-(((r[m] - 3.0) / 0.2) ** 2))
    return out


def standard_bumps(grid=None):
    """The three-bump suite: even, odd and mixed, supported in 2 < |y| < 4."""
    grid = grid or mellin.DEFAULT_GRID
    y = grid.points()
    b = _bump_radial(np.abs(y))
    return {
        "even": mellin.SampledLineFunction(grid, b),
        "odd": mellin.SampledLineFunction(grid, np.sign(y) * b),
        "mixed": mellin.SampledLineFunction(grid, np.where(y > 0, b, 0.0)),
    }


def _profile_distance(a, b):
    comps = {p.component for p in a.profiles} | {p.component for p in b.profiles}
    num = den = 0.0
    for comp in comps:
        pa, pb = a.profile(comp), b.profile(comp)
        va = pa.values if pa is not None else 0.0
        vb = pb.values if pb is not None else 0.0
        num += float(np.linalg.norm(va - vb) ** 2)
        den += float(np.linalg.norm(vb) ** 2)
    return math.sqrt(num / den)


def suite_mellin():
    out = []
    grid = mellin.DEFAULT_GRID
    bumps = standard_bumps(grid)

    worst = 0.0
    for f in bumps.values():
        back = mellin.from_multiplicative(mellin.to_multiplicative(f), grid)
        worst = max(
            worst,
            float(np.linalg.norm(back.values - f.values) / np.linalg.norm(f.values)),
        )
    out.append(_result("mellin", "round trip", worst, 1e-8))

    f = bumps["mixed"]
    F = mellin.to_multiplicative(f)
    lhs = mellin.to_multiplicative(mellin.direct_apply("A", f))
    rhs = mellin.apply_spectral("A", F)
    out.append(_result("mellin", "A transports to (1/i) d/dtau", _profile_distance(lhs, rhs), 1e-6))

    FF = mellin.apply_spectral("fourier", F)
    out.append(
        _result(
            "mellin",
            "spectral Fourier map is unitary",
            abs(FF.norm() - F.norm()) / F.norm(),
            1e-8,
        )
    )
    FF2 = mellin.apply_spectral("fourier", FF)
    worst = 0.0
    for comp, sign in ((real_even(), 1.0), (real_odd(), -1.0)):
        pa, pb = FF2.profile(comp), F.profile(comp)
        worst = max(
            worst,
            float(
                np.linalg.norm(pa.values - sign * pb.values) / np.linalg.norm(pb.values)
            ),
        )
    out.append(_result("mellin", "Fourier squared is the parity", worst, 1e-8))

    worst_h = worst_k = 0.0
    for f in bumps.values():
        F = mellin.to_multiplicative(f)
        dh = mellin.direct_apply("H", f)
        sh = mellin.from_multiplicative(mellin.apply_spectral("H", F), grid)
        worst_h = max(
            worst_h,
            float(np.linalg.norm(sh.values - dh.values) / np.linalg.norm(dh.values)),
        )
        dk = mellin.direct_apply("K", f)
        sk = mellin.from_multiplicative(mellin.apply_spectral("K", F), grid)
        worst_k = max(
            worst_k,
            float(np.linalg.norm(sk.values - dk.values) / np.linalg.norm(dk.values)),
        )
    out.append(_result("mellin", "direct vs spectral conductor", worst_h, 5e-3))
    out.append(_result("mellin", "direct vs spectral commutator", worst_k, 1e-2))

    f = bumps["even"]
    c = mellin.decay_bound(f)
    bf = mellin.direct_apply("B", f)
    y = grid.points()
    worst = 0.0
    for target in (16.0, 32.0, 48.0):
        i = int(np.argmin(np.abs(y - target)))
        worst = max(worst, abs(y[i] * bf.values[i]) / (1.5 * c))
    out.append(_result("mellin", "convolution tail bound C/|y|", worst, 1.0))

    grid2 = mellin.LineGrid(grid.n, 2 * grid.Y)
    f2 = standard_bumps(grid2)["even"]
    c2 = mellin.decay_bound(f2)
    ratio = max(c2 / c, c / c2)
    out.append(_result("mellin", "decay bound stable under domain doubling", ratio, 1.5))

    scaled = mellin.SampledLineFunction(grid, 2.0 * f.values)
    out.append(
        _result(
            "mellin",
            "decay bound linear in the input",
            abs(mellin.decay_bound(scaled) - 2.0 * c) / (2.0 * c),
            1e-12,
        )
    )
    return out


_SUITES = {
    "specfun": suite_specfun,
    "gamma": suite_gamma,
    "padic": suite_padic,
    "mellin": suite_mellin,
}


def run_suite(name):
    """Run one suite ("specfun" | "gamma" | "padic" | "mellin") or "all"."""
    if name == "all":
        results = []
        for suite in SUITE_NAMES:
            results.extend(_SUITES[suite]())
        return results
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return _SUITES[name]()
