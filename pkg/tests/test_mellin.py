import math

import numpy as np
import pytest

from localspec.characters import real_even, real_odd
from localspec.mellin import (
    BoundaryDecayError,
    ComponentProfile,
    DEFAULT_GRID,
    LineGrid,
    MultiplicativeFunction,
    NX,
    SampledLineFunction,
    TAU_GRID,
    apply_spectral,
    decay_bound,
    direct_apply,
    from_multiplicative,
    load_line_function,
    load_profile,
    save_line_function,
    save_profile,
    to_multiplicative,
)
import localspec.mellin as mellin_mod


def bump_values(r, sigma=0.2):
    out = np.zeros_like(r)
    m = np.abs(r - 3.0) < 1.0
    out[m] = np.exp(-(((r[m] - 3.0) / sigma) ** 2))
    return out


@pytest.fixture(scope="module")
def grid():
    return DEFAULT_GRID


@pytest.fixture(scope="module")
def bumps(grid):
    y = grid.points()
    b = bump_values(np.abs(y))
    return {
        "even": SampledLineFunction(grid, b),
        "odd": SampledLineFunction(grid, np.sign(y) * b),
        "mixed": SampledLineFunction(grid, np.where(y > 0, b, 0.0)),
    }


def test_line_grid_validation():
    with pytest.raises(ValueError):
        LineGrid(2**11, 64.0)
    with pytest.raises(ValueError):
        LineGrid(3000, 64.0)
    g = LineGrid(2**12, 8.0)
    y = g.points()
    assert y[g.n // 2] == 0.0
    assert abs(y[0] + 8.0) < 1e-15
    assert abs(y[1] - y[0] - g.spacing) < 1e-18


def test_dft_pair_is_exact_inverse():
    rng = np.random.default_rng(11)
    w = rng.normal(size=NX) + 1j * rng.normal(size=NX)
    back = mellin_mod._x_values_from_profile(mellin_mod._profile_values_from_x(w))
    assert float(np.max(np.abs(back - w))) < 1e-12


def test_forward_transform_against_quadrature():
    # profile values must match direct quadrature of the defining integral
    grid = LineGrid(2**12, 16.0)
    y = grid.points()
    f = SampledLineFunction(grid, bump_values(np.abs(y)))
    F = to_multiplicative(f).profile(real_even())
    x = mellin_mod.X_GRID
    w = np.exp(0.5 * x) * bump_values(np.exp(x))
    for i in (NX // 2 - 40, NX // 2, NX // 2 + 77):
        direct = np.sum(w * np.exp(1j * TAU_GRID[i] * x)) * mellin_mod.DX
        assert abs(F.values[i] - direct) < 1e-10


def test_component_splitting(bumps):
    Fe = to_multiplicative(bumps["even"])
    assert [p.component for p in Fe.profiles] == [real_even()]
    Fo = to_multiplicative(bumps["odd"])
    assert [p.component for p in Fo.profiles] == [real_odd()]
    Fm = to_multiplicative(bumps["mixed"])
    assert {p.component for p in Fm.profiles} == {real_even(), real_odd()}


def test_round_trip(bumps, grid):
    for f in bumps.values():
        back = from_multiplicative(to_multiplicative(f), grid)
        rel = np.linalg.norm(back.values - f.values) / np.linalg.norm(f.values)
        assert rel < 1e-8


def test_zero_profile_gives_zero_function(grid):
    out = from_multiplicative(MultiplicativeFunction(()), grid)
    assert float(np.max(np.abs(out.values))) == 0.0
    zero = SampledLineFunction(grid, np.zeros(grid.n))
    assert to_multiplicative(zero).profiles == ()


def test_narrow_profile_is_windowed_character(grid):
    # Gaussian profile at tau0: reconstruction is |y|^(-1/2 - i tau0) times a
    # log-Gaussian window; checked against direct quadrature of the inverse.
    tau0, width = 3.0, 0.5
    F = ComponentProfile(real_even(), TAU_GRID, np.exp(-(((TAU_GRID - tau0) / width) ** 2)))
    f = from_multiplicative(MultiplicativeFunction((F,)), grid)
    y = grid.points()
    dtau = TAU_GRID[1] - TAU_GRID[0]
    for target in (0.5, 2.0, 17.0):
        i = int(np.argmin(np.abs(y - target)))
        yy = y[i]
        direct = (
            np.sum(F.values * np.exp(-1j * TAU_GRID * math.log(abs(yy))))
            * dtau
            / (2.0 * math.pi)
        ) * abs(yy) ** -0.5
        assert abs(f.values[i] - direct) < 1e-8
        expected_mod = (
            abs(yy) ** -0.5
            * (width / (2.0 * math.sqrt(math.pi)))
            * math.exp(-((width * math.log(abs(yy)) / 2.0) ** 2))
        )
        assert abs(abs(f.values[i]) - expected_mod) < 1e-8


def test_boundary_leakage_rejected(grid):
    bad = SampledLineFunction(grid, np.ones(grid.n))
    with pytest.raises(BoundaryDecayError):
        to_multiplicative(bad)
    leaky = ComponentProfile(real_even(), TAU_GRID, np.ones(NX))
    with pytest.raises(BoundaryDecayError):
        apply_spectral("H", MultiplicativeFunction((leaky,)))


def test_apply_spectral_A_on_gaussian_profile():
    F = ComponentProfile(real_even(), TAU_GRID, np.exp(-TAU_GRID**2))
    out = apply_spectral("A", MultiplicativeFunction((F,)))
    expected = 2j * TAU_GRID * np.exp(-TAU_GRID**2)
    assert float(np.max(np.abs(out.profiles[0].values - expected))) < 1e-10


def test_a_consistency(bumps):
    f = bumps["mixed"]
    F = to_multiplicative(f)
    lhs = to_multiplicative(direct_apply("A", f))
    rhs = apply_spectral("A", F)
    for comp in (real_even(), real_odd()):
        a, b = lhs.profile(comp), rhs.profile(comp)
        rel = np.linalg.norm(a.values - b.values) / np.linalg.norm(b.values)
        assert rel < 1e-6


def test_fourier_square_is_parity(bumps):
    F = to_multiplicative(bumps["mixed"])
    FF = apply_spectral("fourier", F)
    assert abs(FF.norm() - F.norm()) / F.norm() < 1e-8
    FF2 = apply_spectral("fourier", FF)
    for comp, sign in ((real_even(), 1.0), (real_odd(), -1.0)):
        a, b = FF2.profile(comp), F.profile(comp)
        rel = np.linalg.norm(a.values - sign * b.values) / np.linalg.norm(b.values)
        assert rel < 1e-8


def test_k_multiplier_vanishes_at_center(bumps):
    F = to_multiplicative(bumps["even"])
    out = apply_spectral("K", F)
    mid = NX // 2
    assert TAU_GRID[mid] == 0.0
    assert abs(out.profiles[0].values[mid]) < 1e-14


def test_direct_apply_A_and_zero_bin(grid, bumps):
    f = bumps["even"]
    out = direct_apply("A", f)
    y = grid.points()
    i = int(np.argmin(np.abs(y - 3.0)))
    assert abs(out.values[i] - math.log(abs(y[i])) * f.values[i]) < 1e-15
    assert out.values[grid.n // 2] == 0.0  # f(0) = 0, singular bin convention
    assert float(np.max(np.abs(out.values[f.values == 0.0]))) == 0.0


def test_direct_fourier_on_gaussian(grid):
    # internal additive FFT convention: exp(-pi y^2) is self-dual under the
    # kernel exp(+2 pi i x y)
    y = grid.points()
    g = SampledLineFunction(grid, np.exp(-math.pi * y * y))
    n = grid.n
    npad = 8 * n
    gg = np.zeros(npad, dtype=np.complex128)
    lo = (npad - n) // 2
    gg[lo : lo + n] = g.values
    psi = grid.spacing * np.fft.fftshift(np.fft.ifft(np.fft.ifftshift(gg))) * npad
    dxi = 1.0 / (npad * grid.spacing)
    xi = (np.arange(npad) - npad // 2) * dxi
    assert float(np.max(np.abs(psi - np.exp(-math.pi * xi * xi)))) < 1e-10


def test_dual_path_residuals(bumps, grid):
    for f in bumps.values():
        F = to_multiplicative(f)
        dh = direct_apply("H", f)
        sh = from_multiplicative(apply_spectral("H", F), grid)
        rh = np.linalg.norm(sh.values - dh.values) / np.linalg.norm(dh.values)
        assert rh < 5e-3
        dk = direct_apply("K", f)
        sk = from_multiplicative(apply_spectral("K", F), grid)
        rk = np.linalg.norm(sk.values - dk.values) / np.linalg.norm(dk.values)
        assert rk < 1e-2


def test_decay_bound(bumps, grid):
    f = bumps["even"]
    c = decay_bound(f)
    assert math.isfinite(c) and c > 0
    bf = direct_apply("B", f)
    y = grid.points()
    for target in (16.0, 32.0, 48.0):
        i = int(np.argmin(np.abs(y - target)))
        assert abs(bf.values[i]) <= 1.5 * c / abs(y[i])
    assert decay_bound(SampledLineFunction(grid, np.zeros(grid.n))) == 0.0
    doubled = decay_bound(SampledLineFunction(grid, 2.0 * f.values))
    assert abs(doubled - 2.0 * c) < 1e-12 * c
    grid2 = LineGrid(grid.n, 2 * grid.Y)
    f2 = SampledLineFunction(grid2, bump_values(np.abs(grid2.points())))
    c2 = decay_bound(f2)
    assert max(c2 / c, c / c2) < 1.5


def test_io_round_trip(tmp_path, bumps):
    f = bumps["mixed"]
    path = tmp_path / "f.csv"
    save_line_function(f, path)
    g = load_line_function(path)
    assert g.grid == f.grid
    assert float(np.max(np.abs(g.values - f.values))) == 0.0
    p = to_multiplicative(f).profile(real_odd())
    ppath = tmp_path / "p.csv"
    save_profile(p, ppath)
    q = load_profile(ppath)
    assert q.component == p.component
    assert float(np.max(np.abs(q.tau_grid - p.tau_grid))) < 1e-9
    assert float(np.max(np.abs(q.values - p.values))) == 0.0


def test_profile_component_uniqueness():
    a = ComponentProfile(real_even(), TAU_GRID, np.zeros(NX))
    b = ComponentProfile(real_even(), TAU_GRID, np.ones(NX))
    with pytest.raises(ValueError):
        MultiplicativeFunction((a, b))


def test_unknown_kinds_rejected(bumps):
    with pytest.raises(ValueError):
        direct_apply("X", bumps["even"])
    with pytest.raises(ValueError):
        apply_spectral("X", to_multiplicative(bumps["even"]))
    with pytest.raises(ValueError):
        apply_spectral("KN", to_multiplicative(bumps["even"]))  # order missing
