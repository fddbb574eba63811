"""Multiplicative spectral representation at the real place, with a direct
additive-FFT oracle.

A sampled function on the symmetric real-line grid splits into even and odd
parts (the two character components of the real place).  Each part is moved
to the multiplicative line by u = +-exp(x) with the unitary weight |u|^(1/2),
and its profile is

    F(tau) = integral w(x) exp(+i tau x) dx,   w(x) = exp(x/2) f(+-exp(x)),

computed by FFT on a fixed logarithmic grid.  In this picture the
log-modulus operator A acts as (1/i) d/dtau (multiplication by x on the
x-side), the additive Fourier transform acts by
F(tau) |-> Gamma(chi, 1/2 + i tau) F(tau reversed) on each component, and
the conductor/commutator operators act by multiplication with their
critical-line multipliers.

The direct oracle applies the same operators on the additive grid: A is
multiplication by log|y|, B is an additive FFT (kernel exp(+2pi i x y)
forward), multiplication by log|x|, and the inverse FFT.  Conventions pinned
here, bit-exactly:

* additive grid: y_k = (k - n/2) (2Y/n), k = 0..n-1; defaults n = 2^16,
  Y = 64; the dual x grid has spacing 1/(n_pad (2Y/n)).
* the additive FFT of the oracle zero-pads by 8x before transforming, which
  pushes the wrap-around of the slowly decaying convolution tails out to a
  period of 16 Y.
* singular bin of log|.|: the x = 0 (or y = 0) cell takes the cell-average
  value log(delta/2) - 1 of log over a half-cell of width delta.
* logarithmic grid: x in [-14, 24) with 2^15 points; the tau grid is its
  FFT dual, tau_m = (m - n_x/2) 2 pi / 38.  The tau orientation (sign of the
  exponent) is pinned by the A-consistency check.
* reconstruction assigns the y = 0 bin the cell average
  (2/delta) integral_{x <= log(delta/2)} exp(x/2) w_even(x) dx, matching the
  singular-bin convention of the direct path to second order.

Dual-path tolerances quoted in the checks are calibrated to these defaults.
"""

import json
import math
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import make_interp_spline

from .characters import CharacterComponent, real_even, real_odd
from .gamma_spectral import gamma_factor, spectral_h, spectral_k, spectral_kn

__all__ = [
    "LineGrid",
    "SampledLineFunction",
    "ComponentProfile",
    "MultiplicativeFunction",
    "BoundaryDecayError",
    "DEFAULT_GRID",
    "to_multiplicative",
    "from_multiplicative",
    "apply_spectral",
    "direct_apply",
    "decay_bound",
    "save_line_function",
    "load_line_function",
    "save_profile",
    "load_profile",
]


class BoundaryDecayError(ValueError):
    """Function or profile does not decay at its grid boundary."""


# Logarithmic grid constants (see module docstring).
X_LO = -14.0
X_HI = 24.0
NX = 2**15
DX = (X_HI - X_LO) / NX
X_GRID = X_LO + DX * np.arange(NX)
DTAU = 2.0 * math.pi / (X_HI - X_LO)
TAU_GRID = DTAU * (np.arange(NX) - NX // 2)

_PAD = 8
_BOUNDARY_BINS = 8
_BOUNDARY_RTOL = 1e-10


@dataclass(frozen=True)
class LineGrid:
    n: int
    Y: float

    def __post_init__(self):
        if self.n < 2**12 or self.n & (self.n - 1):
            raise ValueError("n must be a power of two, at least 2^12")
        if not self.Y > 0:
            raise ValueError("Y must be positive")

    @property
    def spacing(self):
        return 2.0 * self.Y / self.n

    def points(self):
        return (np.arange(self.n) - self.n // 2) * self.spacing


DEFAULT_GRID = LineGrid(2**16, 64.0)


@dataclass(frozen=True)
class SampledLineFunction:
    grid: LineGrid
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.complex128)
        if v.shape != (self.grid.n,):
            raise ValueError("values must match the grid size")
        if not np.all(np.isfinite(v)):
            raise ValueError("non-finite sample values")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def norm(self):
        return math.sqrt(self.grid.spacing * float(np.sum(np.abs(self.values) ** 2)))


@dataclass(frozen=True)
class ComponentProfile:
    component: CharacterComponent
    tau_grid: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        if self.component.place.kind != "real":
            raise ValueError("profiles are supported on the two real components")
        t = np.asarray(self.tau_grid, dtype=np.float64)
        v = np.asarray(self.values, dtype=np.complex128)
        if t.ndim != 1 or t.shape != v.shape:
            raise ValueError("tau grid and values must be matching 1-d arrays")
        steps = np.diff(t)
        if t.size > 1 and not np.allclose(steps, steps[0], rtol=0, atol=1e-12):
            raise ValueError("tau grid must be uniform")
        t.setflags(write=False)
        v.setflags(write=False)
        object.__setattr__(self, "tau_grid", t)
        object.__setattr__(self, "values", v)

    def boundary_decay_ok(self):
        peak = float(np.max(np.abs(self.values)))
        if peak == 0.0:
            return True
        edge = max(
            float(np.max(np.abs(self.values[:_BOUNDARY_BINS]))),
            float(np.max(np.abs(self.values[-_BOUNDARY_BINS:]))),
        )
        return edge < _BOUNDARY_RTOL * peak

    def norm(self):
        dtau = float(self.tau_grid[1] - self.tau_grid[0])
        return math.sqrt(dtau / (2 * math.pi) * float(np.sum(np.abs(self.values) ** 2)))


@dataclass(frozen=True)
class MultiplicativeFunction:
    profiles: tuple

    def __post_init__(self):
        comps = [p.component for p in self.profiles]
        if len(set(comps)) != len(comps):
            raise ValueError("at most one profile per component")
        object.__setattr__(self, "profiles", tuple(self.profiles))

    def profile(self, component):
        for p in self.profiles:
            if p.component == component:
                return p
        return None

    def norm(self):
        return math.sqrt(sum(p.norm() ** 2 for p in self.profiles))


def _profile_values_from_x(w):
    """F(tau_m) = dx sum_i w(x_i) exp(+i tau_m x_i) on the canonical grids."""
    alt = np.where(np.arange(NX) % 2 == 0, 1.0, -1.0)
    return DX * np.exp(1j * TAU_GRID * X_LO) * NX * np.fft.ifft(w * alt)


def _x_values_from_profile(vals):
    """Exact inverse of ``_profile_values_from_x``."""
    alt = np.where(np.arange(NX) % 2 == 0, 1.0, -1.0)
    return alt * np.fft.fft(vals * np.exp(-1j * TAU_GRID * X_LO)) / (NX * DX)


def _require_canonical(p):
    if p.tau_grid.shape != TAU_GRID.shape or not np.allclose(
        p.tau_grid, TAU_GRID, rtol=0, atol=1e-9
    ):
        raise ValueError("operation needs profiles on the canonical tau grid")


def to_multiplicative(f):
    """Even/odd component profiles of a sampled line function.

    Requires f to decay at the grid boundary (relative 1e-10 over the outer
    bins); raises ``BoundaryDecayError`` otherwise.  Components whose profile
    is numerically absent (relative 1e-14) are dropped.
    """
    vals = f.values
    peak = float(np.max(np.abs(vals)))
    if peak > 0.0:
        edge = max(
            float(np.max(np.abs(vals[:_BOUNDARY_BINS]))),
            float(np.max(np.abs(vals[-_BOUNDARY_BINS:]))),
        )
        if edge >= _BOUNDARY_RTOL * peak:
            raise BoundaryDecayError("input does not decay at the grid boundary")
    y = f.grid.points()
    spline = make_interp_spline(y, vals, k=5)
    u = np.exp(X_GRID)
    ymax = y[-1]
    inside = u <= ymax
    fpos = np.zeros(NX, dtype=np.complex128)
    fneg = np.zeros(NX, dtype=np.complex128)
    fpos[inside] = spline(u[inside])
    fneg[inside] = spline(-u[inside])
    weight = np.exp(0.5 * X_GRID)
    w_even = weight * 0.5 * (fpos + fneg)
    w_odd = weight * 0.5 * (fpos - fneg)
    profiles = []
    scale = max(peak, 1e-300)
    for comp, w in ((real_even(), w_even), (real_odd(), w_odd)):
        F = _profile_values_from_x(w)
        if float(np.max(np.abs(F))) > 1e-14 * scale:
            profiles.append(ComponentProfile(comp, TAU_GRID, F))
    return MultiplicativeFunction(tuple(profiles))


def from_multiplicative(F, grid=None):
    """Sampled line function reconstructed from component profiles.

    The y = 0 bin takes the cell average of the reconstruction over its cell
    (only the even component contributes)."""
    grid = grid or DEFAULT_GRID
    zeros = np.zeros(NX, dtype=np.complex128)
    pe = F.profile(real_even())
    po = F.profile(real_odd())
    for p in (pe, po):
        if p is not None:
            _require_canonical(p)
    w_even = _x_values_from_profile(pe.values) if pe is not None else zeros
    w_odd = _x_values_from_profile(po.values) if po is not None else zeros
    se = make_interp_spline(X_GRID, w_even, k=5)
    so = make_interp_spline(X_GRID, w_odd, k=5)
    y = grid.points()
    out = np.zeros(grid.n, dtype=np.complex128)
    nz = y != 0.0
    x = np.log(np.abs(y[nz]))
    amp = np.exp(-0.5 * x)
    out[nz] = amp * (se(x) + np.sign(y[nz]) * so(x))
    delta = grid.spacing
    cell = X_GRID <= math.log(delta / 2.0)
    bin_integral = float(np.sum(np.exp(0.5 * X_GRID[cell]) * w_even[cell].real)) * DX
    bin_integral += 1j * float(np.sum(np.exp(0.5 * X_GRID[cell]) * w_even[cell].imag)) * DX
    out[grid.n // 2] = (2.0 / delta) * bin_integral
    return SampledLineFunction(grid, out)


def _check_profiles_decay(F):
    for p in F.profiles:
        if not p.boundary_decay_ok():
            raise BoundaryDecayError(
                "profile does not decay at the tau boundary"
            )


def apply_spectral(kind, F, order=None):
    """Apply an operator on the multiplicative side.

    kind: "A" (spectral derivative (1/i) d/dtau), "fourier"
    (F(chi, tau) -> Gamma(chi, 1/2+i tau) F(conj chi, -tau)), or pointwise
    multiplication by the critical-line multiplier for "H", "K", "KN"
    (the latter takes ``order``).
    """
    _check_profiles_decay(F)
    out = []
    if kind == "A":
        for p in F.profiles:
            _require_canonical(p)
            w = _x_values_from_profile(p.values) * X_GRID
            out.append(ComponentProfile(p.component, p.tau_grid, _profile_values_from_x(w)))
        return MultiplicativeFunction(tuple(out))
    if kind == "fourier":
        for p in F.profiles:
            gam = gamma_factor(p.component, 0.5 + 1j * p.tau_grid)
            flipped = np.roll(p.values[::-1], 1)
            out.append(ComponentProfile(p.component, p.tau_grid, gam * flipped))
        return MultiplicativeFunction(tuple(out))
    if kind in ("H", "K", "KN"):
        for p in F.profiles:
            s = 0.5 + 1j * p.tau_grid
            if kind == "H":
                mult = spectral_h(p.component, s)
            elif kind == "K":
                mult = spectral_k(p.component, s)
            else:
                if order is None:
                    raise ValueError("KN needs an order")
                mult = spectral_kn(p.component, order, s)
            out.append(ComponentProfile(p.component, p.tau_grid, mult * p.values))
        return MultiplicativeFunction(tuple(out))
    raise ValueError(f"unknown spectral kind {kind!r}")


def _log_multiplier(points, spacing):
    m = np.empty_like(points)
    nz = points != 0.0
    m[nz] = np.log(np.abs(points[nz]))
    m[~nz] = math.log(spacing / 2.0) - 1.0
    return m


def _fourier_conjugate_log(f):
    """B f: additive FFT, multiply by log|x|, inverse FFT; 8x zero-padded."""
    n = f.grid.n
    npad = _PAD * n
    delta = f.grid.spacing
    g = np.zeros(npad, dtype=np.complex128)
    lo = (npad - n) // 2
    g[lo : lo + n] = f.values
    psi = delta * np.fft.fftshift(np.fft.ifft(np.fft.ifftshift(g))) * npad
    dxi = 1.0 / (npad * delta)
    xi = (np.arange(npad) - npad // 2) * dxi
    psi *= _log_multiplier(xi, dxi)
    back = dxi * np.fft.fftshift(np.fft.fft(np.fft.ifftshift(psi)))
    return SampledLineFunction(f.grid, back[lo : lo + n])


def direct_apply(kind, f):
    """Apply an operator on the additive grid.

    "A": multiplication by log|y| (cell-average value at the 0 bin);
    "B": the Fourier conjugate of A; "H": A + B; "K": i (B A - A B).
    The commutator path expects f supported away from 0.
    """
    if kind == "A":
        mult = _log_multiplier(f.grid.points(), f.grid.spacing)
        return SampledLineFunction(f.grid, mult * f.values)
    if kind == "B":
        return _fourier_conjugate_log(f)
    if kind == "H":
        a = direct_apply("A", f)
        b = direct_apply("B", f)
        return SampledLineFunction(f.grid, a.values + b.values)
    if kind == "K":
        ba = direct_apply("B", direct_apply("A", f))
        ab = direct_apply("A", direct_apply("B", f))
        return SampledLineFunction(f.grid, 1j * (ba.values - ab.values))
    raise ValueError(f"unknown direct kind {kind!r}")


def decay_bound(f):
    """sup of |y (B f)(y)| over Y/4 <= |y| <= Y/2; finite for smooth
    compactly supported input, and linear in f."""
    bf = _fourier_conjugate_log(f)
    y = f.grid.points()
    band = (np.abs(y) >= f.grid.Y / 4.0) & (np.abs(y) <= f.grid.Y / 2.0)
    return float(np.max(np.abs(y[band] * bf.values[band])))


# ---------------------------------------------------------------------------
# Import/export: JSON header line, then CSV rows ``index,re,im``.
# ---------------------------------------------------------------------------


def _write_rows(fh, values):
    fh.write("index,re,im\n")
    for i, v in enumerate(values):
        fh.write(f"{i},{v.real:.17g},{v.imag:.17g}\n")


def _read_rows(lines, n):
    if lines[0].strip() != "index,re,im":
        raise ValueError("missing CSV header")
    vals = np.zeros(n, dtype=np.complex128)
    for line in lines[1:]:
        if not line.strip():
            continue
        idx, re, im = line.split(",")
        vals[int(idx)] = complex(float(re), float(im))
    return vals


def save_line_function(f, path):
    with open(path, "w") as fh:
        fh.write(json.dumps({"type": "line_function", "n": f.grid.n, "Y": f.grid.Y}))
        fh.write("\n")
        _write_rows(fh, f.values)


def load_line_function(path):
    with open(path) as fh:
        header = json.loads(fh.readline())
        grid = LineGrid(int(header["n"]), float(header["Y"]))
        return SampledLineFunction(grid, _read_rows(fh.read().splitlines(), grid.n))


def save_profile(p, path):
    n = int(p.tau_grid.size)
    header = {
        "type": "component_profile",
        "component": "+" if p.component.label == "even" else "-",
        "n": n,
        "tau_start": float(p.tau_grid[0]),
        # endpoint-derived step: adjacent differences of large tau values
        # would lose ~5e-12 relative precision
        "tau_step": float((p.tau_grid[-1] - p.tau_grid[0]) / (n - 1)),
    }
    with open(path, "w") as fh:
        fh.write(json.dumps(header))
        fh.write("\n")
        _write_rows(fh, p.values)


def load_profile(path):
    with open(path) as fh:
        header = json.loads(fh.readline())
        comp = real_even() if header["component"] == "+" else real_odd()
        n = int(header["n"])
        tau = header["tau_start"] + header["tau_step"] * np.arange(n)
        return ComponentProfile(comp, tau, _read_rows(fh.read().splitlines(), n))
