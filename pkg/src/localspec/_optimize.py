"""Deterministic grid + golden-section extremum search on an interval."""

import numpy as np

__all__ = ["golden_max", "grid_refine_max", "grid_refine_extrema"]

_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0
_INVPHI2 = (3.0 - np.sqrt(5.0)) / 2.0


def golden_max(fn, a, b, xtol=1e-10):
    """Golden-section maximization on [a, b].

    Returns (argmax, max, spread) with spread the value gap of the final
    probe pair, a conservative stand-in for the remaining value error.
    """
    h = b - a
    c, d = a + _INVPHI2 * h, a + _INVPHI * h
    fc, fd = fn(c), fn(d)
    while h > xtol:
        h *= _INVPHI
        if fc > fd:
            b, d, fd = d, c, fc
            c = a + _INVPHI2 * h
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * h
            fd = fn(d)
    spread = abs(fc - fd)
    return (c, fc, spread) if fc > fd else (d, fd, spread)


def grid_refine_max(fn, values, grid):
    """Refine every interior local maximum of sampled values; keep the best.

    ``values`` must be fn over ``grid``.  Returns (argmax, max, error).
    """
    best_i = int(np.argmax(values))
    best_x, best_f = float(grid[best_i]), float(values[best_i])
    err = 0.0
    interior = (values[1:-1] >= values[:-2]) & (values[1:-1] >= values[2:])
    for i in np.nonzero(interior)[0] + 1:
        x, f, spread = golden_max(fn, grid[i - 1], grid[i + 1])
        if f > best_f:
            best_x, best_f, err = float(x), float(f), spread
    return best_x, best_f, max(err, 1e-12)


def grid_refine_extrema(fn, lo, hi, n=4097):
    """(min, max) of fn over [lo, hi] by dense grid plus golden refinement."""
    grid = np.linspace(lo, hi, n)
    values = np.array([fn(x) for x in grid])
    _, fmax, _ = grid_refine_max(fn, values, grid)
    _, fneg, _ = grid_refine_max(lambda x: -fn(x), -values, grid)
    return -fneg, fmax
