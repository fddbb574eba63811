"""Shared numeric tables for the scalar kernels.

Bernoulli numbers are kept as exact integer pairs; the float array is what
the asymptotic expansions consume.  The expansion is truncated at B30; past
that the series is divergent at the shift threshold anyway and the truncation
error is far below double precision (first omitted term < 1e-20 at |z| >= 12).
"""

from fractions import Fraction

import numpy as np

EULER_GAMMA = 0.5772156649015328606065
LN_2PI = 1.8378770664093454836

# B_2, B_4, ..., B_30 as exact rationals.
BERNOULLI_2K = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
    Fraction(43867, 798),
    Fraction(-174611, 330),
    Fraction(854513, 138),
    Fraction(-236364091, 2730),
    Fraction(8553103, 6),
    Fraction(-23749461029, 870),
    Fraction(8615841276005, 14322),
)

B2K = np.array([float(b) for b in BERNOULLI_2K])

# B_2k / (2k) and B_2k / (2k (2k-1)), the digamma / log-gamma Stirling weights.
B2K_OVER_2K = np.array([float(b) / (2 * (k + 1)) for k, b in enumerate(BERNOULLI_2K)])
B2K_STIRLING = np.array(
    [float(b) / ((2 * (k + 1)) * (2 * (k + 1) - 1)) for k, b in enumerate(BERNOULLI_2K)]
)

# Re(z) threshold below which the recurrence shift is applied before the
# asymptotic expansion is trusted.
SHIFT_THRESHOLD = 12.0

# Arguments closer than this to a pole of Gamma are refused outright.
POLE_GUARD = 1e-8
