"""Closed forms for power-weighted geometric sums.

``sum_{m>=1} m^N x^m = x A_N(x) / (1-x)^(N+1)`` with A_N the Eulerian
polynomial.  These drive the finite-place higher derivatives and the
higher-commutator circle symbols, where the defining series only converges on
part of the domain but the rational closed form is global (off x = 1).
"""

from functools import lru_cache

__all__ = ["eulerian_coefficients", "power_geometric_sum"]


@lru_cache(maxsize=None)
def eulerian_coefficients(n):
    """Coefficients of the Eulerian polynomial A_n, ascending, exact ints."""
    if n == 0:
        return (1,)
    prev = eulerian_coefficients(n - 1)
    coeffs = [0] * n
    for k in range(n):
        a = (k + 1) * (prev[k] if k < len(prev) else 0)
        b = (n - k) * (prev[k - 1] if 0 <= k - 1 < len(prev) else 0)
        coeffs[k] = a + b
    return tuple(coeffs)


def power_geometric_sum(n, x):
    """sum_{m>=1} m^n x^m via the Eulerian closed form; |x| != 1 allowed."""
    num = 0.0 + 0.0j
    for c in reversed(eulerian_coefficients(n)):
        num = num * x + c
    return x * num / (1.0 - x) ** (n + 1)
