"""Exact model of the dilation-invariant sector of L^2(Q_p).

In the orthonormal basis ``eta_j(y) = (1-1/p)^(-1/2) p^(-j/2) theta(p^j y)``
(theta the indicator of the units) the log-modulus operator A is diagonal
with entries ``j L`` and the conductor/commutator family is Toeplitz: the
entry at (j, k) depends only on m = j - k,

    H    t_0 = 0,  t_m = -L R^(-|m|)
    K    t_0 = 0,  t_m = i m L^2 R^(-|m|)
    K_N  t_0 = 0,  t_m = -m^N L^(N+1) R^(-|m|)

over the exact ring Q(i)[L, R, R^-1] of ``exactscalar`` (L = log q,
R = sqrt(q)).  The H band follows from integrating the sphere values of
H(theta) against the basis; the K band is the matrix-element formula; the
K_N band is pinned by iterating the bracket with the diagonal A, which
multiplies the entry at offset m by (m L) each time.  All of these identities
are asserted exactly in the test suite, including the binomial expansion of
K_N through genuine truncated matrix products.

Circle symbols: under eta_j -> z^j the Toeplitz bands become multiplication
operators on the circle,

    h(z)   = -log(q) ( z/(sqrt(q)-z) + zbar/(sqrt(q)-zbar) )
    k(z)   = i log(q)^2 ( w/(1-w)^2 - wbar/(1-wbar)^2 ),   w = z/sqrt(q)
    k_N(z) = (log q * z d/dz)^N h(z)

whose ranges govern the truncation spectra.  The orientation z = q^(i tau)
is pinned by the consistency check against the critical-line multiplier.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._optimize import grid_refine_extrema
from ._polysum import power_geometric_sum
from .exactscalar import ExactScalar, L, ONE, ZERO

__all__ = [
    "BandKind",
    "KIND_A",
    "KIND_H",
    "KIND_K",
    "kind_kn",
    "NonHermitianError",
    "OperatorTruncation",
    "theta_value",
    "band_coefficient",
    "build_truncation",
    "bracket_with_A",
    "binomial_kn",
    "symbol",
    "symbol_range",
    "inversion_conjugate",
    "extreme_eigenvalues",
    "matrix_to_csv",
    "matrix_to_exact_json",
]


class NonHermitianError(ValueError):
    """Eigenvalue extraction requested for a non-Hermitian truncation."""


@dataclass(frozen=True)
class BandKind:
    name: str  # "A" | "H" | "K" | "KN"
    order: int | None = None

    def __post_init__(self):
        if self.name not in ("A", "H", "K", "KN"):
            raise ValueError(f"unknown operator kind {self.name!r}")
        if self.name == "KN":
            if self.order is None or self.order < 1:
                raise ValueError("iterated commutators need order >= 1")
        elif self.order is not None:
            raise ValueError(f"{self.name} carries no order")


KIND_A = BandKind("A")
KIND_H = BandKind("H")
KIND_K = BandKind("K")


def kind_kn(order):
    return BandKind("KN", int(order))


def theta_value(kind, m):
    """Value of H(theta) or K(theta) on the sphere |y| = q^m, exactly.

    H: -L below the units, 0 on them, -L/|y| above.
    K: i L^2 log_q|y| below and on the units, with the extra 1/|y| above.
    """
    if kind == KIND_H:
        if m == 0:
            return ZERO
        if m < 0:
            return -L
        return ExactScalar.term(re=-1, a=1, b=-2 * m)
    if kind == KIND_K:
        if m == 0:
            return ZERO
        if m < 0:
            return ExactScalar.term(re=0, im=m, a=2)
        return ExactScalar.term(re=0, im=m, a=2, b=-2 * m)
    raise ValueError("sphere values exist for the H and K kinds only")


def band_coefficient(kind, m):
    """Toeplitz band t_m (the entry at j - k = m), exactly.  Not for A."""
    if kind == KIND_A:
        raise ValueError("A is diagonal, not a band in j - k alone")
    m = int(m)
    if m == 0:
        return ZERO
    if kind == KIND_H:
        return ExactScalar.term(re=-1, a=1, b=-abs(m))
    if kind == KIND_K:
        return ExactScalar.term(re=0, im=m, a=2, b=-abs(m))
    n = kind.order
    return ExactScalar.term(re=-(m**n), a=n + 1, b=-abs(m))


@dataclass(frozen=True)
class OperatorTruncation:
    """(2M+1) x (2M+1) window onto the bi-infinite matrix, exact entries.

    Row/column indices run j, k in [-M, M]; ``entry(j, k)`` uses those
    operator indices, while ``entries`` is stored row-major from index -M.
    """

    q: float
    M: int
    entries: tuple  # tuple of row tuples of ExactScalar
    kind: BandKind | None = None

    def entry(self, j, k):
        return self.entries[j + self.M][k + self.M]

    @property
    def n(self):
        return 2 * self.M + 1

    def __add__(self, other):
        self._check_match(other)
        rows = tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)
        )
        return OperatorTruncation(self.q, self.M, rows)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __matmul__(self, other):
        self._check_match(other)
        n = self.n
        rows = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            xrow = self.entries[i]
            out = rows[i]
            for k in range(n):
                s = xrow[k]
                if not s:
                    continue
                yrow = other.entries[k]
                for j in range(n):
                    t = yrow[j]
                    if t:
                        out[j] = out[j] + s * t
        return OperatorTruncation(self.q, self.M, tuple(tuple(r) for r in rows))

    def scale(self, coef):
        if isinstance(coef, int):
            coef = ExactScalar.term(re=coef)
        rows = tuple(tuple(coef * e for e in row) for row in self.entries)
        return OperatorTruncation(self.q, self.M, rows)

    def _check_match(self, other):
        if self.q != other.q or self.M != other.M:
            raise ValueError("truncations must share q and M")

    def is_toeplitz(self):
        return all(
            self.entry(j, k) == self.entry(j + 1, k + 1)
            for j in range(-self.M, self.M)
            for k in range(-self.M, self.M)
        )

    def is_hermitian(self):
        # entries are shared across diagonals; cache conjugates by identity
        conj = {}
        for j in range(-self.M, self.M + 1):
            for k in range(j, self.M + 1):
                e = self.entry(k, j)
                c = conj.get(id(e))
                if c is None:
                    c = e.conjugate()
                    conj[id(e)] = c
                if self.entry(j, k) != c:
                    return False
        return True

    def interior_equals(self, other, margin):
        """Exact equality on entries with |j|, |k| <= M - margin."""
        self._check_match(other)
        lim = self.M - margin
        return all(
            self.entry(j, k) == other.entry(j, k)
            for j in range(-lim, lim + 1)
            for k in range(-lim, lim + 1)
        )

    def to_complex_matrix(self):
        """Numeric evaluation at this truncation's q; entries share scalars,
        so evaluation is cached per scalar object."""
        cache = {}
        n = self.n
        out = np.empty((n, n), dtype=np.complex128)
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                key = id(e)
                val = cache.get(key)
                if val is None:
                    val = e.evaluate(self.q)
                    cache[key] = val
                out[i, j] = val
        return out


def build_truncation(kind, q, M):
    """Exact truncation of the operator to indices [-M, M]."""
    if not q > 1:
        raise ValueError("q must exceed 1")
    if M < 1:
        raise ValueError("M must be a positive integer")
    M = int(M)
    n = 2 * M + 1
    if kind == KIND_A:
        rows = tuple(
            tuple(
                ExactScalar.term(re=j, a=1) if (j == k and j != 0) else ZERO
                for k in range(-M, M + 1)
            )
            for j in range(-M, M + 1)
        )
        return OperatorTruncation(float(q), M, rows, kind)
    band = {m: band_coefficient(kind, m) for m in range(-2 * M, 2 * M + 1)}
    rows = tuple(
        tuple(band[(j - M) - (k - M)] for k in range(n)) for j in range(n)
    )
    return OperatorTruncation(float(q), M, rows, kind)


def bracket_with_A(x):
    """[A, x] on the truncation: entry (j, k) gains the factor (j - k) L.

    Exact; A diagonal makes the bracket entrywise."""
    M = x.M
    rows = tuple(
        tuple(
            ExactScalar.term(re=(j - k), a=1) * x.entry(j, k) if j != k else ZERO
            for k in range(-M, M + 1)
        )
        for j in range(-M, M + 1)
    )
    return OperatorTruncation(x.q, x.M, rows)


def binomial_kn(q, order, M):
    """K_N by the binomial sum of genuine truncated matrix products,

        K_N = sum_{0<=j<=N} (-1)^(N-j) C(N, j) A^j H A^(N-j).

    Entries near the truncation edge are corrupted by the window in general;
    compare interiors (|j|, |k| <= M - N) against ``build_truncation``.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    a = build_truncation(KIND_A, q, M)
    h = build_truncation(KIND_H, q, M)
    powers = [None] * (order + 1)
    ident = OperatorTruncation(
        float(q),
        M,
        tuple(
            tuple(ONE if i == j else ZERO for j in range(2 * M + 1))
            for i in range(2 * M + 1)
        ),
    )
    powers[0] = ident
    for j in range(1, order + 1):
        powers[j] = powers[j - 1] @ a
    total = None
    for j in range(order + 1):
        sign = 1 if (order - j) % 2 == 0 else -1
        term = (powers[j] @ h @ powers[order - j]).scale(sign * math.comb(order, j))
        total = term if total is None else total + term
    return total


def symbol(kind, q, theta):
    """Closed-form circle symbol at z = exp(i theta).

    Real for H, K and even-order K_N; purely imaginary for odd-order K_N
    (those truncations are skew rather than Hermitian).
    """
    if kind == KIND_A:
        raise ValueError("A is not a Toeplitz band; it has no circle symbol")
    lq = math.log(q)
    z = complex(math.cos(theta), math.sin(theta))
    w = z / math.sqrt(q)
    if kind == KIND_H:
        return -lq * (w / (1.0 - w) + w.conjugate() / (1.0 - w.conjugate()))
    if kind == KIND_K:
        return 1j * lq**2 * (
            w / (1.0 - w) ** 2 - w.conjugate() / (1.0 - w.conjugate()) ** 2
        )
    n = kind.order
    s = power_geometric_sum(n, w)
    return -(lq ** (n + 1)) * (s + (-1.0) ** n * s.conjugate())


def symbol_range(kind, q):
    """Numeric extrema of the real-valued symbol over the circle.

    Dense 2^12 grid plus golden refinement (error well under 1e-8).  For K
    the range is symmetric about 0; for odd-order K_N the symbol is purely
    imaginary and the extrema reported are those of its imaginary part.
    """
    odd = kind.name == "KN" and kind.order % 2 == 1
    if odd:
        fn = lambda th: symbol(kind, q, th).imag
    else:
        fn = lambda th: symbol(kind, q, th).real
    return grid_refine_extrema(fn, 0.0, 2.0 * math.pi, 4097)


def inversion_conjugate(x):
    """Conjugation by the inversion eta_j -> eta_{-j}: index reflection
    entry(j, k) -> entry(-j, -k).  Fixes H, negates A and K, scales K_N by
    (-1)^N."""
    rows = tuple(tuple(reversed(row)) for row in reversed(x.entries))
    return OperatorTruncation(x.q, x.M, rows, x.kind)


def extreme_eigenvalues(x, tol=1e-10, method="auto"):
    """Extreme eigenvalues of the numerically evaluated Hermitian truncation.

    ``method="lanczos"`` runs ARPACK with a fixed start vector (deterministic,
    wins for very large windows); ``"dense"`` diagonalizes directly, which is
    far faster at the window sizes used here.  ``"auto"`` picks by size.
    """
    if not x.is_hermitian():
        raise NonHermitianError("truncation is not Hermitian")
    mat = x.to_complex_matrix()
    n = mat.shape[0]
    if method == "auto":
        method = "lanczos" if n > 1500 else "dense"
    if method == "dense":
        vals = np.linalg.eigvalsh(mat)
        return float(vals[0]), float(vals[-1])
    if method != "lanczos":
        raise ValueError(f"unknown eigenvalue method {method!r}")
    from scipy.sparse.linalg import eigsh

    v0 = np.full(n, 1.0 / math.sqrt(n))
    lo = eigsh(mat, k=1, which="SA", tol=tol, v0=v0, return_eigenvectors=False)
    hi = eigsh(mat, k=1, which="LA", tol=tol, v0=v0, return_eigenvectors=False)
    return float(lo[0]), float(hi[0])


def _fmt(x):
    return f"{x:.17g}"


def matrix_to_csv(x):
    """Numeric CSV dump: header ``j,k,re,im``, structurally nonzero entries
    in row-major order, 17 significant digits, LF line endings."""
    lines = ["j,k,re,im"]
    for j in range(-x.M, x.M + 1):
        for k in range(-x.M, x.M + 1):
            e = x.entry(j, k)
            if not e:
                continue
            v = e.evaluate(x.q)
            lines.append(f"{j},{k},{_fmt(v.real)},{_fmt(v.imag)}")
    return "\n".join(lines) + "\n"


def matrix_to_exact_json(x):
    """Exact-term JSON object: numerators/denominators as strings."""
    entries = []
    for j in range(-x.M, x.M + 1):
        for k in range(-x.M, x.M + 1):
            e = x.entry(j, k)
            if not e:
                continue
            entries.append({"j": j, "k": k, "terms": e.json_terms()})
    return {"q": x.q, "M": x.M, "entries": entries}
