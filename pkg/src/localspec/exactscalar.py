"""Exact coefficient ring Q(i)[L, R, R^-1] for finite-place operator entries.

Elements are finite sums ``sum c * L^a * R^b`` with Gaussian-rational
coefficients c, a >= 0 and b any integer.  Under numeric evaluation L maps to
log q and R to q^(1/2), so every matrix entry of the finite-place operators
lives here exactly: equality of normal forms replaces float tolerances in the
operator identities.

Normal form: terms sorted by (a, b), duplicate monomials merged, zero
coefficients dropped.  Instances are immutable and hashable.
"""

from fractions import Fraction
from math import log, sqrt

__all__ = ["ExactScalar", "ZERO", "ONE", "I", "L", "R"]


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"exact coefficients must be int or Fraction, got {type(x).__name__}")


class ExactScalar:
    """An element of Q(i)[L, R, R^-1] in normal form."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        # terms: iterable of (a, b, re, im); normalized here.
        merged = {}
        for a, b, re, im in terms:
            if a < 0 or a != int(a) or b != int(b):
                raise ValueError(f"bad monomial exponents ({a}, {b})")
            key = (int(a), int(b))
            cre, cim = merged.get(key, (Fraction(0), Fraction(0)))
            merged[key] = (cre + _as_fraction(re), cim + _as_fraction(im))
        normal = tuple(
            (a, b, re, im)
            for (a, b), (re, im) in sorted(merged.items())
            if re != 0 or im != 0
        )
        object.__setattr__(self, "_terms", normal)

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    @classmethod
    def term(cls, re=1, im=0, a=0, b=0):
        """Single term (re + i*im) * L^a * R^b."""
        return cls(((a, b, re, im),))

    @property
    def terms(self):
        return self._terms

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __add__(self, other):
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return ExactScalar(self._terms + other._terms)

    def __neg__(self):
        return ExactScalar((a, b, -re, -im) for a, b, re, im in self._terms)

    def __sub__(self, other):
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = ExactScalar.term(re=other)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        out = []
        for a1, b1, re1, im1 in self._terms:
            for a2, b2, re2, im2 in other._terms:
                out.append(
                    (a1 + a2, b1 + b2, re1 * re2 - im1 * im2, re1 * im2 + im1 * re2)
                )
        return ExactScalar(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def conjugate(self):
        """Complex conjugation; L and R are real and stay put."""
        return ExactScalar((a, b, re, -im) for a, b, re, im in self._terms)

    def evaluate(self, q):
        """Numeric value at residue cardinality q: L = log q, R = sqrt(q)."""
        if not q > 1:
            raise ValueError("q must exceed 1")
        lq, rq = log(q), sqrt(q)
        val = 0j
        for a, b, re, im in self._terms:
            val += complex(re, im) * lq**a * rq**b
        return val

    def json_terms(self):
        """Term list with exact numerators/denominators emitted as strings."""
        return [
            {
                "c_re_num": str(re.numerator),
                "c_re_den": str(re.denominator),
                "c_im_num": str(im.numerator),
                "c_im_den": str(im.denominator),
                "a": a,
                "b": b,
            }
            for a, b, re, im in self._terms
        ]

    @classmethod
    def from_json_terms(cls, items):
        return cls(
            (
                int(item["a"]),
                int(item["b"]),
                Fraction(int(item["c_re_num"]), int(item["c_re_den"])),
                Fraction(int(item["c_im_num"]), int(item["c_im_den"])),
            )
            for item in items
        )

    def __repr__(self):
        if not self._terms:
            return "ExactScalar(0)"
        bits = []
        for a, b, re, im in self._terms:
            coef = f"({re}+{im}i)" if im else f"({re})"
            mono = "".join(
                [f"*L^{a}" if a != 1 else "*L"] * (a > 0)
                + [f"*R^{b}" if b != 1 else "*R"] * (b != 0)
            )
            bits.append(coef + mono)
        return "ExactScalar(" + " + ".join(bits) + ")"


ZERO = ExactScalar()
ONE = ExactScalar.term()
I = ExactScalar.term(re=0, im=1)
L = ExactScalar.term(a=1)
R = ExactScalar.term(b=1)
