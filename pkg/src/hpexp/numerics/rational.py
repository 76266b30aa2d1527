"""Exact rational scalars and dense univariate polynomials."""

from fractions import Fraction
from math import factorial, gcd, lcm

import mpmath

# Fraction is always reduced with a positive denominator and 0 == 0/1.
BigRational = Fraction


class RationalPoly:
    """Dense polynomial with exact rational coefficients.

    Parameters
    ----------
    coeffs : iterable
        Coefficients in ascending order; anything accepted by ``Fraction``.

    Notes
    -----
    Trailing zero coefficients are stripped, so the zero polynomial has an
    empty coefficient tuple and degree -1. Instances are immutable.
    """

    __slots__ = ("coeffs", "_mp_cache")

    def __init__(self, coeffs=()):
        cs = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self._mp_cache = {}

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def exp_taylor(cls, order, sign=1):
        """Taylor polynomial of exp(sign*z) through z**order."""
        return cls(Fraction(sign**k, factorial(k)) for k in range(order + 1))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __repr__(self):
        return f"RationalPoly({[str(c) for c in self.coeffs]})"

    def __eq__(self, other):
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RationalPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return RationalPoly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPoly(c * other for c in self.coeffs)
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalPoly()
        # Multiply over a common denominator so the inner loop is pure int.
        da, na = _integerize(self.coeffs)
        db, nb = _integerize(other.coeffs)
        out = [0] * (len(na) + len(nb) - 1)
        for i, x in enumerate(na):
            if x:
                for j, y in enumerate(nb):
                    out[i + j] += x * y
        den = da * db
        return RationalPoly(Fraction(c, den) for c in out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = RationalPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, z):
        """Exact Horner evaluation at an int or Fraction."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def evaluate(self, z):
        """Horner evaluation in the current mpmath precision."""
        cs = self.mp_coeffs()
        acc = mpmath.mpc(0)
        for c in reversed(cs):
            acc = acc * z + c
        return acc

    def evaluate_with_derivative(self, z):
        cs = self.mp_coeffs()
        p = mpmath.mpc(0)
        d = mpmath.mpc(0)
        for c in reversed(cs):
            d = d * z + p
            p = p * z + c
        return p, d

    def mp_coeffs(self):
        """Coefficients rounded to the current mpmath precision (cached)."""
        prec = mpmath.mp.prec
        cs = self._mp_cache.get(prec)
        if cs is None:
            cs = [mpmath.mpf(c.numerator) / c.denominator for c in self.coeffs]
            self._mp_cache[prec] = cs
        return cs

    def scale(self, lam):
        """The polynomial z -> p(lam*z)."""
        lam = Fraction(lam)
        out = []
        power = Fraction(1)
        for c in self.coeffs:
            out.append(c * power)
            power *= lam
        return RationalPoly(out)

    def reflect(self):
        """The polynomial z -> p(-z)."""
        return RationalPoly(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def shift_degree(self, k):
        """Multiply by z**k."""
        return RationalPoly([0] * k + list(self.coeffs))

    def monic(self):
        return self * (1 / self.leading)

    def primitive(self):
        """Integer coefficients with content 1, sign of the original kept."""
        return primitive_vector_polys([self])[0]

    def truncate(self, order):
        """Coefficients through z**order."""
        return RationalPoly(self.coeffs[: order + 1])

    def mul_truncated(self, other, order):
        """Product truncated after z**order."""
        a, b = self.coeffs, _as_poly(other).coeffs
        out = [Fraction(0)] * (order + 1)
        for i, x in enumerate(a[: order + 1]):
            if x:
                for j, y in enumerate(b[: order + 1 - i]):
                    out[i + j] += x * y
        return RationalPoly(out)

    def valuation(self):
        """Index of the first nonzero coefficient (-1 for the zero polynomial)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def to_json(self):
        return [{"num": str(c.numerator), "den": str(c.denominator)} for c in self.coeffs]

    @classmethod
    def from_json(cls, entries):
        return cls(Fraction(int(e["num"]), int(e["den"])) for e in entries)


def _as_poly(x):
    if isinstance(x, RationalPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalPoly([x])
    return None


def _integerize(coeffs):
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    return den, [c.numerator * (den // c.denominator) for c in coeffs]


def primitive_vector_polys(polys):
    """Scale a list of polynomials jointly to integer coefficients with content 1."""
    den = 1
    for p in polys:
        for c in p.coeffs:
            den = lcm(den, c.denominator)
    g = 0
    for p in polys:
        for c in p.coeffs:
            g = gcd(g, c.numerator * (den // c.denominator))
    if g == 0:
        return list(polys)
    factor = Fraction(den, g)
    return [p * factor for p in polys]
