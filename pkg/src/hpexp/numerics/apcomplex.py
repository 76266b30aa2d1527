"""Arbitrary-precision complex values that remember their precision."""

from dataclasses import dataclass

import mpmath

from ..config import MIN_PRECISION_BITS


@dataclass(frozen=True)
class APComplex:
    """Complex number ``re + i*im`` carried at ``precision_bits``.

    Binary operations run at the smaller of the two operand precisions and
    tag their result with it. Plain numbers combine at the precision of the
    APComplex operand.
    """

    re: mpmath.mpf
    im: mpmath.mpf
    precision_bits: int

    def __post_init__(self):
        if self.precision_bits < MIN_PRECISION_BITS:
            raise ValueError(f"precision_bits must be >= {MIN_PRECISION_BITS}")

    @classmethod
    def from_value(cls, value, precision_bits):
        if isinstance(value, APComplex):
            value = value.value
        with mpmath.workprec(precision_bits):
            v = mpmath.mpc(value)
            return cls(+v.real, +v.imag, precision_bits)

    @property
    def value(self):
        # built at the carried precision, not the ambient one
        with mpmath.workprec(self.precision_bits):
            return mpmath.mpc(self.re, self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def _binary(self, other, op):
        if isinstance(other, APComplex):
            prec = min(self.precision_bits, other.precision_bits)
            other = other.value
        else:
            prec = self.precision_bits
        with mpmath.workprec(prec):
            return APComplex.from_value(op(self.value, mpmath.mpc(other)), prec)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __radd__(self, other):
        return self._binary(other, lambda a, b: b + a)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binary(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    def __rmul__(self, other):
        return self._binary(other, lambda a, b: b * a)

    def __truediv__(self, other):
        return self._binary(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binary(other, lambda a, b: b / a)

    def __neg__(self):
        return APComplex(-self.re, -self.im, self.precision_bits)

    def __abs__(self):
        with mpmath.workprec(self.precision_bits):
            return abs(self.value)

    def conjugate(self):
        return APComplex(self.re, -self.im, self.precision_bits)


def as_mpc(x):
    """Unwrap APComplex or convert a plain number to mpc at current precision."""
    if isinstance(x, APComplex):
        return x.value
    return mpmath.mpc(x)
