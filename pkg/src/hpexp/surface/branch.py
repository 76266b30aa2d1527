"""Branch points of the inverse of z(w) in closed form."""

from dataclasses import dataclass
from functools import lru_cache

import mpmath

from ..errors import IdentityFailed
from ..numerics.apcomplex import APComplex


@dataclass(frozen=True)
class BranchData:
    """w_k = 3^{-1/4} exp(-2 pi i (2k+1)/8) and z_k = z(w_k), k = 1..4 (0-based tuples)."""

    w: tuple
    z: tuple
    precision_bits: int


def z_of_w_mp(w):
    return (w * w - mpmath.mpf(1) / 3) / (w * (w * w - 1))


@lru_cache(maxsize=None)
def branch_points(precision_bits=256):
    """Closed-form branch data, cross-checked against z(w_k).

    z_1..z_4 are 3^{-1/4} times the 24th roots of unity of exponents
    7, 17, 19 and 5.

    Raises
    ------
    IdentityFailed
        If |z(w_k) - z_k| exceeds 2^{-precision+8}; this cannot happen
        unless the arithmetic is broken.
    """
    with mpmath.workprec(precision_bits + 20):
        r = mpmath.power(3, mpmath.mpf(-1) / 4)
        ws = [r * mpmath.expjpi(-mpmath.mpf(2 * k + 1) / 4) for k in range(1, 5)]
        zs = [r * mpmath.expjpi(mpmath.mpf(e) / 12) for e in (7, 17, 19, 5)]
        tol = mpmath.mpf(2) ** (-precision_bits + 8)
        for k, (w, z) in enumerate(zip(ws, zs)):
            if abs(z_of_w_mp(w) - z) > tol:
                raise IdentityFailed(f"z(w_{k + 1}) differs from z_{k + 1}")
    return BranchData(tuple(APComplex.from_value(w, precision_bits) for w in ws),
                      tuple(APComplex.from_value(z, precision_bits) for z in zs), precision_bits)
