"""Arbitrary-precision kernels: exact linear algebra, roots, quadrature, Airy."""

from .airy import airy_pair, airy_zeros
from .apcomplex import APComplex
from .linalg import solve_nullspace_exact
from .quadrature import PathPolyline, integrate_path
from .rational import BigRational, RationalPoly
from .roots import find_poly_roots

__all__ = [
    "APComplex",
    "BigRational",
    "PathPolyline",
    "RationalPoly",
    "airy_pair",
    "airy_zeros",
    "find_poly_roots",
    "integrate_path",
    "solve_nullspace_exact",
]
