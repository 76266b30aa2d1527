"""Scaled diagonal families, the matrix X and its exact identities."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from ..errors import IdentityFailed
from ..numerics.apcomplex import APComplex, as_mpc
from ..numerics.rational import RationalPoly
from .construct import remainder_series, type2_construct


@dataclass(frozen=True)
class ScaledFamily:
    """A_n(z) = a(3nz), B_n(z) = b(3nz), C_n(z) = c(3nz) for indices (n, n, n), A_n monic."""

    n: int
    A: RationalPoly
    B: RationalPoly
    C: RationalPoly

    def exp_factor(self, z, sign):
        return mpmath.exp(sign * 3 * self.n * z)

    def evaluate(self, family, z):
        """Value of A, B, C, E1 or E2 at ``z`` in the current mpmath precision.

        The remainders E1 = A e^{-3nz} - B and E2 = A e^{3nz} - C cancel
        heavily near the origin; callers should raise the precision
        accordingly (see :func:`remainder_precision`).
        """
        z = as_mpc(z)
        family = family.upper()
        if family == "A":
            return self.A.evaluate(z)
        if family == "B":
            return self.B.evaluate(z)
        if family == "C":
            return self.C.evaluate(z)
        if family == "E1":
            return self.A.evaluate(z) * self.exp_factor(z, -1) - self.B.evaluate(z)
        if family == "E2":
            return self.A.evaluate(z) * self.exp_factor(z, 1) - self.C.evaluate(z)
        raise ValueError(f"unknown family {family!r}")


def remainder_precision(n, z, base_bits=256):
    """Working precision that absorbs the cancellation in E1, E2 at ``z``."""
    az = max(abs(complex(z)), 1e-300)
    order = 3 * n + 2
    # |E| ~ |z|**(3n+2) near 0 while each term is O(exp(3n|z|)) times the coefficients
    lost = order * max(0.0, -mpmath.log(az, 2)) + 3 * n * az * 1.45 + 8 * (2 * n + 2)
    return int(base_bits + lost)


@lru_cache(maxsize=None)
def scale_family(n):
    """Scaled polynomials of indices (n, n, n) with A_n monic of degree 2n+2."""
    if n < 1:
        raise ValueError("n must be at least 1")
    t = type2_construct(n, n, n, normalization="A_monic", scale=3 * n)
    lam = 3 * n
    return ScaledFamily(n, t.a.scale(lam), t.b.scale(lam), t.c.scale(lam))


def ell(precision_bits):
    """The constant log 2 - pi i."""
    with mpmath.workprec(precision_bits):
        return APComplex.from_value(mpmath.mpc(mpmath.log(2), -mpmath.pi), precision_bits)


@dataclass(frozen=True)
class _Row:
    a: RationalPoly
    b: RationalPoly
    c: RationalPoly
    triple: object


@dataclass(frozen=True)
class XMatrixEvaluator:
    """Polynomial data of the three rows of X, all in the scaled variable."""

    n: int
    rows: tuple

    def polynomial_matrix(self):
        """Rows of [b, a, c] without the z^{-3n-2} factors."""
        return [[r.b, r.a, r.c] for r in self.rows]


def x_row_indices(n):
    """Index triples of the three rows of X.

    The outer rows need deg a = 2n+1, deg b = 2n+1 (row 1) or deg c = 2n+1
    (row 3), and contact order 3n+2, so that X has the diagonal behavior
    z^{-n-1}, z^{2n+2}, z^{-n-1} at infinity and is analytic inside. With
    deg a = n2+n3+2, deg b = n1+n3, deg c = n1+n2 this forces (n+1, n-1, n)
    and (n+1, n, n-1). The triples (n, n, n+1) and (n, n+1, n) have
    deg a = 2n+3 and give rows whose sum is 2z times the middle row, so
    the determinant vanishes identically.
    """
    return ((n + 1, n - 1, n), "B_monic"), ((n, n, n), "A_monic"), ((n + 1, n, n - 1), "C_monic")


@lru_cache(maxsize=None)
def assemble_X(n):
    """Rows of X with b(3nz) monic in row 1, A_n monic in row 2 and c(3nz) monic in row 3."""
    if n < 1:
        raise ValueError("n must be at least 1")
    lam = 3 * n
    rows = []
    for indices, norm in x_row_indices(n):
        t = type2_construct(*indices, normalization=norm, scale=lam)
        rows.append(_Row(t.a.scale(lam), t.b.scale(lam), t.c.scale(lam), t))
    return XMatrixEvaluator(n, tuple(rows))


def evaluate_X(ev, z, side, precision_bits=None):
    """X(z) from outside or inside the contour.

    Outside the entries are polynomials (first and third column divided by
    z^{3n+2}); inside the first and third columns are minus the remainders
    divided by z^{3n+2}. At z = 0 the inside entries are the limiting
    Taylor coefficients.

    Returns
    -------
    list of list of APComplex
    """
    if side not in ("inside", "outside"):
        raise ValueError("side must be 'inside' or 'outside'")
    if precision_bits is None:
        precision_bits = z.precision_bits if isinstance(z, APComplex) else mpmath.mp.prec
    n = ev.n
    m = 3 * n + 2
    work = precision_bits + 20
    if side == "inside":
        work = max(work, remainder_precision(n, complex(as_mpc(z)), precision_bits + 20))
    with mpmath.workprec(work):
        zz = as_mpc(z)
        if side == "outside":
            if zz == 0:
                raise ZeroDivisionError("X outside is singular at z = 0")
            zm = zz**-m
            out = [[r.b.evaluate(zz) * zm, r.a.evaluate(zz), r.c.evaluate(zz) * zm] for r in ev.rows]
        elif zz == 0:
            out = []
            for r in ev.rows:
                e1, e2 = remainder_series(r.triple, m)
                lam = Fraction(3 * n) ** m
                c1, c2 = e1.coeff(m) * lam, e2.coeff(m) * lam
                out.append([
                    -mpmath.mpf(c1.numerator) / c1.denominator,
                    r.a.evaluate(zz),
                    -mpmath.mpf(c2.numerator) / c2.denominator,
                ])
        else:
            em = mpmath.exp(-3 * n * zz)
            ep = 1 / em
            zm = zz**-m
            out = []
            for r in ev.rows:
                a = r.a.evaluate(zz)
                out.append([-(a * em - r.b.evaluate(zz)) * zm, a, -(a * ep - r.c.evaluate(zz)) * zm])
        return [[APComplex.from_value(x, precision_bits) for x in row] for row in out]


def jump_matrix(n, z):
    """J(z) with X_inside = X_outside J on the contour."""
    z = as_mpc(z)
    m = 3 * n + 2
    zm = z**-m
    return [
        [mpmath.mpc(1), mpmath.mpc(0), mpmath.mpc(0)],
        [-zm * mpmath.exp(-3 * n * z), mpmath.mpc(1), -zm * mpmath.exp(3 * n * z)],
        [mpmath.mpc(0), mpmath.mpc(0), mpmath.mpc(1)],
    ]


def det3(M):
    return (
        M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
        - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
        + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])
    )


def det_identity(n):
    """Check det[b, a, c] = z^{6n+4} exactly for the rows of X.

    Raises
    ------
    IdentityFailed
        With the residual polynomial attached.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    M = assemble_X(n).polynomial_matrix()
    residual = det3(M) - RationalPoly.monomial(6 * n + 4)
    if not residual.is_zero():
        raise IdentityFailed(f"det differs from z^{6 * n + 4}", residual=residual)
    return True
