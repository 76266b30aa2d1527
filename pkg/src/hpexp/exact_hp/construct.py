"""Exact type I and type II Hermite-Pade approximants to the exponential.

Both constructions solve integer linear systems. Writing an unknown
polynomial coefficient c_j as gamma_j / j!, the coefficient of z**k in
(sum_j c_j z**j) * exp(+-z), multiplied by k!, is sum_j C(k, j) (+-1)**(k-j) gamma_j,
so every order condition becomes a row of binomial coefficients.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from ..errors import DegenerateNormalization
from ..numerics.linalg import solve_nullspace_exact
from ..numerics.rational import RationalPoly, primitive_vector_polys

NORMALIZATIONS = (None, "A_monic", "B_monic", "C_monic")


@dataclass(frozen=True)
class Type1Triple:
    """(p, q, r) with p e^{-z} + q + r e^{z} = O(z^{n1+n2+n3+2})."""

    p: RationalPoly
    q: RationalPoly
    r: RationalPoly
    indices: tuple

    @property
    def polys(self):
        return {"p": self.p, "q": self.q, "r": self.r}


@dataclass(frozen=True)
class Type2Triple:
    """(a, b, c) with a e^{-z} - b and a e^{z} - c both O(z^{n1+n2+n3+2}).

    ``scale`` records the variable scaling the normalization refers to:
    with ``normalization="A_monic"`` and ``scale=3n``, a(3n z) is monic.
    """

    a: RationalPoly
    b: RationalPoly
    c: RationalPoly
    indices: tuple
    normalization: str = None
    scale: Fraction = Fraction(1)

    @property
    def polys(self):
        return {"a": self.a, "b": self.b, "c": self.c}

    @property
    def degenerate(self):
        """True when the index triple is (0, 0, 0), where b = c = 0."""
        return sum(self.indices) == 0

    @property
    def order(self):
        """Guaranteed order of contact n1 + n2 + n3 + 2."""
        return sum(self.indices) + 2


def _check_indices(indices):
    if len(indices) != 3 or any(int(k) != k or k < 0 for k in indices):
        raise ValueError(f"indices must be three nonnegative integers, got {indices!r}")
    return tuple(int(k) for k in indices)


def exp_product_row(k, degree, sign):
    """k! times the z**k coefficient of sum_j gamma_j z**j / j! * exp(sign*z), as a row in gamma."""
    return [comb(k, j) * sign ** (k - j) if j <= k else 0 for j in range(degree + 1)]


def type1_order_matrix(n1, n2, n3):
    """Full k!-scaled order-condition matrix in the unknowns (pi, kappa, rho) = j! (p_j, q_j, r_j)."""
    N = n1 + n2 + n3
    rows = []
    for k in range(N + 2):
        row = exp_product_row(k, n1, -1)
        row += [1 if j == k else 0 for j in range(n2 + 1)]
        row += exp_product_row(k, n3, 1)
        rows.append(row)
    return rows


def type2_order_matrix(n1, n2, n3):
    """Order conditions on alpha_j = j! a_j after eliminating b and c."""
    N = n1 + n2 + n3
    D = n2 + n3 + 2
    rows = [exp_product_row(k, D, -1) for k in range(n1 + n3 + 1, N + 2)]
    rows += [exp_product_row(k, D, 1) for k in range(n1 + n2 + 1, N + 2)]
    return rows


def _unscale(gammas):
    return RationalPoly(Fraction(g) / factorial(j) for j, g in enumerate(gammas))


@lru_cache(maxsize=None)
def type1_construct(n1, n2, n3):
    """Type I approximant of indices (n1, n2, n3).

    q is eliminated first: the conditions of order k > n2 involve p and r
    only, and the lower ones then give q explicitly.

    Returns
    -------
    Type1Triple
        Integer coefficients with content 1; the last coefficient of the
        solved vector (r_{n3}, or the last nonzero one) is positive.
    """
    n1, n2, n3 = _check_indices((n1, n2, n3))
    N = n1 + n2 + n3
    rows = [exp_product_row(k, n1, -1) + exp_product_row(k, n3, 1) for k in range(n2 + 1, N + 2)]
    v = solve_nullspace_exact(rows)
    p = _unscale(v[: n1 + 1])
    r = _unscale(v[n1 + 1:])
    tail = (p * RationalPoly.exp_taylor(n2, -1) + r * RationalPoly.exp_taylor(n2, 1)).truncate(n2)
    q = -tail
    p, q, r = primitive_vector_polys([p, q, r])
    return Type1Triple(p, q, r, (n1, n2, n3))


@lru_cache(maxsize=None)
def _type2_base(n1, n2, n3):
    alpha = solve_nullspace_exact(type2_order_matrix(n1, n2, n3))
    a = _unscale(alpha)
    b = a.mul_truncated(RationalPoly.exp_taylor(n1 + n3, -1), n1 + n3)
    c = a.mul_truncated(RationalPoly.exp_taylor(n1 + n2, 1), n1 + n2)
    return tuple(primitive_vector_polys([a, b, c]))


def type2_construct(n1, n2, n3, normalization=None, scale=1):
    """Type II approximant of indices (n1, n2, n3).

    Parameters
    ----------
    n1, n2, n3 : int
    normalization : {None, "A_monic", "B_monic", "C_monic"}
        None gives integer coefficients with content 1. Otherwise the named
        polynomial, after the substitution z -> scale*z, is made monic.
    scale : int or Fraction, optional
        Variable scaling the normalization refers to (3n for the scaled
        families).

    Returns
    -------
    Type2Triple

    Raises
    ------
    DegenerateNormalization
        If the polynomial to be made monic has less than its maximal degree.
    """
    n1, n2, n3 = _check_indices((n1, n2, n3))
    if normalization not in NORMALIZATIONS:
        raise ValueError(f"unknown normalization {normalization!r}")
    a, b, c = _type2_base(n1, n2, n3)
    scale = Fraction(scale)
    if normalization is not None:
        target, full_degree = {
            "A_monic": (a, n2 + n3 + 2),
            "B_monic": (b, n1 + n3),
            "C_monic": (c, n1 + n2),
        }[normalization]
        if target.degree != full_degree:
            raise DegenerateNormalization(
                f"{normalization[0]} has degree {target.degree}, expected {full_degree}"
            )
        factor = 1 / (target.leading * scale**full_degree)
        a, b, c = a * factor, b * factor, c * factor
    return Type2Triple(a, b, c, (n1, n2, n3), normalization, scale)


def remainder_series(t, order):
    """Taylor coefficients through z**order of a e^{-z} - b and a e^{z} - c.

    Returns
    -------
    tuple of RationalPoly
        (e1, e2), both exact.
    """
    e1 = t.a.mul_truncated(RationalPoly.exp_taylor(order, -1), order) - t.b
    e2 = t.a.mul_truncated(RationalPoly.exp_taylor(order, 1), order) - t.c
    return e1.truncate(order), e2.truncate(order)


def type1_remainder_series(t, order):
    """Taylor coefficients through z**order of p e^{-z} + q + r e^{z}."""
    e = (
        t.p.mul_truncated(RationalPoly.exp_taylor(order, -1), order)
        + t.q
        + t.r.mul_truncated(RationalPoly.exp_taylor(order, 1), order)
    )
    return e.truncate(order)


def contact_order(series):
    """Index of the first nonzero coefficient, or None for the zero series."""
    k = series.valuation()
    return None if k < 0 else k
