"""Zeros of the scaled polynomials and of the scaled remainders."""

import math
from functools import lru_cache

import mpmath

from ..config import default_precision
from ..errors import NoConvergence
from ..exact_hp import remainder_precision, scale_family, type1_construct
from ..numerics.apcomplex import APComplex, as_mpc
from ..numerics.rational import RationalPoly
from ..numerics.roots import find_poly_roots
from ..surface.algebra import Z_BRANCH

POLY_FAMILIES = ("a", "b", "c", "p", "q", "r")
REMAINDER_FAMILIES = ("e1", "e2")
MAX_N = 80
MAX_ROOT_BITS = 4096


def _check(family, n):
    family = family.lower()
    if family not in POLY_FAMILIES + REMAINDER_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be between 1 and {MAX_N}")
    return family


def scaled_polynomial(family, n):
    """The polynomial z -> f(3nz) for f in a, b, c (A_n monic) or p, q, r (type I)."""
    family = _check(family, n)
    if family in "abc":
        return getattr(scale_family(n), family.upper())
    t = type1_construct(n, n, n)
    return getattr(t, family).scale(3 * n)


def remainder_polynomial(family, n, degree):
    """Taylor section through z**degree of the scaled remainder, divided by z**(3n+2)."""
    family = _check(family, n)
    fam = scale_family(n)
    sign, other = (-1, fam.B) if family == "e1" else (1, fam.C)
    series = fam.A.mul_truncated(RationalPoly.exp_taylor(degree, sign).scale(3 * n), degree) - other
    order = 3 * n + 2
    if series.valuation() != order:
        raise ArithmeticError(f"remainder vanishes to order {series.valuation()}, expected {order}")
    return RationalPoly(series.coeffs[order:degree + 1])


def remainder_newton(family, n, z0, precision_bits=None, max_iter=80, max_step=None):
    """Zero of E1_n or E2_n by Newton's method from ``z0``.

    The iteration runs on E / z^(3n+2), so that the interpolation zero at
    the origin does not capture it. The derivative is exact:
    E1' = (A' - 3nA) e^{-3nz} - B' and E2' = (A' + 3nA) e^{3nz} - C'. The
    iteration stops when the step is below 2^{-prec/2} relative to |z|,
    then takes one more step. ``max_step`` caps the length of each step.

    Raises
    ------
    NoConvergence
    """
    family = _check(family, n)
    if family not in REMAINDER_FAMILIES:
        raise ValueError("Newton polishing is provided for e1 and e2")
    bits = precision_bits or default_precision()
    fam = scale_family(n)
    sign, other = (-1, fam.B) if family == "e1" else (1, fam.C)
    prec = remainder_precision(n, complex(as_mpc(z0)), bits)
    order = 3 * n + 2
    with mpmath.workprec(prec):
        z = as_mpc(z0)
        tol = mpmath.ldexp(1, -bits // 2) * max(abs(z), 1)
        done = False
        for _ in range(max_iter):
            a, da = fam.A.evaluate_with_derivative(z)
            o, do = other.evaluate_with_derivative(z)
            e = mpmath.exp(sign * 3 * n * z)
            f = a * e - o
            df = (da + sign * 3 * n * a) * e - do
            if f == 0:
                return APComplex.from_value(z, bits)
            # Newton on E / z^(3n+2): the origin zero does not attract the iteration
            logd = df / f - order / z
            if logd == 0:
                break
            step = 1 / logd
            if max_step is not None and abs(step) > max_step:
                step *= max_step / abs(step)
            z -= step
            if done:
                return APComplex.from_value(z, bits)
            if abs(step) < tol:
                done = True
        raise NoConvergence(f"Newton iteration for {family} did not converge from {complex(as_mpc(z0))}")


def coefficient_span_bits(poly):
    """log2 of the ratio of the largest to the smallest nonzero coefficient, rounded up."""
    mags = [abs(c) for c in poly.coeffs if c]
    ratio = max(mags) / min(mags)
    return math.ceil(math.log2(ratio.numerator) - math.log2(ratio.denominator))


@lru_cache(maxsize=None)
def _poly_roots(family, n, bits):
    # the coefficients span many orders of magnitude and the roots lose about
    # that many bits, so the span is added as guard bits; retry at doubled precision
    poly = scaled_polynomial(family, n)
    work = bits + coefficient_span_bits(poly)
    while True:
        try:
            roots = find_poly_roots(poly, work, anchor=0)
        except NoConvergence:
            if work >= MAX_ROOT_BITS:
                raise
            work *= 2
            continue
        return tuple(APComplex.from_value(r.value, bits) for r in roots)


def _canonical(zs):
    return sorted(zs, key=lambda z: (round(abs(complex(z.value)), 12), round(mpmath.arg(z.value), 12)))


def family_zeros(family, n, precision_bits=None, radius=1.0, scaled=True):
    """Zeros of a scaled polynomial or of a scaled remainder.

    Parameters
    ----------
    family : str
        One of a, b, c, p, q, r, e1, e2.
    n : int
        1 <= n <= 80.
    precision_bits : int, optional
    radius : float, optional
        Remainders only: zeros are searched in |z| < radius. The Taylor
        section has degree 3n+2 + ceil(3 e n radius) + 10, its origin zero
        of order 3n+2 is removed, and every root inside the disk is polished
        by Newton's method on the exact remainder. Roots of the section that
        do not survive polishing are discarded.
    scaled : bool, optional
        Report zeros of f(3nz) (default) or of f itself.

    Returns
    -------
    list of APComplex
        Sorted by modulus, then argument.
    """
    family = _check(family, n)
    bits = precision_bits or default_precision()
    if family in POLY_FAMILIES:
        zs = list(_poly_roots(family, n, bits))
    else:
        zs = _remainder_zeros(family, n, bits, radius)
    if not scaled:
        zs = [APComplex.from_value(z.value * (3 * n), bits) for z in zs]
    return _canonical(zs)


def _remainder_zeros(family, n, bits, radius):
    extra = math.ceil(3 * math.e * n * radius) + 10
    degree = 3 * n + 2 + extra
    poly = remainder_polynomial(family, n, degree)
    prec = remainder_precision(n, radius, bits)
    found = []
    for r in find_poly_roots(poly, prec):
        if abs(complex(r.value)) >= radius:
            continue
        try:
            z = remainder_newton(family, n, r.value, bits)
        except NoConvergence:
            continue
        zc = complex(z.value)
        if abs(zc - complex(r.value)) > 1e-3 or abs(zc) >= radius:
            continue
        if all(abs(zc - complex(w.value)) > 1e-12 for w in found):
            found.append(z)
    return found


def nearest_zeros(family, n, count, precision_bits=None, seeds=None):
    """The ``count`` zeros nearest to z_1 in increasing distance.

    Polynomial families use all roots. Remainder zeros are found by Newton's
    method from ``seeds`` (one per zero, in order of distance to z_1): each
    seed after the first is shifted by the offset between the previous zero
    and its seed, and steps are capped at a third of the seed spacing.
    """
    family = _check(family, n)
    bits = precision_bits or default_precision()
    z1 = Z_BRANCH[0]
    if family in POLY_FAMILIES:
        roots = sorted(_poly_roots(family, n, bits), key=lambda z: abs(complex(z.value) - z1))
        return roots[:count]
    if seeds is None or len(seeds) < count:
        raise ValueError("remainder zeros near z1 need one seed per zero")
    seeds = [complex(as_mpc(s)) for s in seeds[:count]]
    gaps = [abs(b - a) for a, b in zip(seeds, seeds[1:])] or [abs(seeds[0] - z1)]
    cap = min(gaps) / 3
    zs, shift = [], 0j
    for s in seeds:
        z = remainder_newton(family, n, s + shift, bits, max_step=cap)
        shift = complex(z.value) - s
        zs.append(z)
    pts = [complex(z.value) for z in zs]
    if any(abs(a - b) < cap / 10 for i, a in enumerate(pts) for b in pts[i + 1:]):
        raise NoConvergence("two seeds converged to the same remainder zero")
    return sorted(zs, key=lambda z: abs(complex(z.value) - z1))


def remainder_zero_count(family, n, center, radius, points=720, precision_bits=None):
    """Number of zeros of E1_n or E2_n in a disk not containing the origin (argument principle).

    The winding of E along the circle is accumulated from the exact values
    at ``points`` equally spaced nodes; each increment must stay below pi/2
    in modulus, otherwise ValueError asks for more nodes.
    """
    family = _check(family, n)
    if family not in REMAINDER_FAMILIES:
        raise ValueError("zero counting is provided for e1 and e2")
    center = complex(center)
    if abs(center) <= radius:
        raise ValueError("the disk must not contain the origin")
    bits = precision_bits or default_precision()
    fam = scale_family(n)
    prec = remainder_precision(n, abs(center) - radius, bits)
    with mpmath.workprec(prec):
        total = mpmath.mpf(0)
        prev = None
        for k in range(points + 1):
            z = mpmath.mpc(center) + radius * mpmath.expjpi(mpmath.mpf(2 * k) / points)
            v = fam.evaluate(family, z)
            if prev is not None:
                inc = mpmath.arg(v / prev)
                if abs(inc) > mpmath.pi / 2:
                    raise ValueError("argument increments too large; use more points")
                total += inc
            prev = v
        return int(mpmath.nint(total / (2 * mpmath.pi)))
