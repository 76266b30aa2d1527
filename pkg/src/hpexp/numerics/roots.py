"""Simultaneous polynomial root finding (Aberth-Ehrlich) in mpmath."""

import random

import mpmath
import numpy as np

from ..errors import NoConvergence
from .apcomplex import APComplex, as_mpc
from .rational import RationalPoly


def _horner(cs, z):
    """p(z), p'(z) and sum |c_k| |z|^k for descending coefficients ``cs``."""
    p = cs[0]
    d = mpmath.mpc(0)
    az = abs(z)
    mag = abs(cs[0])
    for c in cs[1:]:
        d = d * z + p
        p = p * z + c
        mag = mag * az + abs(c)
    return p, d, mag


def fujiwara_bound(cs):
    """Fujiwara's bound on root moduli for descending coefficients."""
    lead = abs(cs[0])
    d = len(cs) - 1
    terms = []
    for k in range(1, d + 1):
        ratio = abs(cs[k]) / lead
        if k == d:
            ratio /= 2
        if ratio:
            terms.append(ratio ** (mpmath.mpf(1) / k))
    return 2 * max(terms) if terms else mpmath.mpf(1)


def _initial_guesses(cs, d):
    """Companion eigenvalues in double precision, or a circle of Fujiwara radius."""
    try:
        approx = np.roots(np.array([complex(c) for c in cs]))
    except (OverflowError, ValueError, np.linalg.LinAlgError):
        approx = None
    if approx is not None and len(approx) == d and np.all(np.isfinite(approx)):
        # nudge apart numerically coincident starts
        rng = np.random.default_rng(0)
        approx = approx + 1e-10 * (1 + abs(approx)) * np.exp(2j * np.pi * rng.random(d))
        return [mpmath.mpc(z) for z in approx]
    rng = random.Random(0)
    theta0 = mpmath.mpf(rng.random()) * 2 * mpmath.pi
    radius = fujiwara_bound(cs)
    return [radius * mpmath.expj(theta0 + 2 * mpmath.pi * k / d) for k in range(d)]


def find_poly_roots(p, precision_bits, anchor=0, max_sweeps=200, check_vieta=False):
    """All roots of a polynomial by Aberth-Ehrlich iteration.

    Parameters
    ----------
    p : RationalPoly or sequence
        Coefficients in ascending order (numbers, mpc or APComplex).
    precision_bits : int
        Working precision.
    anchor : complex, optional
        Roots are returned sorted by distance to ``anchor``, then by argument.
    max_sweeps : int, optional
        Iteration cap.
    check_vieta : bool, optional
        Verify the sum and product of the roots against the coefficients.

    Returns
    -------
    list of APComplex

    Raises
    ------
    NoConvergence
        If some root fails the residual bound after ``max_sweeps`` sweeps.
    """
    with mpmath.workprec(precision_bits):
        if isinstance(p, RationalPoly):
            asc = [mpmath.mpc(c) for c in p.mp_coeffs()]
        else:
            asc = [as_mpc(c) for c in p]
        while asc and asc[-1] == 0:
            asc.pop()
        d = len(asc) - 1
        if d < 1:
            raise ValueError("degree must be at least 1")
        # Descending and monic.
        cs = [c / asc[-1] for c in reversed(asc)]
        cmax = max(abs(c) for c in asc)
        eps = mpmath.mpf(2) ** (-precision_bits)

        zs = _initial_guesses(cs, d)
        done = [False] * d

        sweeps = 0
        while not all(done):
            if sweeps >= max_sweeps:
                break
            sweeps += 1
            for k in range(d):
                if done[k]:
                    continue
                zk = zs[k]
                pk, dk, mag = _horner(cs, zk)
                # Residual at the rounding-error floor: no further progress possible.
                if abs(pk) <= 4 * d * eps * mag:
                    done[k] = True
                    continue
                s = mpmath.mpc(0)
                for j in range(d):
                    if j != k:
                        s += 1 / (zk - zs[j])
                ratio = pk / dk if dk != 0 else mpmath.mpc(eps)
                step = ratio / (1 - ratio * s)
                zs[k] = zk - step
                if abs(step) <= eps * max(1, abs(zk)):
                    done[k] = True

        # Post-condition on the original (unnormalized) coefficients.
        desc = list(reversed(asc))
        bound_scale = mpmath.mpf(2) ** (-mpmath.mpf(precision_bits) / 2) * cmax
        worst = mpmath.mpf(0)
        for z in zs:
            val = _horner(desc, z)[0]
            bound = bound_scale * max(1, abs(z)) ** d
            worst = max(worst, abs(val) / bound)
        if worst > 1:
            raise NoConvergence(
                f"Aberth iteration stopped after {sweeps} sweeps; residual ratio {mpmath.nstr(worst, 5)}",
                residual=worst,
            )

        if check_vieta:
            _vieta_check(cs, zs, precision_bits)

        a = mpmath.mpc(anchor)
        zs.sort(key=lambda z: (abs(z - a), mpmath.arg(z - a)))
        return [APComplex.from_value(z, precision_bits) for z in zs]


def _vieta_check(cs, zs, precision_bits):
    d = len(zs)
    tol = mpmath.mpf(2) ** (-mpmath.mpf(precision_bits) / 2)
    s = mpmath.fsum(zs)
    if abs(s + cs[1]) > tol * max(1, abs(cs[1])):
        raise ArithmeticError("Vieta sum check failed")
    prod = mpmath.fprod(zs)
    target = (-1) ** d * cs[-1]
    if abs(prod - target) > tol * max(1, abs(target)):
        raise ArithmeticError("Vieta product check failed")
