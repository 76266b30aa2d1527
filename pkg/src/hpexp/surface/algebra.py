"""The rational map z(w) = (w^2 - 1/3) / (w (w^2 - 1)) and its inverse branches.

Functions here work on Python complex numbers and numpy arrays alike.
"""

import cmath
import math

import numpy as np

SQRT3 = math.sqrt(3.0)
W_BRANCH = tuple(3 ** -0.25 * cmath.exp(-2j * math.pi * (2 * k + 1) / 8) for k in range(1, 5))
Z_BRANCH = tuple(3 ** -0.25 * cmath.exp(2j * math.pi * e / 24) for e in (7, 17, 19, 5))


def z_of_w(w):
    return (w * w - 1 / 3) / (w * (w * w - 1))


def dz_dw(w):
    return -(3 * w**4 + 1) / (3 * (w**3 - w) ** 2)


def d2z_dw2_at_branch(w):
    """z''(w) at a zero of z'(w)."""
    return -4 * w**3 / (w**3 - w) ** 2


def q_of_w(w):
    return w * (w * w - 1)


def cubic_residual(z, w):
    return z * w**3 - w * w - z * w + 1 / 3


def cubic_roots(z):
    """The three roots of z w^3 - w^2 - z w + 1/3 at a single nonzero z, polished."""
    r = np.roots([z, -1.0, -z, 1 / 3])
    return polish(z, r)


def polish(z, w, iterations=4):
    """Newton steps on the cubic; ``z`` and ``w`` broadcast."""
    w = np.asarray(w, dtype=complex)
    for _ in range(iterations):
        f = ((z * w - 1) * w - z) * w + 1 / 3
        d = (3 * z * w - 2) * w - z
        w = w - f / d
    return w


def phi_pair(z, wa, wb):
    """(3/2) * int (wa - wb) ds up to the log branch: 1.5 z (wa - wb) - 0.5 log(q(wa)/q(wb)).

    Uses the identity z w = (w^2 - 1/3)/(w^2 - 1) on the cubic. Returns the
    algebraic part and the ratio whose logarithm has to be tracked.
    """
    return 1.5 * z * (wa - wb), q_of_w(wa) / q_of_w(wb)


def re_phi(z, wa, wb):
    """Real part of the pair integral; single valued."""
    alg, ratio = phi_pair(z, wa, wb)
    return np.real(alg) - 0.5 * np.log(np.abs(ratio))


def exp_g_A(z, wq):
    """exp(g_A) in closed form from psi_Q."""
    w2 = wq * wq
    return -3 * z**3 * wq * (w2 - 1) * np.exp(-2 * w2 / (w2 - 1))


def exp_g_P(wp):
    """exp(g_P) in closed form from psi_P."""
    return 2 * np.exp((wp + 1) * (2 * wp - 1) / (wp * (wp - 1))) / (3 * wp * (wp * wp - 1))


def exp_g_R(wr):
    """exp(g_R) in closed form from psi_R."""
    return 2 * np.exp((wr - 1) * (2 * wr + 1) / (wr * (wr + 1))) / (3 * wr * (wr * wr - 1))
