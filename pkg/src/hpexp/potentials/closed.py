"""Closed forms of exp(g_S) and exp(2 phi_S) in terms of sheet values.

The g-functions are only defined modulo 2 pi i, so their exponentials are
the natural objects. Each is an elementary function of the sheet values
at z and can be evaluated at any precision. They are cross-checked against
the curve quadratures of :mod:`.gfun` in the test suite.
"""

import mpmath


def exp_g_A(z, wq):
    """exp(g_A(z)) from psi_Q(z)."""
    w2 = wq * wq
    return -3 * z**3 * wq * (w2 - 1) * mpmath.exp(-2 * w2 / (w2 - 1))


def exp_g_P(wp):
    """exp(g_P(z)) from psi_P(z)."""
    return 2 * mpmath.exp((wp + 1) * (2 * wp - 1) / (wp * (wp - 1))) / (3 * wp * (wp * wp - 1))


def exp_g_R(wr):
    """exp(g_R(z)) from psi_R(z)."""
    return 2 * mpmath.exp((wr - 1) * (2 * wr + 1) / (wr * (wr + 1))) / (3 * wr * (wr * wr - 1))


def exp_g_B(z, wp, wq, in_star):
    """exp(g_B(z)); ``in_star`` tells whether z lies in D_P*.

    Outside D_P* this is z^3 exp(-g_P); inside it is exp(g_A - 3z - ell)
    with exp(ell) = -2.
    """
    if in_star:
        return exp_g_A(z, wq) * mpmath.exp(-3 * z) / -2
    return z**3 / exp_g_P(wp)


def exp_g_C(z, wr, wq, in_star):
    """exp(g_C(z)); ``in_star`` tells whether z lies in D_R*."""
    if in_star:
        return exp_g_A(z, wq) * mpmath.exp(3 * z) / -2
    return z**3 / exp_g_R(wr)


def exp_2phi(z, wq, ws):
    """exp(2 phi_S(z)) = exp(3 z (psi_Q - psi_S)) q(psi_S)/q(psi_Q) with q(w) = w (w^2 - 1).

    Single valued, unlike phi_S itself, which changes by 3 pi i around the origin.
    """
    return mpmath.exp(3 * z * (wq - ws)) * (ws * (ws * ws - 1)) / (wq * (wq * wq - 1))
