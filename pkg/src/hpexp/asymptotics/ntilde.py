"""The outer parametrix N~ built from the sheet values.

Column j of N~ holds F~_1, F~_2, F~_3 evaluated at the value of sheet j
(order P, Q, R). G~ is chosen according to the sheet the value belongs to,
and sqrt(3 w^4 + 1) is the branch with cuts on psi_P+(Gamma_P) and
psi_R+(Gamma_R).
"""

import mpmath

from .context import default_context

SHEETS = "PQR"


def g_tilde(w, sheet):
    """G~(w) for a value ``w`` of the given sheet."""
    if sheet == "P":
        return mpmath.exp((w + 1) * (2 * w - 1) / (w * (w - 1))) / w
    if sheet == "Q":
        w2 = w * w
        return (w2 - 1) / (w2 - mpmath.mpf(1) / 3) * mpmath.exp(2 * w2 / (w2 - 1))
    if sheet == "R":
        return mpmath.exp((w - 1) * (2 * w + 1) / (w * (w + 1))) / w
    raise ValueError(f"unknown sheet {sheet!r}")


def f_tilde(w, sqrt_value, sheet):
    """(F~_1, F~_2, F~_3) at a value ``w`` of ``sheet`` with sqrt(3 w^4 + 1) = ``sqrt_value``."""
    g = g_tilde(w, sheet) / sqrt_value
    return -w * (w - 1) * g, (w * w - 1) * g / 3, w * (w + 1) * g


def ntilde_point(pt):
    """N~ as a 3x3 list of mpc from :class:`PointData`."""
    with mpmath.workprec(pt.precision_bits):
        cols = [f_tilde(pt.psi[s], pt.sqrt[s], s) for s in SHEETS]
        return [[cols[j][i] for j in range(3)] for i in range(3)]


def second_row(pt):
    """N~_21, N~_22, N~_23 through the potentials g_P, g_A, g_R."""
    with mpmath.workprec(pt.precision_bits):
        wp, wq, wr = (pt.psi[s] for s in SHEETS)
        n21 = (wp * wp - 1) ** 2 * pt.e_gP / (2 * pt.sqrt["P"])
        n22 = -pt.z**2 * (wq * wq - 1) ** 2 / (pt.e_gA * pt.sqrt["Q"])
        n23 = (wr * wr - 1) ** 2 * pt.e_gR / (2 * pt.sqrt["R"])
        return [n21, n22, n23]


def ntilde(z, precision_bits=None, ctx=None):
    """N~(z) as a 3x3 list of APComplex.

    Parameters
    ----------
    z : number or APComplex
        Off Gamma_P and Gamma_R and away from the branch points. On a cut
        the boundary values from the left side are returned.
    precision_bits : int, optional
    ctx : AsymptoticContext, optional
    """
    ctx = ctx or default_context(precision_bits)
    m = ntilde_point(ctx.point(z))
    return [[ctx.wrap(x) for x in row] for row in m]


def jump_P(z):
    """Jump matrix of N~ on Gamma_P: N~+ = N~- J."""
    e = mpmath.exp(3 * z)
    return [[0, 1 / (z * e), 0], [-z * e, 0, 0], [0, 0, 1]]


def jump_R(z):
    """Jump matrix of N~ on Gamma_R."""
    e = mpmath.exp(3 * z)
    return [[1, 0, 0], [0, 0, -z / e], [0, e / z, 0]]


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def jump_residual(label, j, ctx=None):
    """max |N~+ - N~- J| at node j of Gamma_P or Gamma_R."""
    ctx = ctx or default_context()
    plus = ntilde_point(ctx.boundary_point(label, j, 1))
    minus = ntilde_point(ctx.boundary_point(label, j, -1))
    with mpmath.workprec(ctx.work_bits):
        z = mpmath.mpc(complex(ctx.curves[label].nodes[j]))
        jump = jump_P(z) if label == "P" else jump_R(z)
        prod = matmul(minus, jump)
        return max(abs(plus[i][k] - prod[i][k]) for i in range(3) for k in range(3))


__all__ = ["det3", "f_tilde", "g_tilde", "jump_P", "jump_R", "jump_residual",
           "matmul", "ntilde", "ntilde_point", "second_row"]
