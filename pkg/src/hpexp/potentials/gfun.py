"""Complex logarithmic potentials g_S(z) = int log(z - s) dmu_S(s), modulo 2 pi i."""

import numpy as np

from ..numerics.apcomplex import APComplex, as_mpc
from ..config import default_precision
from .measures import SUPPORTS, curve_rule

G_MEASURES = ("P", "R", "A", "B", "C")


def _log_sum(z, pts, wts):
    # log(z - s) with its argument continued along the ordered points
    d = z - pts
    inc = np.angle(d[1:] / d[:-1])
    arg = np.angle(d[0]) + np.concatenate([[0.0], np.cumsum(inc)])
    return complex(np.sum(wts * (np.log(np.abs(d)) + 1j * arg)))


def _check(S):
    if S == "Q":
        raise NotImplementedError("no measure mu_Q is defined, so g_Q is not available")
    if S not in G_MEASURES:
        raise ValueError(f"g is defined for {G_MEASURES}, got {S!r}")


def g_value(z, S, step=0.01, radius=10.0):
    """g_S(z) as a Python complex for z off the support.

    Raises
    ------
    OnSupport
    """
    _check(S)
    z = complex(z)
    total = 0j
    for label in SUPPORTS[S]:
        rule = curve_rule(step, radius, label)
        total += _log_sum(z, *rule.rule_at(z))
    return total


def g_boundary(S, label, j, side, step=0.01, radius=10.0):
    """Boundary value of g_S at node j of the curve Gamma_label from the left (+1) or right (-1)."""
    _check(S)
    if label not in SUPPORTS[S]:
        raise ValueError(f"Gamma_{label} is not part of the support of mu_{S}")
    if side not in (1, -1):
        raise ValueError("side must be +1 or -1")
    rule = curve_rule(step, radius, label)
    z = complex(rule.curve.nodes[j])
    (pb, wb), (pa, wa) = rule.rule_split(j)
    db, da = z - pb, z - pa
    arg_b = np.angle(db[0]) + np.concatenate([[0.0], np.cumsum(np.angle(db[1:] / db[:-1]))])
    jump = np.angle(-da[0] / db[-1]) + side * np.pi
    arg_a = arg_b[-1] + jump + np.concatenate([[0.0], np.cumsum(np.angle(da[1:] / da[:-1]))])
    total = complex(np.sum(wb * (np.log(np.abs(db)) + 1j * arg_b)) + np.sum(wa * (np.log(np.abs(da)) + 1j * arg_a)))
    for other in SUPPORTS[S]:
        if other != label:
            total += _log_sum(z, *curve_rule(step, radius, other).rule_at(z))
    return total


def g_of(z, S, step=0.01, radius=10.0, precision_bits=None):
    """g_S(z) modulo 2 pi i as an APComplex (double-precision accuracy)."""
    if precision_bits is None:
        precision_bits = z.precision_bits if isinstance(z, APComplex) else default_precision()
    return APComplex.from_value(g_value(complex(as_mpc(z)), S, step, radius), precision_bits)
