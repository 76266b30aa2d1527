"""The branch of sqrt(3 w^4 + 1) with cuts psi_P+(Gamma_P) and psi_R+(Gamma_R).

With straight cuts on the chords [w_1, w_2] and [w_3, w_4] the product
sqrt(3) s(w; w_1, w_2) s(w; w_3, w_4), where s(w; a, b) = h sqrt(u - 1) sqrt(u + 1)
with u = (w - m)/h, m = (a + b)/2, h = (b - a)/2, is analytic off the chords and
positive for large positive w. Moving the cuts to the curved arcs flips the
sign in the lunes between chord and arc. The left lune consists exactly of
the P-sheet values with Re w > Re w_1, the right lune of the R-sheet values
with Re w < Re w_3.
"""

from contextlib import contextmanager

import mpmath
import numpy as np

from ..errors import OnCut
from ..numerics.apcomplex import APComplex, as_mpc
from .branch import branch_points
from .sheets import distance_to_polyline, points_inside

# Sign of the branch on psi(R_Q), the region containing the anchor w = 0.
# Setting it to -1 corrupts the anchor (negative control for the test suite).
_ANCHOR_SIGN = 1


@contextmanager
def corrupted_anchor():
    """Flip the sign of the branch on psi(R_Q) while the block runs (negative control)."""
    global _ANCHOR_SIGN
    saved = _ANCHOR_SIGN
    _ANCHOR_SIGN = -saved
    try:
        yield
    finally:
        _ANCHOR_SIGN = saved


def _chord_factor(w, a, b):
    m = (a + b) / 2
    h = (b - a) / 2
    u = (w - m) / h
    return h * mpmath.sqrt(u - 1) * mpmath.sqrt(u + 1)


def chord_sqrt(w, precision_bits):
    """sqrt(3 w^4 + 1) with straight cuts on the chords."""
    bd = branch_points(precision_bits)
    with mpmath.workprec(precision_bits + 10):
        w1, w2, w3, w4 = (x.value for x in bd.w)
        w = as_mpc(w)
        return mpmath.sqrt(3) * _chord_factor(w, w1, w2) * _chord_factor(w, w3, w4)


def in_lune(w, sheet):
    """Whether a value of the given sheet lies in the lune between chord and arc."""
    w = complex(w)
    edge = 3 ** -0.25 / 2**0.5
    if sheet == "P":
        return w.real > -edge
    if sheet == "R":
        return w.real < edge
    return False


def sqrt_branch(w, sheet=None, curves=None, precision_bits=None):
    """sqrt(3 w^4 + 1) on the branch fixed by the cuts psi_P+(Gamma_P), psi_R+(Gamma_R).

    Parameters
    ----------
    w : APComplex or number
    sheet : {"P", "Q", "R"}, optional
        Sheet the value ``w`` belongs to. When given, the branch is decided
        exactly, including for boundary values on the cuts (the limit taken
        from that sheet). Otherwise ``w`` is located against the traced
        arcs and must stay 1e-10 away from them.
    curves : CurveSet, optional
        Needed only when ``sheet`` is None; defaults to the standard trace.
    precision_bits : int, optional

    Raises
    ------
    OnCut
    """
    if precision_bits is None:
        precision_bits = w.precision_bits if isinstance(w, APComplex) else mpmath.mp.prec
    value = chord_sqrt(w, precision_bits)
    if curves is None and (sheet is None or _ANCHOR_SIGN != 1):
        from .curves import trace_curves

        curves = trace_curves()
    if sheet is None:
        flip = False
        for label in ("P", "R"):
            arc = curves[label].psi_s
            wc = complex(as_mpc(w))
            if distance_to_polyline(arc, wc)[0] < 1e-4:
                flip ^= _near_arc_flip(wc, label, curves)
            else:
                flip ^= bool(points_inside(arc, np.array([wc]))[0])
    else:
        flip = in_lune(complex(as_mpc(w)), sheet)
    if _ANCHOR_SIGN != 1 and (sheet or _sheet_of(complex(as_mpc(w)), curves)) == "Q":
        flip = not flip
    with mpmath.workprec(precision_bits):
        return APComplex.from_value(-value if flip else value, precision_bits)


def _sheet_of(w, curves):
    from .algebra import z_of_w

    frame = curves.labeler.labels(z_of_w(w))
    return min("PQR", key=lambda s: abs(frame[s] - w))


def _near_arc_flip(w, label, curves):
    # Decide through the sheet of w: w is in the lune iff it is a value of that sheet.
    from .algebra import z_of_w

    z = z_of_w(w)
    lab = curves.labeler
    cut = lab.cuts[label]
    if lab.side_of_cut(z, label) == 0:
        raise OnCut(f"w = {w} lies on the lift of Gamma_{label}")
    frame = lab.labels(z)
    sheet = min("PQR", key=lambda s: abs(frame[s] - w))
    return sheet == cut.sheet and in_lune(w, sheet)
