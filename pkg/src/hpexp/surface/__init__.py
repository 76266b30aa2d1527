"""The three-sheeted surface of the inverse of z(w) = (w^2 - 1/3)/(w (w^2 - 1)).

Trajectories, sheet labels and regions are computed in double precision
(the curve tables feed quadratures with tolerances around 1e-10); sheet
values and branch data are polished to any requested precision.
"""

from ..numerics.apcomplex import APComplex, as_mpc
from .branch import BranchData, branch_points
from .curves import FAMILY, LABELS, CurveSet, CurveTable, trace_curves
from .frames import SheetFrame, make_frame
from .regions import RegionLabel, classify_region
from .sheets import SheetLabeler
from .sqrt import sqrt_branch


def sheet_values(z, curves=None, precision_bits=None):
    """psi_P, psi_Q, psi_R at ``z``.

    Raises
    ------
    NearBranchPoint
        Within 1e-12 of a branch point.
    OriginDegenerate
        At z = 0.
    """
    if curves is None:
        curves = trace_curves()
    labels = curves.labeler.labels(complex(as_mpc(z)))
    return make_frame(z, labels, precision_bits)


__all__ = [
    "APComplex", "BranchData", "CurveSet", "CurveTable", "FAMILY", "LABELS", "RegionLabel",
    "SheetFrame", "SheetLabeler", "branch_points", "classify_region", "sheet_values",
    "sqrt_branch", "trace_curves",
]
