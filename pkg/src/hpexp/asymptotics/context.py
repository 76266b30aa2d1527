"""Shared evaluation state for the asymptotic formulas."""

import enum
from dataclasses import dataclass
from functools import cached_property

import mpmath

from ..config import default_precision
from ..numerics.apcomplex import APComplex, as_mpc
from ..potentials.closed import exp_2phi, exp_g_A, exp_g_B, exp_g_C, exp_g_P, exp_g_R
from ..potentials.phi import F1Map, phi_evaluator
from ..surface import branch_points, classify_region, trace_curves
from ..surface.frames import polish_mp
from ..surface.regions import D_P_STAR, D_R_STAR
from ..surface.sheets import distance_to_polyline
from ..surface.sqrt import sqrt_branch

SIDE_OFFSET = 1e-6


class FamilyTag(str, enum.Enum):
    """The scaled polynomials A_n, B_n, C_n and the remainders E1_n, E2_n."""

    A = "A"
    B = "B"
    C = "C"
    E1 = "E1"
    E2 = "E2"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        return cls(str(value).upper())


@dataclass(frozen=True)
class PointData:
    """Sheet values, square roots and region of one evaluation point.

    For a point on one of the traced curves, ``side`` is the region on the
    left of the curve and the sheet values are the boundary values from
    that side. Otherwise ``side`` equals ``region``.
    """

    z: mpmath.mpc
    region: object
    side: object
    psi: dict
    sqrt: dict
    precision_bits: int

    @property
    def curve(self):
        return self.region.curve

    def in_side(self, part):
        return part in self.side

    def x(self, sheet):
        """z^2 (psi^2 - 1)^2 / sqrt(3 psi^4 + 1) on the given sheet."""
        w = self.psi[sheet]
        return self.z**2 * (w * w - 1) ** 2 / self.sqrt[sheet]

    @cached_property
    def e_gA(self):
        return exp_g_A(self.z, self.psi["Q"])

    @cached_property
    def e_gP(self):
        return exp_g_P(self.psi["P"])

    @cached_property
    def e_gR(self):
        return exp_g_R(self.psi["R"])

    @cached_property
    def e_gB(self):
        return exp_g_B(self.z, self.psi["P"], self.psi["Q"], self.in_side(D_P_STAR))

    @cached_property
    def e_gC(self):
        return exp_g_C(self.z, self.psi["R"], self.psi["Q"], self.in_side(D_R_STAR))

    def e_2phi(self, sheet):
        return exp_2phi(self.z, self.psi["Q"], self.psi[sheet])


class AsymptoticContext:
    """Curves, region classifier, phi and f_1 evaluators and constants at one precision.

    Parameters
    ----------
    precision_bits : int, optional
        Working precision of every formula; defaults to the package default.
    curves : CurveSet, optional
        Traced curves; defaults to the standard trace.
    """

    def __init__(self, precision_bits=None, curves=None):
        self.precision_bits = precision_bits or default_precision()
        self.curves = curves or trace_curves()
        self.phi_P = phi_evaluator("P", self.curves)
        self.phi_R = phi_evaluator("R", self.curves)
        self.f1_map = F1Map(self.curves)
        self.branch = branch_points(self.precision_bits)
        with mpmath.workprec(self.precision_bits + 20):
            self.ell = mpmath.mpc(mpmath.log(2), -mpmath.pi)
            self.c1 = mpmath.cbrt(2) * mpmath.power(3, mpmath.mpf(5) / 12) * mpmath.expjpi(mpmath.mpf(-7) / 36)

    @property
    def work_bits(self):
        return self.precision_bits + 20

    def z1(self):
        return self.branch.z[0].value

    def _left_probe(self, z, label):
        c = self.curves[label]
        _, i = distance_to_polyline(c.nodes, z)
        i = min(max(i, 1), len(c.nodes) - 2)
        t = c.tangent[i]
        if t == 0:
            t = (c.nodes[i + 1] - c.nodes[i - 1]) / abs(c.nodes[i + 1] - c.nodes[i - 1])
        return z + SIDE_OFFSET * 1j * t

    def point(self, z):
        """:class:`PointData` at ``z`` (a number, mpc or APComplex)."""
        zc = complex(as_mpc(z))
        region = classify_region(zc, self.curves)
        probe = zc
        side = region
        if region.on_curve:
            probe = self._left_probe(zc, region.curve)
            side = classify_region(probe, self.curves)
        labels = self.curves.labeler.labels(probe)
        prec = self.work_bits
        with mpmath.workprec(prec):
            zz = as_mpc(z)
            psi = {s: polish_mp(zz, labels[s], prec) for s in "PQR"}
            sq = {s: sqrt_branch(APComplex.from_value(psi[s], prec), sheet=s).value for s in "PQR"}
        return PointData(zz, region, side, psi, sq, prec)

    def boundary_point(self, label, j, side=1):
        """:class:`PointData` at node j of a cut, with the boundary values from the left (+1) or right (-1)."""
        c = self.curves[label]
        if not c.is_cut:
            raise ValueError("boundary points are defined on Gamma_P and Gamma_R")
        z = complex(c.nodes[j])
        probe = z + side * SIDE_OFFSET * 1j * c.tangent[j]
        labels = self.curves.labeler.labels(probe)
        prec = self.work_bits
        with mpmath.workprec(prec):
            zz = mpmath.mpc(z)
            psi = {s: polish_mp(zz, labels[s], prec) for s in "PQR"}
            sq = {s: sqrt_branch(APComplex.from_value(psi[s], prec), sheet=s).value for s in "PQR"}
        region = classify_region(z, self.curves)
        return PointData(zz, region, classify_region(probe, self.curves), psi, sq, prec)

    def wrap(self, value):
        return APComplex.from_value(value, self.precision_bits)


_CONTEXTS = {}


def default_context(precision_bits=None):
    """Cached context for the standard curves at ``precision_bits``."""
    bits = precision_bits or default_precision()
    if bits not in _CONTEXTS:
        _CONTEXTS[bits] = AsymptoticContext(bits)
    return _CONTEXTS[bits]
