"""Regions of the plane cut out by the eight curves."""

from dataclasses import dataclass

import numpy as np

from .algebra import re_phi
from .sheets import beside_polyline, distance_to_polyline, points_inside

D_INF_P, D_INF_R, D_INF_U, D_INF_L = "D_inf_P", "D_inf_R", "D_inf_U", "D_inf_L"
D_P_STAR, D_R_STAR = "D_P_star", "D_R_star"


@dataclass(frozen=True)
class RegionLabel:
    """Where a point lies.

    ``parts`` lists the open domains containing the point; it has two
    entries in the overlap of D_P* and D_R* (the two bounded domains
    intersect around the origin). ``curve`` names the curve for points on
    one of the traced curves, in which case ``parts`` is empty.
    """

    parts: tuple = ()
    curve: str = None

    @property
    def name(self):
        return f"OnCurve({self.curve})" if self.curve else "&".join(self.parts)

    def __contains__(self, part):
        return part in self.parts

    @property
    def on_curve(self):
        return self.curve is not None


def re_phi_sheets(z, labels, sheet):
    """Re phi_S(z) = Re (3/2) int_{z_k}^z (psi_Q - psi_S) ds, single valued."""
    return float(re_phi(z, labels["Q"], labels[sheet]))


def _on_curve(z, curves, tol):
    lab = curves.labeler
    for label, c in curves.curves.items():
        dist, i = distance_to_polyline(c.nodes, z)
        if dist > 0.02:
            continue
        if c.is_cut:
            side = lab.side_of_cut(z, label)
            cut = lab.cuts[label]
            _, _, _, dphi = cut.continue_pair(min(max(i, 1), len(c.nodes) - 2), z)
            wa = cut.trace.wa[i]
            wb = cut.trace.wb[i]
            scale = abs(1.5 * (wa - wb)) or 1.0
            if side == 0 or abs(dphi.real) / scale < tol:
                return label
        else:
            labels = lab.labels(z)
            d = abs(1.5 * (labels["Q"] - labels[c.sheet])) or 1.0
            if abs(re_phi_sheets(z, labels, c.sheet)) / d < tol:
                return label
    return None


def classify_region(z, curves=None, tol=1e-9):
    """Region label of ``z`` with respect to the traced curves.

    D_inf_P and D_P* are where Re phi_P < 0; D_P* is the part enclosed by
    Gamma_P and Gamma_P*. The same with R. The rest splits into the upper
    and lower unbounded domains.
    """
    if curves is None:
        from .curves import trace_curves

        curves = trace_curves()
    z = complex(z)
    label = _on_curve(z, curves, tol)
    if label is not None:
        return RegionLabel((), label)
    lab = curves.labeler
    labels = lab.labels(z)
    parts = []
    for sheet, inf, star in (("P", D_INF_P, D_P_STAR), ("R", D_INF_R, D_R_STAR)):
        if re_phi_sheets(z, labels, sheet) < 0:
            parts.append(star if _inside_star(z, curves, sheet) else inf)
    if not parts:
        parts.append(D_INF_U if z.imag > 0 else D_INF_L)
    return RegionLabel(tuple(parts))


def _inside_star(z, curves, sheet):
    cut = curves[sheet]
    star = curves[sheet + "*"]
    if beside_polyline(cut.nodes, z, 0.05):
        # left of the traversal z_1 -> z_2 (resp. z_3 -> z_4) faces the bounded domain
        return _left_is_star(curves, sheet) == (curves.labeler.side_of_cut(z, sheet) > 0)
    ring = np.concatenate([cut.nodes, star.nodes[::-1] if star.start == cut.start else star.nodes])
    return bool(points_inside(ring, np.array([z]))[0])


def _left_is_star(curves, sheet):
    cut = curves[sheet]
    i = len(cut.nodes) // 2
    t = cut.nodes[i + 1] - cut.nodes[i - 1]
    probe = cut.nodes[i] + 0.1j * t / abs(t)
    star = curves[sheet + "*"]
    ring = np.concatenate([cut.nodes, star.nodes[::-1] if star.start == cut.start else star.nodes])
    return bool(points_inside(ring, np.array([probe]))[0])
