"""The eight trajectory curves with their sheet pairs and densities."""

import cmath
import csv
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..errors import LabelAmbiguous, NegativeDensity
from .algebra import W_BRANCH, Z_BRANCH
from .sheets import SheetLabeler
from .tracer import RawTrace, seed_angles, trace_trajectory

LABELS = ("P", "P*", "R", "R*", "E1", "E2", "E3", "E4")
FAMILY = {"P": "P", "P*": "P", "E1": "P", "E2": "P", "R": "R", "R*": "R", "E3": "R", "E4": "R"}


@dataclass(frozen=True)
class CurveTable:
    """A traced curve oriented so that its measure density is positive.

    Attributes
    ----------
    label : str
        One of "P", "P*", "R", "R*", "E1", "E2", "E3", "E4" (the curve Gamma_label).
    sheet : str
        "P" or "R"; the density is (3/(2 pi i)) (psi_Q - psi_sheet) ds.
    nodes : ndarray
        Points on the curve; branch point endpoints are included exactly.
    psi_q, psi_s : ndarray
        psi_Q and psi_sheet at the nodes, boundary values from the left for
        the cuts Gamma_P and Gamma_R.
    levels : ndarray
        pi times the running mass, obtained from the closed form of the
        integral at each node.
    start, end : int or None
        Branch point indices (0-based) at the ends; None stands for the
        truncation circle.
    """

    label: str
    sheet: str
    nodes: np.ndarray
    psi_q: np.ndarray
    psi_s: np.ndarray
    levels: np.ndarray
    start: object
    end: object

    @property
    def is_cut(self):
        return self.label in ("P", "R")

    @property
    def rho(self):
        """Complex density (3/(2 pi i)) (psi_Q - psi_S) with respect to ds."""
        return 1.5 / (math.pi * 1j) * (self.psi_q - self.psi_s)

    @property
    def tangent(self):
        """Unit tangents from the level-set property phi' T = i |phi'| (zero at branch points)."""
        d = 1.5 * (self.psi_q - self.psi_s)
        with np.errstate(invalid="ignore", divide="ignore"):
            t = 1j * np.abs(d) / d
        return np.where(np.abs(d) > 0, t, 0)

    @property
    def density(self):
        """Density with respect to arclength; real and nonnegative."""
        return (self.rho * self.tangent).real

    @property
    def arclength(self):
        return np.concatenate([[0.0], np.cumsum(np.abs(np.diff(self.nodes)))])

    def real_crossings(self):
        """Real parts where the polyline meets the real axis."""
        z = self.nodes
        out = []
        for a, b in zip(z[:-1], z[1:]):
            if (a.imag > 0) != (b.imag > 0) and a.imag != b.imag:
                t = a.imag / (a.imag - b.imag)
                out.append(a.real + t * (b.real - a.real))
        return out


@dataclass(frozen=True)
class CurveSet:
    """All eight curves traced with one step size, plus the sheet labeler built from the cuts."""

    curves: dict
    labeler: SheetLabeler
    step: float
    radius: float

    def __getitem__(self, label):
        return self.curves[label]

    def family(self, sheet):
        return [c for c in self.curves.values() if c.sheet == sheet]

    def to_csv(self, path):
        """Write label, node index, Re z, Im z, Re density, Im density for every node."""
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["label", "node", "re_z", "im_z", "re_density", "im_density"])
            for label in LABELS:
                c = self.curves[label]
                for i, (z, r) in enumerate(zip(c.nodes, c.rho)):
                    w.writerow([label, i, repr(z.real), repr(z.imag), repr(r.real), repr(r.imag)])


def _trace_all(k, step, radius):
    targets = {j: (Z_BRANCH[j], W_BRANCH[j]) for j in range(4) if j != k}
    return [trace_trajectory(k, Z_BRANCH[k], W_BRANCH[k], th, step, radius, targets)
            for th in seed_angles(W_BRANCH[k])]


def _split_family(traces, partner, leftmost):
    closed = [t for t in traces if t.end == partner]
    escaped = [t for t in traces if t.end is None]
    if len(closed) != 2 or len(escaped) != 1:
        ends = [t.end for t in traces]
        raise LabelAmbiguous(f"unexpected terminal behaviour {ends} from z{traces[0].start + 1}")
    key = (lambda t: min(t.nodes.real)) if leftmost else (lambda t: -max(t.nodes.real))
    cut, star = sorted(closed, key=key)
    return cut, star, escaped[0]


def _free_direction(k, arriving, step, radius):
    # the seed at z_k pointing away from the two curves that end there
    dirs = [cmath.phase(t.nodes[-2] - Z_BRANCH[k]) for t in arriving]

    def gap(th):
        return min(abs(cmath.phase(cmath.exp(1j * (th - d)))) for d in dirs)

    theta = max(seed_angles(W_BRANCH[k]), key=gap)
    targets = {j: (Z_BRANCH[j], W_BRANCH[j]) for j in range(4) if j != k}
    trace = trace_trajectory(k, Z_BRANCH[k], W_BRANCH[k], theta, step, radius, targets)
    if trace.end is not None:
        raise LabelAmbiguous(f"the free direction at z{k + 1} does not escape")
    return trace


def _finish_cut(label, trace, cut):
    if cut.a_is_q_left:
        q, s = trace.wa, trace.wb
    else:
        q, s = trace.wb, trace.wa
    table = CurveTable(label, cut.sheet, trace.nodes, q, s, trace.levels, trace.start, trace.end)
    if np.min(table.density) < -1e-10:
        raise NegativeDensity(f"density of mu on Gamma_{label} is negative for both orientations")
    return table


def _finish_free(label, sheet, trace, labeler):
    i = len(trace.nodes) // 2
    lab = labeler.labels(trace.nodes[i])
    if abs(lab["Q"] - trace.wb[i]) < abs(lab["Q"] - trace.wa[i]):
        trace = trace.reversed()
        i = len(trace.nodes) - 1 - i
    if abs(lab["Q"] - trace.wa[i]) > 1e-8 or abs(lab[sheet] - trace.wb[i]) > 1e-8:
        raise LabelAmbiguous(f"Gamma_{label} does not separate sheets Q and {sheet}")
    table = CurveTable(label, sheet, trace.nodes, trace.wa, trace.wb, trace.levels,
                       trace.start, trace.end)
    if np.min(table.density) < -1e-10:
        raise NegativeDensity(f"density on Gamma_{label} changes sign")
    return table


@lru_cache(maxsize=8)
def trace_curves(step=0.01, radius=10.0):
    """Trace Gamma_P, Gamma_P*, Gamma_R, Gamma_R* and the four unbounded curves.

    Parameters
    ----------
    step : float
        Maximal node spacing (in z and in the followed roots); at most 1e-2.
    radius : float
        Truncation radius for the unbounded curves; at least 5.

    Returns
    -------
    CurveSet
    """
    if not 0 < step <= 1e-2:
        raise ValueError("step must be in (0, 1e-2]")
    if radius < 5:
        raise ValueError("truncation radius must be at least 5")
    cut_p, star_p, e1 = _split_family(_trace_all(0, step, radius), 1, leftmost=True)
    cut_r, star_r, e3 = _split_family(_trace_all(2, step, radius), 3, leftmost=False)
    labeler = SheetLabeler(cut_p, cut_r)
    e2 = _free_direction(1, [cut_p, star_p], step, radius)
    e4 = _free_direction(3, [cut_r, star_r], step, radius)
    curves = {
        "P": _finish_cut("P", cut_p, labeler.cuts["P"]),
        "R": _finish_cut("R", cut_r, labeler.cuts["R"]),
        "P*": _finish_free("P*", "P", star_p, labeler),
        "R*": _finish_free("R*", "R", star_r, labeler),
        "E1": _finish_free("E1", "P", e1, labeler),
        "E2": _finish_free("E2", "P", e2, labeler),
        "E3": _finish_free("E3", "R", e3, labeler),
        "E4": _finish_free("E4", "R", e4, labeler),
    }
    return CurveSet(curves, labeler, step, radius)


__all__ = ["CurveSet", "CurveTable", "LABELS", "FAMILY", "RawTrace", "trace_curves"]
