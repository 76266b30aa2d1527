"""The measures of Definition-type densities (3/(2 pi i)) (psi_Q - psi_S) ds on the traced curves."""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from ..errors import NegativeDensity, OnSupport
from ..surface import trace_curves
from .quadrature import curve_panels, panel_points, refine_for, split_at_node

SUPPORTS = {
    "P": ("P",),
    "R": ("R",),
    "A": ("P", "R"),
    "B": ("P*",),
    "C": ("R*",),
    "E1": ("E1", "E2"),
    "E2": ("E3", "E4"),
}
EXPECTED_MASS = {"P": 1, "R": 1, "A": 2, "B": 2, "C": 2}


class CurveRule:
    """Quadrature points and weights rho(s) ds along one curve, with local refinement."""

    def __init__(self, curve):
        self.curve = curve
        self.panels = curve_panels(curve)
        self.pieces = [panel_points([p]) for p in self.panels]
        self.points = np.concatenate([p[0] for p in self.pieces])
        self.weights = np.concatenate([p[1] for p in self.pieces])
        za = np.array([p.za for p in self.panels])
        zb = np.array([p.zb for p in self.panels])
        self._a, self._d = za, zb - za
        self._len = np.abs(zb - za)

    @property
    def mass(self):
        return complex(self.weights.sum())

    def near_panels(self, z, ratio=1.0):
        d = self._d
        t = np.clip(((z - self._a) * np.conj(d)).real / np.maximum(np.abs(d) ** 2, 1e-300), 0, 1)
        dist = np.abs(self._a + t * d - z)
        return np.nonzero(dist < ratio * self._len)[0]

    def rule_at(self, z):
        """Points and weights suitable for a log kernel centered at an off-curve ``z``."""
        near = self.near_panels(z)
        if len(near) == 0:
            return self.points, self.weights
        pts, wts = [], []
        near = set(near.tolist())
        for i, piece in enumerate(self.pieces):
            if i in near:
                s, w = panel_points(refine_for(self.curve, [self.panels[i]], z))
            else:
                s, w = piece
            pts.append(s)
            wts.append(w)
        return np.concatenate(pts), np.concatenate(wts)

    def rule_split(self, j):
        """(before, after) point/weight pairs for a kernel singular at node j."""
        n = len(self.panels)
        if not 2 <= j <= n - 2:
            raise OnSupport("boundary values are taken at interior nodes away from the ends")
        z = self.curve.nodes[j]
        before, after = split_at_node(self.curve, self.panels, j)
        before = refine_for(self.curve, before[:-1], z) + [before[-1]]
        after = [after[0]] + refine_for(self.curve, after[1:], z)
        return panel_points(before), panel_points(after)


@lru_cache(maxsize=None)
def curve_rule(step, radius, label):
    return CurveRule(trace_curves(step, radius)[label])


@dataclass(frozen=True)
class MeasureOnCurve:
    """A measure given by its curves; ``density`` maps curve label to node densities (arclength)."""

    label: str
    curves: tuple
    rules: tuple
    density: dict = field(repr=False)

    @property
    def mass(self):
        """Total mass (complex; the imaginary part measures the quadrature error)."""
        return sum(r.mass for r in self.rules)

    def running_mass(self, label):
        """Cumulative integral of rho ds over the panels of one curve, at panel ends."""
        rule = next(r for r in self.rules if r.curve.label == label)
        return np.concatenate([[0], np.cumsum([p[1].sum() for p in rule.pieces])])


def measure(label, step=0.01, radius=10.0):
    """The measure mu_label for label in P, R, A, B, C, E1, E2 (E truncated at ``radius``).

    Raises
    ------
    NegativeDensity
        If a node density is negative (orientation is fixed when tracing).
    """
    if label not in SUPPORTS:
        raise ValueError(f"unknown measure {label!r}")
    cs = trace_curves(step, radius)
    curves = tuple(cs[c] for c in SUPPORTS[label])
    density = {}
    for c in curves:
        d = c.density
        if np.min(d) < -1e-12:
            raise NegativeDensity(f"negative density on Gamma_{c.label}")
        density[c.label] = d
    rules = tuple(curve_rule(step, radius, c.label) for c in curves)
    return MeasureOnCurve(label, curves, rules, density)
