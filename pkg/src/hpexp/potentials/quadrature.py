"""Gauss-Legendre quadrature along traced curves.

Each pair of consecutive nodes is a panel integrated along its chord. The
density is the analytic continuation of (3/(2 pi i)) (psi_Q - psi_S) to the
chord, obtained by Newton polishing from interpolated node values, so the
chord integral equals the curve integral by Cauchy's theorem as long as the
other factor of the integrand is analytic between chord and curve. Panels
ending at a branch point use t = x^2 to absorb the square-root vanishing of
the density. For log kernels near the curve, panels are split at exact curve
points (found by Newton on the level of phi) until every piece is short
compared with its distance to the singularity.
"""

import cmath
import math

import numpy as np

from ..errors import OnSupport
from ..surface.algebra import polish, q_of_w

REGULAR_ORDER = 10
SINGULAR_ORDER = 24


def _gl01(m):
    x, w = np.polynomial.legendre.leggauss(m)
    return 0.5 * (x + 1), 0.5 * w


_GL = {m: _gl01(m) for m in (REGULAR_ORDER, SINGULAR_ORDER)}


class Panel:
    """Chord between two curve points with the root pair at both ends.

    ``kind`` is "regular", "sqrt_a"/"sqrt_b" (square-root zero at that end)
    or "log_a"/"log_b" (logarithmic kernel singularity at that end).
    """

    __slots__ = ("za", "zb", "qa", "sa", "qb", "sb", "kind")

    def __init__(self, za, zb, qa, sa, qb, sb, kind="regular"):
        self.za, self.zb, self.qa, self.sa, self.qb, self.sb, self.kind = za, zb, qa, sa, qb, sb, kind

    @property
    def length(self):
        return abs(self.zb - self.za)


def _map(kind, x):
    """Parameter t(x), dt/dx and the interpolation variable for the roots."""
    if kind == "sqrt_a":
        return x * x, 2 * x, x
    if kind == "sqrt_b":
        return 1 - (1 - x) ** 2, 2 * (1 - x), 1 - (1 - x)
    if kind == "log_a":
        return x**3, 3 * x * x, x**3
    if kind == "log_b":
        return 1 - (1 - x) ** 3, 3 * (1 - x) ** 2, 1 - (1 - x) ** 3
    return x, np.ones_like(x), x


def panel_points(panels):
    """Quadrature points s and weights rho(s) ds for a list of panels, in order."""
    pts, wts = [], []
    for p in panels:
        m = SINGULAR_ORDER if p.kind != "regular" else REGULAR_ORDER
        x, w = _GL[m]
        t, dt, v = _map(p.kind, x)
        if p.kind == "sqrt_b":
            # interpolate the roots in sqrt(1 - t) from the branch end
            u = 1 - x
            gq = p.qb + u * (p.qa - p.qb)
            gs = p.sb + u * (p.sa - p.sb)
        else:
            gq = p.qa + v * (p.qb - p.qa)
            gs = p.sa + v * (p.sb - p.sa)
        s = p.za + t * (p.zb - p.za)
        wq = polish(s, gq, 6)
        ws = polish(s, gs, 6)
        rho = 1.5 / (math.pi * 1j) * (wq - ws)
        pts.append(s)
        wts.append(rho * (p.zb - p.za) * dt * w)
    if not pts:
        return np.zeros(0, complex), np.zeros(0, complex)
    return np.concatenate(pts), np.concatenate(wts)


def curve_panels(curve):
    """Panels of a CurveTable, with square-root panels at branch point ends."""
    z, q, s = curve.nodes, curve.psi_q, curve.psi_s
    n = len(z) - 1
    out = []
    for i in range(n):
        kind = "regular"
        if i == 0 and curve.start is not None:
            kind = "sqrt_a"
        elif i == n - 1 and curve.end is not None:
            kind = "sqrt_b"
        out.append(Panel(z[i], z[i + 1], q[i], s[i], q[i + 1], s[i + 1], kind))
    return out


def exact_point(curve, panel, t):
    """Curve point between the panel ends at a fraction ``t`` of the phi-level gap.

    Solves (3/2) int (psi_Q - psi_S) ds = i y by Newton from the chord point,
    continuing the pair from the panel start.
    """
    za, qa, sa = panel.za, panel.qa, panel.sa
    if panel.kind.startswith("sqrt") or abs(qa - sa) < 1e-12 or abs(panel.qb - panel.sb) < 1e-12:
        # near a branch point: stay on the chord, the panel is split in the sqrt map instead
        zc = za + t * (panel.zb - za)
        return zc, polish(zc, qa + t * (panel.qb - qa), 6), polish(zc, sa + t * (panel.sb - sa), 6)
    ya = _phi_rel(za, qa, sa, za, qa, sa)
    yb = _phi_rel(panel.zb, panel.qb, panel.sb, za, qa, sa)
    target = ya + t * (yb - ya)
    zc = za + t * (panel.zb - za)
    wq = polish(zc, qa + t * (panel.qb - qa), 6)
    ws = polish(zc, sa + t * (panel.sb - sa), 6)
    for _ in range(20):
        F = _phi_rel(zc, wq, ws, za, qa, sa) - target
        step = F / (1.5 * (wq - ws))
        zc = zc - step
        wq = polish(zc, wq, 4)
        ws = polish(zc, ws, 4)
        if abs(step) < 1e-16 * max(1.0, abs(zc)):
            break
    return zc, complex(wq), complex(ws)


def _phi_rel(z, wq, ws, z0, q0, s0):
    return 1.5 * (z * (wq - ws) - z0 * (q0 - s0)) - 0.5 * cmath.log((q_of_w(wq) / q_of_w(ws)) / (q_of_w(q0) / q_of_w(s0)))


def _split(curve, panel, t=0.5):
    zc, wq, ws = exact_point(curve, panel, t)
    if panel.kind == "sqrt_a":
        kinds = ("sqrt_a", "regular")
    elif panel.kind == "sqrt_b":
        kinds = ("regular", "sqrt_b")
    else:
        kinds = ("regular", "regular")
    if panel.kind.startswith("sqrt"):
        # split in the square-root variable so the pieces stay well resolved
        return _split_sqrt(panel, kinds)
    return (Panel(panel.za, zc, panel.qa, panel.sa, wq, ws, kinds[0]),
            Panel(zc, panel.zb, wq, ws, panel.qb, panel.sb, kinds[1]))


def _split_sqrt(panel, kinds):
    if panel.kind == "sqrt_a":
        u = 0.5
        t = u * u
        gq = panel.qa + u * (panel.qb - panel.qa)
        gs = panel.sa + u * (panel.sb - panel.sa)
    else:
        u = 0.5
        t = 1 - u * u
        gq = panel.qb + u * (panel.qa - panel.qb)
        gs = panel.sb + u * (panel.sa - panel.sb)
    zc = panel.za + t * (panel.zb - panel.za)
    wq = complex(polish(zc, gq, 8))
    ws = complex(polish(zc, gs, 8))
    return (Panel(panel.za, zc, panel.qa, panel.sa, wq, ws, kinds[0]),
            Panel(zc, panel.zb, wq, ws, panel.qb, panel.sb, kinds[1]))


def _segment_distance(z, a, b):
    d = b - a
    if d == 0:
        return abs(z - a)
    t = min(max(((z - a) * d.conjugate()).real / abs(d) ** 2, 0.0), 1.0)
    return abs(a + t * d - z)


def refine_for(curve, panels, z, ratio=1.0, max_depth=60):
    """Split panels near ``z`` until each is shorter than ``ratio`` times its distance to z."""
    out = []
    stack = list(reversed(panels))
    depth = {id(p): 0 for p in panels}
    while stack:
        p = stack.pop()
        d = _segment_distance(z, p.za, p.zb)
        if d >= ratio * p.length:
            out.append(p)
            continue
        level = depth.get(id(p), 0)
        if level >= max_depth or d < 1e-14:
            raise OnSupport(f"z = {z} lies on the support of the measure")
        a, b = _split(curve, p)
        depth[id(a)] = depth[id(b)] = level + 1
        stack.append(b)
        stack.append(a)
    return out


def split_at_node(curve, panels, j):
    """Panels before and after node j, with log-singular panels adjacent to it."""
    before = list(panels[:j])
    after = list(panels[j:])
    if before:
        last = before[-1]
        before[-1] = Panel(last.za, last.zb, last.qa, last.sa, last.qb, last.sb, "log_b")
    if after:
        first = after[0]
        after[0] = Panel(first.za, first.zb, first.qa, first.sa, first.qb, first.sb, "log_a")
    return before, after
