"""Assignment of the three roots of the cubic to the sheets P, Q, R.

The lifts of the cut Gamma_P under its two adjacent sheets form a closed
curve C_P in the w-plane around w = -1; psi_P maps the plane minus the cut
onto its interior, and likewise C_R encloses the image of psi_R. Points far
from the cuts are labelled by point-in-polygon tests against C_P and C_R.
Close to a cut the polygon is not accurate enough, and the label follows
from the side of the cut, decided by the sign of Re phi for the pair
continued from the nearest cut node. Close to a branch point the pair is
ordered through the local square-root behavior. Labels can also be obtained
by continuation along a path from z = 10, swapping two labels at every
crossing of a cut; this slower route serves as a fallback.
"""

import cmath

import numpy as np

from ..errors import LabelAmbiguous, NearBranchPoint, OriginDegenerate
from .algebra import W_BRANCH, Z_BRANCH, cubic_roots, polish, q_of_w

SHEETS = ("P", "Q", "R")
BRANCH_RADIUS = 0.03
BAND = 0.05


def roots_batch(z):
    """Roots of the cubic at every point of the 1-d array ``z`` (shape (N, 3))."""
    z = np.asarray(z, dtype=complex)
    comp = np.zeros((len(z), 3, 3), dtype=complex)
    comp[:, 0, 0] = 1 / z
    comp[:, 0, 1] = 1
    comp[:, 0, 2] = -1 / (3 * z)
    comp[:, 1, 0] = 1
    comp[:, 2, 1] = 1
    return polish(z[:, None], np.linalg.eigvals(comp))


def points_inside(polygon, pts):
    """Even-odd point-in-polygon test for complex vertices and points."""
    pts = np.asarray(pts, dtype=complex).ravel()
    a = polygon
    b = np.roll(polygon, -1)
    x, y = pts.real[:, None], pts.imag[:, None]
    ay, by = a.imag[None, :], b.imag[None, :]
    straddle = (ay > y) != (by > y)
    with np.errstate(divide="ignore", invalid="ignore"):
        xc = a.real + (y - ay) * (b.real - a.real) / (by - ay)
    return np.count_nonzero(straddle & (x < xc), axis=1) % 2 == 1


def distance_to_polyline(nodes, z):
    """Distance from the point ``z`` to a polyline, and the index of the closest segment."""
    a, b = nodes[:-1], nodes[1:]
    d = b - a
    t = np.clip(((z - a) * np.conj(d)).real / np.maximum(np.abs(d) ** 2, 1e-300), 0, 1)
    dist = np.abs(a + t * d - z)
    i = int(np.argmin(dist))
    return float(dist[i]), i


def beside_polyline(nodes, z, band):
    """Whether ``z`` is within ``band`` of a polyline at a point other than its two ends.

    Past an end the side of the polyline is not defined, so such points
    count as away from it.
    """
    dist, _ = distance_to_polyline(nodes, z)
    if dist >= band:
        return False
    return min(abs(z - nodes[0]), abs(z - nodes[-1])) > dist * (1 + 1e-9)


def segments_cross(p0, p1, nodes):
    """Number of crossings of the segment [p0, p1] with a polyline."""
    a, b = nodes[:-1], nodes[1:]

    def orient(u, v, w):
        return np.sign(((v - u) * np.conj(w - u)).imag)

    o1 = orient(p0, p1, a)
    o2 = orient(p0, p1, b)
    o3 = orient(a, b, p0)
    o4 = orient(a, b, p1)
    return int(np.count_nonzero((o1 != o2) & (o3 != o4)))


class CutData:
    """A traced cut with its continued root pair.

    ``a_is_q_left`` tells whether the continuation of ``wa`` is psi_Q on the
    left of the traversal direction; ``sheet`` is the other sheet glued
    along the cut ("P" or "R").
    """

    def __init__(self, trace, sheet):
        self.trace = trace
        self.sheet = sheet
        self.nodes = trace.nodes
        self.a_is_q_left = None
        self.kappa = {}

    @property
    def ends(self):
        return (self.trace.start, self.trace.end)

    def polygon(self):
        t = self.trace
        return np.concatenate([t.wa[:-1], t.wb[::-1][:-1]])

    def cut_direction(self, k, r):
        """Argument of the cut seen from branch point k at distance r."""
        nodes = self.nodes if k == self.trace.start else self.nodes[::-1]
        zk = nodes[0]
        rad = np.abs(nodes - zk)
        j = int(np.searchsorted(rad[:200], r)) if rad[min(199, len(rad) - 1)] > r else None
        if j is None or j == 0:
            j = 1
        if j >= len(nodes):
            j = len(nodes) - 1
        # interpolate between nodes j-1 and j at radius r
        r0, r1 = rad[j - 1], rad[j]
        t = 0.0 if r1 == r0 else min(max((r - r0) / (r1 - r0), 0.0), 1.0)
        p = nodes[j - 1] + t * (nodes[j] - nodes[j - 1])
        return cmath.phase(p - zk)

    def local_sqrt(self, k, z):
        """sqrt(z - z_k) with the branch cut along the traced cut."""
        zk = Z_BRANCH[k]
        r = abs(z - zk)
        theta = self.cut_direction(k, r)
        a = cmath.phase(z - zk)
        while a <= theta:
            a += 2 * np.pi
        while a > theta + 2 * np.pi:
            a -= 2 * np.pi
        return cmath.sqrt(r) * cmath.exp(0.5j * a)

    def continue_pair(self, i, z, substeps=8):
        """Continue the node pair (wa_i, wb_i) to ``z`` along a straight segment."""
        t = self.trace
        z0, wa, wb = t.nodes[i], t.wa[i], t.wb[i]
        log_ratio = 0j
        for s in np.linspace(0, 1, substeps + 1)[1:]:
            zs = z0 + s * (z - z0)
            rts = list(cubic_roots(zs))
            na = min(rts, key=lambda r: abs(r - wa))
            rts.remove(na)
            nb = min(rts, key=lambda r: abs(r - wb))
            rts.remove(nb)
            log_ratio += cmath.log((q_of_w(na) / q_of_w(nb)) / (q_of_w(wa) / q_of_w(wb)))
            wa, wb, third = na, nb, rts[0]
        dphi = 1.5 * (z * (wa - wb) - z0 * (t.wa[i] - t.wb[i])) - 0.5 * log_ratio
        return wa, wb, third, dphi


class SheetLabeler:
    """Labels (psi_P, psi_Q, psi_R) of the roots at arbitrary points.

    Parameters
    ----------
    cut_p, cut_r : RawTrace
        The traced cuts Gamma_P (from z_1 to z_2) and Gamma_R (from z_3 to z_4).
    """

    def __init__(self, cut_p, cut_r):
        self.cuts = {"P": CutData(cut_p, "P"), "R": CutData(cut_r, "R")}
        self.poly = {s: c.polygon() for s, c in self.cuts.items()}
        for cut in self.cuts.values():
            self._calibrate(cut)

    # polygon labelling -------------------------------------------------
    def _polygon_labels(self, z, roots):
        inP = points_inside(self.poly["P"], roots).reshape(roots.shape)
        inR = points_inside(self.poly["R"], roots).reshape(roots.shape)
        return inP, inR

    def _calibrate(self, cut):
        t = cut.trace
        i = len(t.nodes) // 2
        tangent = t.nodes[i + 1] - t.nodes[i - 1]
        probe = t.nodes[i] + 0.03j * tangent / abs(tangent)
        wa, wb, third, _ = cut.continue_pair(i, probe)
        inside = points_inside(self.poly[cut.sheet], np.array([wa, wb]))
        if inside[0] == inside[1]:
            raise LabelAmbiguous(f"cannot orient the pair along Gamma_{cut.sheet}")
        cut.a_is_q_left = bool(inside[1])
        for k in cut.ends:
            zk = Z_BRANCH[k]
            # probe opposite to the cut direction, well away from it
            theta = cut.cut_direction(k, 0.04) + np.pi
            zc = zk + 0.04 * cmath.exp(1j * theta)
            frame = self._far_labels(zc)
            d = frame["Q"] - frame[cut.sheet]
            cut.kappa[k] = d / cut.local_sqrt(k, zc)

    def _far_labels(self, z):
        roots = cubic_roots(z)
        inP, inR = self._polygon_labels(z, roots[None, :])
        inP, inR = inP[0], inR[0]
        if inP.sum() != 1 or inR.sum() != 1 or (inP & inR).any():
            return self.continuation_labels(z)
        return {"P": roots[inP][0], "R": roots[inR][0], "Q": roots[~(inP | inR)][0]}

    # near-cut labelling ------------------------------------------------
    def _near_cut_labels(self, z, cut):
        for k in cut.ends:
            if abs(z - Z_BRANCH[k]) < BRANCH_RADIUS:
                roots = sorted(cubic_roots(z), key=lambda r: abs(r - W_BRANCH[k]))
                u, v, third = roots
                target = cut.kappa[k] * cut.local_sqrt(k, z)
                if abs((v - u) - target) < abs((u - v) - target):
                    u, v = v, u
                return {"Q": u, cut.sheet: v, _other(cut.sheet): third}
        _, i = distance_to_polyline(cut.nodes, z)
        if abs(z - cut.nodes[i + 1]) < abs(z - cut.nodes[i]):
            i += 1
        i = min(max(i, 1), len(cut.nodes) - 2)
        wa, wb, third, dphi = cut.continue_pair(i, z)
        left = dphi.real < 0
        if left == cut.a_is_q_left:
            q, s = wa, wb
        else:
            q, s = wb, wa
        return {"Q": q, cut.sheet: s, _other(cut.sheet): third}

    def side_of_cut(self, z, sheet):
        """+1 if z lies left of the cut traversal, -1 if right, 0 within 1e-13."""
        cut = self.cuts[sheet]
        _, i = distance_to_polyline(cut.nodes, z)
        i = min(max(i, 1), len(cut.nodes) - 2)
        _, _, _, dphi = cut.continue_pair(i, z)
        if abs(dphi.real) < 1e-13:
            return 0
        return 1 if dphi.real < 0 else -1

    # public ---------------------------------------------------------------
    def labels(self, z):
        """Dictionary sheet -> root at the point ``z`` (double precision)."""
        z = complex(z)
        if z == 0:
            raise OriginDegenerate("the cubic has only two finite roots at z = 0")
        for k in range(4):
            if abs(z - Z_BRANCH[k]) < 1e-12:
                raise NearBranchPoint(f"z is within 1e-12 of z{k + 1}")
        for cut in self.cuts.values():
            near_end = min(abs(z - Z_BRANCH[k]) for k in cut.ends)
            if near_end < BRANCH_RADIUS or beside_polyline(cut.nodes, z, BAND):
                return self._near_cut_labels(z, cut)
        return self._far_labels(z)

    def labels_array(self, z):
        """Arrays (psi_P, psi_Q, psi_R) for a 1-d array of points."""
        z = np.asarray(z, dtype=complex).ravel()
        roots = roots_batch(z)
        inP, inR = self._polygon_labels(z, roots)
        good = (inP.sum(axis=1) == 1) & (inR.sum(axis=1) == 1) & ~(inP & inR).any(axis=1)
        for cut in self.cuts.values():
            a, b = cut.nodes[:-1], cut.nodes[1:]
            d = b - a
            t = np.clip(((z[:, None] - a) * np.conj(d)).real / np.abs(d) ** 2, 0, 1)
            dist = np.abs(a + t * d - z[:, None]).min(axis=1)
            good &= dist >= BAND
            for k in cut.ends:
                good &= np.abs(z - Z_BRANCH[k]) >= BRANCH_RADIUS
        P = np.empty(len(z), complex)
        Q = np.empty(len(z), complex)
        R = np.empty(len(z), complex)
        idx = np.nonzero(good)[0]
        P[idx] = roots[idx][inP[idx]]
        R[idx] = roots[idx][inR[idx]]
        Q[idx] = roots[idx][~(inP[idx] | inR[idx])]
        for i in np.nonzero(~good)[0]:
            lab = self.labels(z[i])
            P[i], Q[i], R[i] = lab["P"], lab["Q"], lab["R"]
        return P, Q, R

    def continuation_labels(self, z, start=10.0, substeps=400):
        """Labels by continuation from ``start`` (where psi_P, psi_Q, psi_R are near -1, 0, 1).

        The path goes vertically to height +-2, horizontally above or below
        ``z`` and then straight to ``z``; at each crossing of a cut the two
        labels glued along it are exchanged.
        """
        z = complex(z)
        h = 2.0 if z.imag >= 0 else -2.0
        waypoints = [complex(start), complex(start, h), complex(z.real, h), z]
        roots = sorted(cubic_roots(complex(start)), key=lambda r: r.real)
        lab = {"P": roots[0], "Q": roots[1], "R": roots[2]}
        for p0, p1 in zip(waypoints[:-1], waypoints[1:]):
            if p0 == p1:
                continue
            n_sub = max(2, int(substeps * abs(p1 - p0) / 10) + 2)
            pts = p0 + (p1 - p0) * np.linspace(0, 1, n_sub)
            for za, zb in zip(pts[:-1], pts[1:]):
                lab = self._continue_step(lab, za, zb)
        return lab

    def _continue_step(self, lab, za, zb, depth=0):
        rts = list(cubic_roots(zb))
        sep = min(abs(rts[0] - rts[1]), abs(rts[0] - rts[2]), abs(rts[1] - rts[2]))
        new = {}
        for s in SHEETS:
            r = min(rts, key=lambda x: abs(x - lab[s]))
            rts.remove(r)
            new[s] = r
        moved = max(abs(new[s] - lab[s]) for s in SHEETS)
        if moved > 0.25 * sep and depth < 40:
            mid = 0.5 * (za + zb)
            lab = self._continue_step(lab, za, mid, depth + 1)
            return self._continue_step(lab, mid, zb, depth + 1)
        for name, cut in self.cuts.items():
            if segments_cross(za, zb, cut.nodes) % 2:
                new["Q"], new[name] = new[name], new["Q"]
        return new
        return lab


def _other(sheet):
    return "R" if sheet == "P" else "P"
