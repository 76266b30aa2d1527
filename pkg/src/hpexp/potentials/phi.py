"""phi_P, phi_R by continuation of the closed form, and the local map f_1 near z_1.

On the curve, (3/2) int_{z_k}^z (psi_Q - psi_S) ds equals
(3/2) z (psi_Q - psi_S) - (1/2) log(q(psi_Q)/q(psi_S)) with q(w) = w (w^2 - 1)
(the integrand is a total derivative because z w = (w^2 - 1/3)/(w^2 - 1) on the
cubic). The logarithm is continued along an admissible path from the base
point: the root pair is followed by nearest-root matching with steps small
compared with the root separation.
"""

import cmath
import math

import mpmath
import numpy as np

from ..config import default_precision
from ..errors import OutOfDisk, PathBlocked
from ..numerics.apcomplex import APComplex, as_mpc
from ..surface import trace_curves
from ..surface.algebra import W_BRANCH, Z_BRANCH, cubic_roots, dz_dw, q_of_w
from ..surface.frames import polish_mp
from ..surface.sheets import distance_to_polyline, segments_cross
from ..surface.tracer import local_constant

BASE = {"P": 0, "R": 2}
WAYPOINTS = ([], [1.2j], [-1.2j], [1.2j, 1.5 + 1.2j], [-1.2j, 1.5 - 1.2j],
             [1.2j, -1.5 + 1.2j], [-1.2j, -1.5 - 1.2j])


class PhiEvaluator:
    """phi_S(z) = (3/2) int_{z_k}^z (psi_Q - psi_S)(s) ds with k = 1 for P and 3 for R.

    The default path leaves the base point opposite to the cut, then
    follows the first admissible polyline from a fixed list of waypoint
    sequences: no crossing of Gamma_P or Gamma_R and distance at least 0.05
    from the origin and from the other branch points.
    """

    def __init__(self, which="P", curves=None):
        if which not in BASE:
            raise ValueError("which must be 'P' or 'R'")
        self.which = which
        self.k = BASE[which]
        self.curves = curves or trace_curves()
        self.labeler = self.curves.labeler
        cut = self.labeler.cuts[which]
        self.cut_angle = cut.cut_direction(self.k, 0.05)
        self.exit = Z_BRANCH[self.k] + 0.05 * cmath.exp(1j * (self.cut_angle + math.pi))

    # paths ------------------------------------------------------------------
    def _admissible(self, pts):
        for a, b in zip(pts[:-1], pts[1:]):
            for label in ("P", "R"):
                if segments_cross(a, b, self.curves[label].nodes):
                    return False
            for c in [0j] + [Z_BRANCH[j] for j in range(4) if j != self.k]:
                if abs(c - pts[-1]) < 0.05 and b == pts[-1]:
                    continue
                if distance_to_polyline(np.array([a, b]), c)[0] < 0.05:
                    return False
        return True

    def path_to(self, z):
        """Default admissible polyline from the base point to ``z``."""
        z = complex(z)
        zk = Z_BRANCH[self.k]
        if abs(z - zk) < 0.05:
            return [zk, z]
        for extra in WAYPOINTS:
            pts = [self.exit] + [complex(p) for p in extra] + [z]
            if self._admissible(pts):
                return [zk] + pts
        raise PathBlocked(f"no admissible path from z{self.k + 1} to {z}")

    # continuation -----------------------------------------------------------
    def _start(self, direction, r=1e-3):
        z = Z_BRANCH[self.k] + r * direction
        lab = self.labeler.labels(z)
        u, v = lab["Q"], lab[self.which]
        return z, u, v, cmath.log(q_of_w(u) / q_of_w(v))

    def continue_path(self, path, record=False):
        """Continue (psi_Q, psi_S, log ratio) along a polyline starting at the base point.

        Returns the final (z, u, v, L), or the list of all steps if ``record``.
        """
        zk = Z_BRANCH[self.k]
        first = path[1] - path[0]
        z, u, v, L = self._start(first / abs(first), min(1e-3, 0.5 * abs(first)))
        steps = [(z, u, v, L)]
        targets = list(path[1:])
        for target in targets:
            while abs(target - z) > 0:
                roots = cubic_roots(z)
                sep = min(abs(roots[0] - roots[1]), abs(roots[0] - roots[2]), abs(roots[1] - roots[2]))
                speed = max(1 / abs(dz_dw(u)), 1 / abs(dz_dw(v)), 1e-3)
                h = min(0.01, 0.1 * sep / speed, abs(target - z))
                if abs(z - zk) < 2e-3:
                    h = min(h, 0.25 * abs(z - zk))
                zn = target if h >= abs(target - z) else z + h * (target - z) / abs(target - z)
                rts = list(cubic_roots(zn))
                pu = u + (zn - z) / dz_dw(u)
                pv = v + (zn - z) / dz_dw(v)
                nu = min(rts, key=lambda r: abs(r - pu))
                rts.remove(nu)
                nv = min(rts, key=lambda r: abs(r - pv))
                L += cmath.log((q_of_w(nu) / q_of_w(nv)) / (q_of_w(u) / q_of_w(v)))
                z, u, v = zn, nu, nv
                if record:
                    steps.append((z, u, v, L))
        return steps if record else (z, u, v, L)

    def value(self, z, path=None):
        """phi_S(z) in double precision."""
        z = complex(z)
        if z == Z_BRANCH[self.k]:
            return 0j
        path = path or self.path_to(z)
        z, u, v, L = self.continue_path(path)
        return 1.5 * z * (u - v) - 0.5 * L

    def value_mp(self, z, precision_bits, path=None):
        """phi_S(z) at ``precision_bits``; the log branch is taken from the double continuation."""
        zc = complex(as_mpc(z))
        with mpmath.workprec(precision_bits + 20):
            zz = as_mpc(z)
            if zc == Z_BRANCH[self.k]:
                return mpmath.mpc(0)
            path = path or self.path_to(zc)
            path = list(path[:-1]) + [zc]
            _, u, v, L = self.continue_path(path)
            um = polish_mp(zz, u, precision_bits + 20)
            vm = polish_mp(zz, v, precision_bits + 20)
            ratio = (um * (um * um - 1)) / (vm * (vm * vm - 1))
            Lm = mpmath.log(ratio)
            k = round((L - complex(Lm)).imag / (2 * math.pi))
            Lm += 2j * mpmath.pi * k
            return 1.5 * zz * (um - vm) - Lm / 2

    def boundary(self, label, j, side, offset=1e-6, extrapolate=True):
        """phi_S at node j of a curve, approached from the left (+1) or right (-1).

        The value at distance ``offset`` along the normal carries an error of
        order offset |phi'|; with ``extrapolate`` the values at ``offset`` and
        ``2 offset`` are combined to cancel it.
        """
        c = self.curves[label]
        normal = side * 1j * c.tangent[j]
        near = self.value(c.nodes[j] + offset * normal)
        if not extrapolate:
            return near
        return 2 * near - self.value(c.nodes[j] + 2 * offset * normal)

    def boundary_exact(self, label, j):
        """phi_S at node j of a curve of its own family, from the traced levels.

        Along the curve phi_S is i times the level measured from the base
        point; on a cut this is the boundary value from the left.
        """
        c = self.curves[label]
        if c.sheet != self.which or self.k not in (c.start, c.end):
            raise ValueError(f"Gamma_{label} does not issue from z{self.k + 1}")
        if c.start == self.k:
            return 1j * c.levels[j]
        return -1j * (c.levels[-1] - c.levels[j])

_PHI = {}


def phi_evaluator(which="P", curves=None):
    curves = curves or trace_curves()
    key = (which, id(curves))
    if key not in _PHI:
        _PHI[key] = PhiEvaluator(which, curves)
    return _PHI[key]


def phi(z, which="P", precision_bits=None, curves=None):
    """phi_P or phi_R at ``z`` as an APComplex."""
    if precision_bits is None:
        precision_bits = z.precision_bits if isinstance(z, APComplex) else default_precision()
    ev = phi_evaluator(which, curves)
    with mpmath.workprec(precision_bits):
        return APComplex.from_value(ev.value_mp(z, precision_bits), precision_bits)


class F1Map:
    """f_1(z) = [(3/2) phi_P(z)]^{2/3}, real and negative on Gamma_P, for |z - z_1| < r_max.

    phi_P is continued along the ray from z_1, which stays on one side of
    Gamma_P inside the disk, and the cube root is followed along the same
    ray starting from the linear behavior |f_1'(z_1)| e^{i(pi - theta)} (z - z_1),
    where theta is the direction in which Gamma_P leaves z_1.
    """

    def __init__(self, curves=None, r_max=0.5):
        self.phi = phi_evaluator("P", curves)
        self.r_max = r_max
        c = local_constant(W_BRANCH[0])
        self.slope = abs(1.5 * c) ** (2 / 3) * cmath.exp(1j * (math.pi - self.phi.cut_angle))

    def _check(self, z):
        if abs(z - Z_BRANCH[0]) >= self.r_max:
            raise OutOfDisk(f"|z - z1| = {abs(z - Z_BRANCH[0]):.3g} is not below {self.r_max}")

    def value_double(self, z):
        z = complex(z)
        self._check(z)
        z1 = Z_BRANCH[0]
        if z == z1:
            return 0j
        steps = self.phi.continue_path([z1, z], record=True)
        prev = None
        for zs, u, v, L in steps:
            p = 1.5 * (1.5 * zs * (u - v) - 0.5 * L)
            r = p ** (2 / 3) if p != 0 else 0j
            cands = [r * cmath.exp(2j * math.pi * m / 3) for m in range(3)]
            ref = self.slope * (zs - z1) if prev is None else prev
            prev = min(cands, key=lambda x: abs(x - ref))
        return prev

    def value(self, z, precision_bits=None):
        """f_1(z) as an APComplex."""
        if precision_bits is None:
            precision_bits = z.precision_bits if isinstance(z, APComplex) else default_precision()
        zc = complex(as_mpc(z))
        approx = self.value_double(zc)
        with mpmath.workprec(precision_bits + 20):
            p = 1.5 * self.phi.value_mp(z, precision_bits + 20, path=[Z_BRANCH[0], zc])
            r = mpmath.cbrt(p * p)
            cands = [r * mpmath.expjpi(mpmath.mpf(2 * m) / 3) for m in range(3)]
            best = min(cands, key=lambda x: abs(complex(x) - approx))
            return APComplex.from_value(best, precision_bits)

    def derivative(self, z, h=1e-8, precision_bits=None):
        """f_1'(z) by central differences with step ``h``."""
        if precision_bits is None:
            precision_bits = max(default_precision(), 256)
        with mpmath.workprec(precision_bits + 20):
            zz = as_mpc(z)
            fp = self.value(APComplex.from_value(zz + h, precision_bits), precision_bits).value
            fm = self.value(APComplex.from_value(zz - h, precision_bits), precision_bits).value
            return APComplex.from_value((fp - fm) / (2 * h), precision_bits)


def f1_map(curves=None):
    return F1Map(curves)


def f1(z, precision_bits=None, curves=None):
    return F1Map(curves).value(z, precision_bits)


def f1_prime(z, precision_bits=None, curves=None, h=1e-8):
    return F1Map(curves).derivative(z, h, precision_bits)
