"""Level-set continuation of the trajectories Re phi = 0 issuing from a branch point.

Along a trajectory the pair integral phi(s) = (3/2) int (wa - wb) ds is purely
imaginary, so the curve is the preimage of a vertical segment under the
locally conformal map phi. Each step raises Im phi by dy, predicts the new
point with ds = i dy / phi'(s) and corrects it by Newton's method on
phi(s) = i y, re-polishing the followed root pair at every iterate.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ..errors import TraceDiverged
from .algebra import cubic_roots, d2z_dw2_at_branch, dz_dw, q_of_w


@dataclass(frozen=True)
class RawTrace:
    """A trajectory as traced, before sheet labels are attached.

    ``wa`` and ``wb`` are the continued roots with Im (3/2) int (wa - wb) ds
    increasing along the nodes; ``levels`` holds that imaginary part.
    ``end`` is the index of the branch point reached, or None on escape.
    """

    start: int
    end: object
    nodes: np.ndarray
    wa: np.ndarray
    wb: np.ndarray
    levels: np.ndarray

    def reversed(self):
        """Same curve traversed backwards; the pair is swapped so levels still increase."""
        top = self.levels[-1]
        return RawTrace(self.end, self.start, self.nodes[::-1].copy(), self.wb[::-1].copy(),
                        self.wa[::-1].copy(), top - self.levels[::-1])


def local_constant(w_branch):
    """c with phi = c (z - z_k)^{3/2} + ... for the pair meeting at w_branch."""
    return 2 * cmath.sqrt(2 / d2z_dw2_at_branch(w_branch))


def seed_angles(w_branch):
    """The three directions along which c (z - z_k)^{3/2} is purely imaginary with positive part."""
    c = local_constant(w_branch)
    base = math.pi / 3 - (2 / 3) * cmath.phase(c)
    return [base + 2 * k * math.pi / 3 for k in range(3)]


def _nearest_pair(roots, pa, pb):
    # assign the pair to distinct roots minimizing total displacement
    best = None
    for i in range(3):
        for j in range(3):
            if i != j:
                d = abs(roots[i] - pa) + abs(roots[j] - pb)
                if best is None or d < best[0]:
                    best = (d, i, j)
    return roots[best[1]], roots[best[2]]


class _Pair:
    """Continued pair with a continuously tracked log of q(wa)/q(wb)."""

    def __init__(self, z, wa, wb, log_ratio):
        self.z, self.wa, self.wb, self.log_ratio = z, wa, wb, log_ratio

    @property
    def phi(self):
        return 1.5 * self.z * (self.wa - self.wb) - 0.5 * self.log_ratio

    @property
    def dphi(self):
        return 1.5 * (self.wa - self.wb)

    def moved(self, z):
        pa = self.wa + (z - self.z) / dz_dw(self.wa)
        pb = self.wb + (z - self.z) / dz_dw(self.wb)
        wa, wb = _nearest_pair(cubic_roots(z), pa, pb)
        ratio = (q_of_w(wa) / q_of_w(wb)) / (q_of_w(self.wa) / q_of_w(self.wb))
        return _Pair(z, wa, wb, self.log_ratio + cmath.log(ratio))


def _correct(pair, y, tol):
    # Newton on phi(s) = i y
    for _ in range(30):
        F = pair.phi - 1j * y
        if abs(F) < tol:
            return pair
        pair = pair.moved(pair.z - F / pair.dphi)
    if abs(pair.phi - 1j * y) < 1e3 * tol:
        return pair
    raise TraceDiverged(f"corrector failed near z = {pair.z}")


def trace_trajectory(k, z_branch, w_branch, theta, step, radius, targets, max_nodes=200000):
    """Trace the trajectory leaving branch point ``k`` in direction ``theta``.

    Parameters
    ----------
    k : int
        Index of the starting branch point.
    z_branch, w_branch : complex
    theta : float
        Seed direction, one of :func:`seed_angles`.
    step : float
        Bound on |dz| and on the displacement of the followed roots per step.
    radius : float
        The trace stops once |z| exceeds this.
    targets : dict
        Branch point index -> (z, w) of the points where the trace may end.

    Returns
    -------
    RawTrace
    """
    c = local_constant(w_branch)
    zpp = abs(d2z_dw2_at_branch(w_branch))
    eps = 0.5 * zpp * step**2
    s0 = z_branch + eps * cmath.exp(1j * theta)
    roots = sorted(cubic_roots(s0), key=lambda r: abs(r - w_branch))
    wa, wb = roots[0], roots[1]
    ratio = q_of_w(wa) / q_of_w(wb)
    pair = _Pair(s0, wa, wb, cmath.log(ratio))
    if pair.phi.imag < 0:
        pair = _Pair(s0, wb, wa, -cmath.log(ratio))
    y = abs(c) * eps**1.5
    pair = _correct(pair, y, 1e-14)

    nodes, was, wbs, levels = [z_branch, pair.z], [w_branch, pair.wa], [w_branch, pair.wb], [0.0, y]
    end = None
    while True:
        if len(nodes) > max_nodes:
            raise TraceDiverged(f"no termination after {max_nodes} nodes from z{k}")
        dphi = abs(pair.dphi)
        stretch = max(1 / abs(dz_dw(pair.wa)), 1 / abs(dz_dw(pair.wb)), 1.0)
        dy = step * dphi / stretch
        y_new = y + dy
        guess = pair.moved(pair.z + 1j * dy / pair.dphi)
        pair = _correct(guess, y_new, 1e-13 * max(1.0, y_new))
        y = y_new
        nodes.append(pair.z)
        was.append(pair.wa)
        wbs.append(pair.wb)
        levels.append(y)
        if abs(pair.z) > radius:
            break
        hit = None
        for j, (zt, _) in targets.items():
            near = abs(pair.wa - targets[j][1]) < 0.2 and abs(pair.wb - targets[j][1]) < 0.2
            if near and abs(pair.z - zt) < 3 * abs(nodes[-1] - nodes[-2]):
                hit = j
        if hit is not None:
            zt, wt = targets[hit]
            # finish exactly at the branch point; phi is stationary there to second order
            rest = abs(local_constant(wt)) * abs(pair.z - zt) ** 1.5
            nodes.append(zt)
            was.append(wt)
            wbs.append(wt)
            levels.append(y + rest)
            end = hit
            break
    return RawTrace(k, end, np.array(nodes), np.array(was), np.array(wbs), np.array(levels))
