"""Gauss-Legendre path quadrature in the complex plane."""

from dataclasses import dataclass
from functools import lru_cache

import mpmath
import numpy as np
from mpmath.calculus.quadrature import GaussLegendre

from ..errors import ToleranceNotMet
from .apcomplex import APComplex, as_mpc


@dataclass(frozen=True)
class PathPolyline:
    """Oriented polyline through ``nodes``.

    ``reversed_`` flips the traversal without copying the node list.
    """

    nodes: tuple
    reversed_: bool = False

    def __post_init__(self):
        if len(self.nodes) < 2:
            raise ValueError("a path needs at least two nodes")
        for u, v in zip(self.nodes, self.nodes[1:]):
            if as_mpc(u) == as_mpc(v):
                raise ValueError("consecutive path nodes must be distinct")

    def reverse(self):
        return PathPolyline(self.nodes, not self.reversed_)

    def ordered_nodes(self):
        nodes = [as_mpc(v) for v in self.nodes]
        return nodes[::-1] if self.reversed_ else nodes


@lru_cache(maxsize=None)
def _gl_nodes_mp(degree, prec):
    # 3 * 2**(degree - 1) points on [-1, 1]
    return tuple(GaussLegendre(mpmath.mp).calc_nodes(degree, prec))


@lru_cache(maxsize=None)
def gauss_legendre(m):
    """Double-precision nodes and weights of the m-point rule on [0, 1]."""
    x, w = np.polynomial.legendre.leggauss(m)
    return (x + 1) / 2, w / 2


def _segment(f, a, b, degree, prec):
    half = (b - a) / 2
    mid = (a + b) / 2
    total = mpmath.mpc(0)
    for x, w in _gl_nodes_mp(degree, prec):
        total += w * as_mpc(f(mid + half * x))
    return total * half


def integrate_path(f, path, rel_tol, precision_bits=None, max_depth=40, wrap=True):
    """Integral of ``f`` along an oriented polyline.

    Each segment is integrated with two Gauss-Legendre rules (12 and 24
    points); disagreement triggers bisection.

    Parameters
    ----------
    f : callable
        Integrand. Receives an APComplex (or an mpc when ``wrap`` is False)
        and returns anything convertible to mpc.
    path : PathPolyline
    rel_tol : float
        Target relative error of the total.
    precision_bits : int, optional
        Working precision; defaults to the precision of the first node, or
        the current mpmath precision for plain nodes.
    max_depth : int, optional
        Maximum bisection depth per segment.

    Returns
    -------
    APComplex

    Raises
    ------
    ToleranceNotMet
        If some piece still disagrees at ``max_depth``.
    """
    if precision_bits is None:
        first = path.nodes[0]
        precision_bits = first.precision_bits if isinstance(first, APComplex) else mpmath.mp.prec
    if rel_tol < 2.0 ** (-precision_bits + 16):
        raise ValueError("rel_tol below the precision floor 2**(16 - precision_bits)")

    if wrap:
        def g(s):
            return f(APComplex.from_value(s, precision_bits))
    else:
        g = f

    with mpmath.workprec(precision_bits + 10):
        nodes = path.ordered_nodes()
        coarse = [_segment(g, a, b, 3, mpmath.mp.prec) for a, b in zip(nodes, nodes[1:])]
        scale = max(abs(mpmath.fsum(coarse)), max(abs(c) for c in coarse) * mpmath.mpf(2) ** -20)
        tol = rel_tol * scale / len(coarse)

        total = mpmath.mpc(0)
        stack = [(a, b, 0, tol) for a, b in zip(nodes, nodes[1:])]
        stack.reverse()
        while stack:
            a, b, depth, t = stack.pop()
            lo = _segment(g, a, b, 3, mpmath.mp.prec)
            hi = _segment(g, a, b, 4, mpmath.mp.prec)
            if abs(hi - lo) <= t or (scale == 0 and hi == lo):
                total += hi
                continue
            if depth >= max_depth:
                raise ToleranceNotMet(f"subdivision depth {max_depth} reached near {mpmath.nstr(a, 8)}")
            m = (a + b) / 2
            stack.append((m, b, depth + 1, t / 2))
            stack.append((a, m, depth + 1, t / 2))
        return APComplex.from_value(total, precision_bits)
