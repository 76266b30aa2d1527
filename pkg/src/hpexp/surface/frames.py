"""Sheet values at arbitrary precision."""

from dataclasses import dataclass

import mpmath

from ..config import default_precision
from ..numerics.apcomplex import APComplex, as_mpc


@dataclass(frozen=True)
class SheetFrame:
    """The three roots of the cubic at ``z`` labelled by sheet."""

    z: APComplex
    psiP: APComplex
    psiQ: APComplex
    psiR: APComplex

    def __getitem__(self, sheet):
        return {"P": self.psiP, "Q": self.psiQ, "R": self.psiR}[sheet]

    def vieta_residuals(self):
        """Residuals of the three Vieta identities of the cubic."""
        prec = self.z.precision_bits
        with mpmath.workprec(prec):
            z, p, q, r = (x.value for x in (self.z, self.psiP, self.psiQ, self.psiR))
            return (abs(p + q + r - 1 / z), abs(p * q + p * r + q * r + 1), abs(p * q * r + 1 / (3 * z)))


def polish_mp(z, w, precision_bits):
    """Newton on z w^3 - w^2 - z w + 1/3 = 0 from the double estimate ``w``."""
    with mpmath.workprec(precision_bits + 20):
        z = as_mpc(z)
        w = mpmath.mpc(w)
        third = mpmath.mpf(1) / 3
        tol = mpmath.mpf(2) ** (-precision_bits - 10) * max(1, abs(w))
        for _ in range(200):
            f = ((z * w - 1) * w - z) * w + third
            d = (3 * z * w - 2) * w - z
            step = f / d
            w -= step
            if abs(step) <= tol:
                break
        return w


def make_frame(z, labels, precision_bits=None):
    """SheetFrame from double-precision labels, polished to ``precision_bits``."""
    if precision_bits is None:
        precision_bits = z.precision_bits if isinstance(z, APComplex) else default_precision()
    zz = as_mpc(z)
    vals = {s: APComplex.from_value(polish_mp(zz, labels[s], precision_bits), precision_bits) for s in "PQR"}
    return SheetFrame(APComplex.from_value(zz, precision_bits), vals["P"], vals["Q"], vals["R"])
