"""Airy-type asymptotics in a disk around z_1 and the extreme zeros they predict."""

import mpmath

from ..errors import OutOfDisk
from ..numerics.airy import airy_pair_mpc, airy_zeros
from ..numerics.apcomplex import APComplex, as_mpc
from ..surface.algebra import Z_BRANCH
from .context import FamilyTag, default_context
from .ntilde import second_row

DELTA = 0.1
BRANCH_FAMILIES = (FamilyTag.A, FamilyTag.B, FamilyTag.E1)
# direction of -iota/f_1'(z_1) rotated by 1, omega, omega^2 for A, B, E1 (in units of pi)
ZERO_ANGLES = {FamilyTag.A: mpmath.mpf(-29) / 36, FamilyTag.B: mpmath.mpf(-5) / 36, FamilyTag.E1: mpmath.mpf(19) / 36}


def exp_ga_phi(pt):
    """exp(g_A + phi_P) at :class:`PointData` near z_1; analytic across Gamma_P.

    phi_P is the closed form 1.5 z (psi_Q - psi_P) - 0.5 log(q(psi_Q)/q(psi_P))
    with the sheet values of ``pt``. Near z_1 the ratio stays off the
    negative axis (its argument is below 2.5 for |z - z_1| <= 0.31), so the
    principal logarithm is the branch vanishing at z_1 with the cut along
    Gamma_P.
    """
    with mpmath.workprec(pt.precision_bits):
        wq, wp = pt.psi["Q"], pt.psi["P"]
        ratio = wq * (wq * wq - 1) / (wp * (wp * wp - 1))
        if abs(mpmath.arg(ratio)) > 3:
            raise OutOfDisk("the local branch of phi_P is not available this far from z1")
        return pt.e_gA * mpmath.exp(1.5 * pt.z * (wq - wp) - mpmath.log(ratio) / 2)


class BranchTerms:
    """Ingredients of the Airy formulas at one point: f_1, h~_1, h~_2 and exp(g_A + phi_P).

    f_1^{1/4} is the principal power, whose cut is where f_1 is negative,
    that is along Gamma_P.
    """

    def __init__(self, z, ctx, delta=DELTA):
        zc = complex(as_mpc(z))
        if abs(zc - Z_BRANCH[0]) >= delta:
            raise OutOfDisk(f"|z - z1| = {abs(zc - Z_BRANCH[0]):.3g} is not below {delta}")
        prec = ctx.work_bits
        pt = ctx.point(z)
        f1 = ctx.f1_map.value(z, prec).value
        with mpmath.workprec(prec):
            zz = pt.z
            n21, n22, _ = second_row(pt)
            t = 1j * zz * mpmath.exp(3 * zz) * n22
            q = mpmath.power(f1, mpmath.mpf(1) / 4)
            self.z = zz
            self.f1 = f1
            self.h1 = (n21 + t) * q
            self.h2 = (n21 - t) / q
            self.e_gphi = exp_ga_phi(pt)
            self.precision_bits = prec


def _airy(s, prec, large):
    if not large:
        return airy_pair_mpc(s, prec)
    # leading terms of the large-argument expansion
    zeta = mpmath.mpf(2) / 3 * s ** (mpmath.mpf(3) / 2)
    e = mpmath.exp(-zeta) / (2 * mpmath.sqrt(mpmath.pi))
    r = s ** (mpmath.mpf(1) / 4)
    return e / r, -e * r


def branch_value(family, terms, n, large_argument=False):
    """Airy formula for A_n, B_n or E1_n from :class:`BranchTerms` as an mpc."""
    family = FamilyTag.parse(family)
    if family not in BRANCH_FAMILIES:
        raise ValueError("the branch point formulas cover A, B and E1")
    if n < 2:
        raise ValueError("n must be at least 2")
    prec = terms.precision_bits
    with mpmath.workprec(prec):
        z = terms.z
        s = mpmath.mpf(n + 1) ** (mpmath.mpf(2) / 3) * terms.f1
        up = mpmath.mpf(n) ** (mpmath.mpf(1) / 6)
        omega = mpmath.expjpi(mpmath.mpf(2) / 3)
        spi = mpmath.sqrt(mpmath.pi)
        if family is FamilyTag.A:
            ai, aip = _airy(s, prec, large_argument)
            pre = -1j / z * mpmath.exp(-3 * z) * spi * terms.e_gphi ** (n + 1)
            return pre * (up * terms.h1 * ai + terms.h2 * aip / up)
        pre = mpmath.expjpi(mpmath.mpf(-1) / 6) / z * spi * (terms.e_gphi * mpmath.exp(-3 * z)) ** (n + 1)
        if family is FamilyTag.B:
            ai, aip = _airy(s / omega, prec, large_argument)
            return pre * (up * terms.h1 * ai + terms.h2 * aip / (omega * up))
        ai, aip = _airy(s * omega, prec, large_argument)
        return pre * (up * terms.h1 * ai / omega + terms.h2 * aip / up)


def branch_asym(z, family, n, precision_bits=None, ctx=None, delta=DELTA, large_argument=False):
    """Airy-regime asymptotics of A_n, B_n or E1_n for |z - z_1| < delta.

    Parameters
    ----------
    large_argument : bool, optional
        Replace Ai and Ai' by the leading terms of their large-argument
        expansion (used to compare with the strong asymptotics).

    Raises
    ------
    OutOfDisk
    """
    ctx = ctx or default_context(precision_bits)
    terms = BranchTerms(z, ctx, delta)
    return ctx.wrap(branch_value(family, terms, n, large_argument))


def h_tilde(z, precision_bits=None, ctx=None, delta=DELTA):
    """(h~_1(z), h~_2(z)) as APComplex values."""
    ctx = ctx or default_context(precision_bits)
    terms = BranchTerms(z, ctx, delta)
    return ctx.wrap(terms.h1), ctx.wrap(terms.h2)


def predicted_zeros(family, n, count, precision_bits=None):
    """Zeros near z_1 predicted by the Airy zeros: z_1 + rho e^{i theta} iota_nu n^{-2/3}.

    rho = 2^{-1/3} 3^{-5/12}; theta is -29 pi/36, -5 pi/36 and 19 pi/36 for
    A, B and E1. Returns ``count`` APComplex values ordered by nu.
    """
    family = FamilyTag.parse(family)
    if family not in BRANCH_FAMILIES:
        raise ValueError("zero predictions are given for A, B and E1")
    if not 1 <= count <= 10:
        raise ValueError("count must be between 1 and 10")
    ctx = default_context(precision_bits)
    prec = ctx.work_bits
    iotas = airy_zeros(count, prec)
    with mpmath.workprec(prec):
        rho = mpmath.cbrt(mpmath.mpf(1) / 2) * mpmath.power(3, mpmath.mpf(-5) / 12)
        step = rho * mpmath.expjpi(ZERO_ANGLES[family]) * mpmath.power(n, mpmath.mpf(-2) / 3)
        z1 = ctx.z1()
        return [APComplex.from_value(z1 + step * iota, ctx.precision_bits) for iota in iotas]
