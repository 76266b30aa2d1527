"""Leading-order asymptotics away from the zeros, and the two-term forms near the curves.

Every factor 1 + O(1/n) is replaced by 1. exp(n g_S) is evaluated as the
n-th power of the closed form of exp(g_S), and phi_S enters only through
exp(2 n phi_S), both of which are single valued. The formula case is
chosen from the region of the point; on a traced curve the region to its
left is used together with the boundary values from that side.
"""

import mpmath

from ..errors import WrongRegion
from ..surface.regions import D_INF_P, D_INF_R, D_P_STAR, D_R_STAR
from .context import FamilyTag, default_context

EXCLUDED_STRONG = {
    FamilyTag.A: ("P", "R"),
    FamilyTag.B: ("P*",),
    FamilyTag.C: ("R*",),
    FamilyTag.E1: ("E1", "E2"),
    FamilyTag.E2: ("E3", "E4"),
}

TYPO_READINGS = ("pattern", "literal")


def _reject(pt, excluded, family):
    if pt.curve in excluded:
        raise WrongRegion(f"{family.value} is not available on Gamma_{pt.curve}", pt.region.name)


def strong_case(family, pt):
    """Name of the case that applies at ``pt`` (raises WrongRegion outside the validity region)."""
    family = FamilyTag.parse(family)
    _reject(pt, EXCLUDED_STRONG[family], family)
    if family is FamilyTag.A:
        return "A"
    if family is FamilyTag.B:
        return "B/D_P_star" if pt.in_side(D_P_STAR) else "B/exterior"
    if family is FamilyTag.C:
        return "C/D_R_star" if pt.in_side(D_R_STAR) else "C/exterior"
    inf, star = (D_INF_P, D_P_STAR) if family is FamilyTag.E1 else (D_INF_R, D_R_STAR)
    if pt.in_side(inf):
        return f"{family.value}/{inf}"
    if pt.in_side(star):
        return f"{family.value}/{star}"
    return f"{family.value}/middle"


def strong_value(family, pt, n):
    """Leading term at :class:`PointData` ``pt`` as an mpc, with the case name."""
    family = FamilyTag.parse(family)
    case = strong_case(family, pt)
    with mpmath.workprec(pt.precision_bits):
        z = pt.z
        sign_n = (-2) ** n
        if family is FamilyTag.A:
            val = -pt.x("Q") * pt.e_gA**n
        elif family is FamilyTag.B:
            sheet = "Q" if case.endswith("star") else "P"
            val = -sign_n * pt.x(sheet) * pt.e_gB**n
        elif family is FamilyTag.C:
            sheet = "Q" if case.endswith("star") else "R"
            val = -sign_n * pt.x(sheet) * pt.e_gC**n
        else:
            sheet, e_g, s = ("P", pt.e_gP, -1) if family is FamilyTag.E1 else ("R", pt.e_gR, 1)
            if case.endswith("_inf_" + sheet):
                val = -pt.x("Q") * (pt.e_gA * mpmath.exp(s * 3 * z)) ** n
            else:
                # the middle case and the star case coincide: z^{3n} exp(-n g_S) = exp(n g_B) there
                val = sign_n * pt.x(sheet) * (z**3 / e_g) ** n
        return val, case


def strong_asym(z, family, n, precision_bits=None, ctx=None):
    """Leading-order strong asymptotics of A_n, B_n, C_n, E1_n or E2_n at ``z``.

    Parameters
    ----------
    z : number or APComplex
    family : FamilyTag or str
    n : int
    precision_bits : int, optional
    ctx : AsymptoticContext, optional

    Returns
    -------
    APComplex

    Raises
    ------
    WrongRegion
        On a curve where the family's formula does not hold.
    """
    ctx = ctx or default_context(precision_bits)
    val, _ = strong_value(family, ctx.point(z), n)
    return ctx.wrap(val)


def curve_case(family, pt):
    """Name of the two-term formula and sign that apply at ``pt``."""
    family = FamilyTag.parse(family)
    if family is FamilyTag.A:
        for sheet, inf, star in (("P", D_INF_P, D_P_STAR), ("R", D_INF_R, D_R_STAR)):
            if pt.curve == sheet or (pt.curve is None and (pt.in_side(inf) or pt.in_side(star))):
                return f"A{sheet}/{'minus' if pt.in_side(star) else 'plus'}"
        raise WrongRegion("A: the point is in neither D_inf_P, D_P*, Gamma_P nor their R analogues",
                          pt.region.name)
    if family in (FamilyTag.B, FamilyTag.C):
        sheet, inf, star, bounds = (("P", D_INF_P, D_P_STAR, ("P", "E1", "E2")) if family is FamilyTag.B
                                    else ("R", D_INF_R, D_R_STAR, ("R", "E3", "E4")))
        if pt.curve in bounds or pt.in_side(inf):
            raise WrongRegion(f"{family.value}: the point is in the closure of {inf}", pt.region.name)
        return f"{family.value}/{'plus' if pt.in_side(star) else 'minus'}"
    star, bounds = (D_P_STAR, ("P", "P*")) if family is FamilyTag.E1 else (D_R_STAR, ("R", "R*"))
    if pt.curve in bounds or pt.in_side(star):
        raise WrongRegion(f"{family.value}: the point is in the closure of {star}", pt.region.name)
    return family.value


def curve_value(family, pt, n, typo="pattern"):
    """Two-term form at ``pt`` as an mpc, with the case name.

    ``typo`` selects the reading of the Q term in the E2 formula: "pattern"
    uses z^2 (psi_Q^2 - 1)^2 like every other formula, "literal" uses
    (3 z^2 psi_Q^2 - 1)^2 as printed.
    """
    family = FamilyTag.parse(family)
    if typo not in TYPO_READINGS:
        raise ValueError(f"typo must be one of {TYPO_READINGS}")
    case = curve_case(family, pt)
    with mpmath.workprec(pt.precision_bits):
        z = pt.z
        if family is FamilyTag.A:
            sheet = case[1]
            sign = -1 if case.endswith("plus") else 1
            val = pt.e_gA**n * (-pt.x("Q") + sign * pt.x(sheet) * pt.e_2phi(sheet) ** n)
        elif family in (FamilyTag.B, FamilyTag.C):
            sheet, e_g = ("P", pt.e_gB) if family is FamilyTag.B else ("R", pt.e_gC)
            e2 = pt.e_2phi(sheet) ** n
            if case.endswith("plus"):
                bracket = pt.x("Q") + pt.x(sheet) * e2
            else:
                bracket = pt.x("Q") / e2 + pt.x(sheet)
            val = -((-2) ** n) * e_g**n * bracket
        elif family is FamilyTag.E1:
            val = (pt.e_gA * mpmath.exp(-3 * z)) ** n * (pt.x("P") * pt.e_2phi("P") ** n - pt.x("Q"))
        else:
            if typo == "pattern":
                q_term = pt.x("Q")
            else:
                q_term = (3 * z**2 * pt.psi["Q"] ** 2 - 1) ** 2 / pt.sqrt["Q"]
            val = (pt.e_gA * mpmath.exp(3 * z)) ** n * (pt.x("R") * pt.e_2phi("R") ** n - q_term)
        return val, case


def curve_asym(z, family, n, typo="pattern", precision_bits=None, ctx=None):
    """Two-term asymptotics near the curves where the zeros accumulate.

    Raises
    ------
    WrongRegion
        Outside the region where the family's two-term formula holds.
    """
    ctx = ctx or default_context(precision_bits)
    val, _ = curve_value(family, ctx.point(z), n, typo)
    return ctx.wrap(val)
