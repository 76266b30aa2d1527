"""Exact values against the asymptotic formulas, with region bookkeeping."""

import cmath
import statistics
from dataclasses import asdict, dataclass, field

import mpmath

from ..errors import WrongRegion
from ..exact_hp import remainder_precision, scale_family
from ..numerics.apcomplex import as_mpc
from ..asymptotics import (
    BRANCH_FAMILIES,
    TYPO_READINGS,
    BranchTerms,
    FamilyTag,
    branch_value,
    curve_value,
    default_context,
    strong_value,
)
from ..surface import classify_region
from ..surface.algebra import Z_BRANCH
from ..surface.regions import D_INF_P, D_INF_R, D_P_STAR, D_R_STAR

FORMULAS = ("strong", "curve", "branch")
ZERO_WINDOW = 1e-8

# sample points covering every case of the leading-order formulas
STRONG_POINTS = {
    FamilyTag.A: (2, 1.5j, -1 - 1j),
    FamilyTag.B: (2, -2 + 0.5j, -0.1 + 0.1j),
    FamilyTag.C: (-2, 2 + 0.5j, 0.1 + 0.1j),
    FamilyTag.E1: (-2 + 0.5j, 2, -0.1 + 0.1j),
    FamilyTag.E2: (2 + 0.5j, -2, 0.1 + 0.1j),
}
# (curve, node fractions) for the two-term forms
CURVE_POINTS = {
    FamilyTag.A: ("P", (0.25, 0.5, 0.75)),
    FamilyTag.B: ("P*", (0.25, 0.5, 0.75)),
    FamilyTag.C: ("R*", (0.25, 0.5, 0.75)),
    FamilyTag.E1: ("E1", (0.05, 0.1, 0.2)),
    FamilyTag.E2: ("E3", (0.05, 0.1, 0.2)),
}
BRANCH_RADIUS = 0.05
BRANCH_ANGLES = (1 / 3, 1.0, -0.5)


class RegionMismatch(WrongRegion):
    """The formula case of a record disagrees with the region of its point."""


@dataclass
class ComparisonRecord:
    z: complex
    n: int
    exact: complex
    asymptotic: complex
    error: float
    region: str
    case: str


@dataclass
class ComparisonReport:
    """Per-point records and summary statistics of one comparison run.

    ``summary`` holds the maximum and median error, the least-squares
    constant C in error ~ C/n and, per point, the spread max/min of
    error * n over the requested n.
    """

    family: str
    formula: str
    typo: str
    records: list
    summary: dict = field(default_factory=dict)
    typo_verdict: dict = None

    def to_json(self):
        def enc(x):
            return [x.real, x.imag] if isinstance(x, complex) else x

        return {
            "family": self.family,
            "formula": self.formula,
            "typo": self.typo,
            "records": [{k: enc(v) for k, v in asdict(r).items()} for r in self.records],
            "summary": self.summary,
            "typo_verdict": self.typo_verdict,
        }

    def csv_rows(self):
        yield ["re_z", "im_z", "n", "re_exact", "im_exact", "re_asym", "im_asym", "error", "region", "case"]
        for r in self.records:
            yield [r.z.real, r.z.imag, r.n, r.exact.real, r.exact.imag,
                   r.asymptotic.real, r.asymptotic.imag, r.error, r.region, r.case]


def exact_value(family, n, z, precision_bits=256):
    """(value, derivative) of A_n, B_n, C_n, E1_n or E2_n at ``z`` as mpc at raised precision.

    ``z`` may be a number, an mpc or an APComplex; its full precision is used.
    """
    family = FamilyTag.parse(family)
    fam = scale_family(n)
    zc = complex(as_mpc(z))
    with mpmath.workprec(remainder_precision(n, zc, precision_bits)):
        zz = as_mpc(z)
        if family in (FamilyTag.A, FamilyTag.B, FamilyTag.C):
            return getattr(fam, family.value).evaluate_with_derivative(zz)
        a, da = fam.A.evaluate_with_derivative(zz)
        sign, other = (-1, fam.B) if family is FamilyTag.E1 else (1, fam.C)
        o, do = other.evaluate_with_derivative(zz)
        e = mpmath.exp(sign * 3 * n * zz)
        return a * e - o, (da + sign * 3 * n * a) * e - do


def comparison_error(exact, derivative, asym, n):
    """Relative error, or the error against max(|exact|, |asym|/n) within 1e-8 of a zero of the exact function."""
    diff = abs(exact - asym)
    near_zero = derivative != 0 and abs(exact / derivative) < ZERO_WINDOW
    if exact == 0 or near_zero:
        return float(diff / max(abs(exact), abs(asym) / n))
    return float(diff / abs(exact))


def curve_sample_points(family, ctx=None):
    family = FamilyTag.parse(family)
    ctx = ctx or default_context()
    label, fracs = CURVE_POINTS[family]
    nodes = ctx.curves[label].nodes
    return [complex(nodes[int(f * (len(nodes) - 1))]) for f in fracs]


def default_points(family, formula, ctx=None):
    """Auto-placed sample points of a formula for a family."""
    family = FamilyTag.parse(family)
    if formula == "strong":
        return [complex(z) for z in STRONG_POINTS[family]]
    if formula == "curve":
        return curve_sample_points(family, ctx)
    z1 = Z_BRANCH[0]
    return [z1 + BRANCH_RADIUS * cmath.exp(1j * cmath.pi * a) for a in BRANCH_ANGLES]


def _required_parts(case):
    """(parts the region must contain, parts it must not contain) implied by a case name."""
    tail = case.split("/", 1)[-1]
    if tail == "D_P_star":
        return (D_P_STAR,), ()
    if tail == "D_R_star":
        return (D_R_STAR,), ()
    if tail in (D_INF_P, D_INF_R):
        return (tail,), ()
    if case == "B/exterior":
        return (), (D_P_STAR,)
    if case == "C/exterior":
        return (), (D_R_STAR,)
    if case.startswith("E1/middle"):
        return (), (D_INF_P, D_P_STAR)
    if case.startswith("E2/middle"):
        return (), (D_INF_R, D_R_STAR)
    return (), ()


def check_case(z, case, ctx):
    """Re-classify ``z`` independently and check it against ``case``.

    Raises
    ------
    RegionMismatch
    """
    region = classify_region(complex(z), ctx.curves)
    if region.on_curve:
        region = ctx.point(z).side
    must, must_not = _required_parts(case)
    if any(p not in region for p in must) or any(p in region for p in must_not):
        raise RegionMismatch(f"case {case} does not fit region {region.name} at {complex(z)}", region.name)
    return region.name


def _asymptotic(family, formula, z, n, typo, ctx):
    if formula == "strong":
        pt = ctx.point(z)
        val, case = strong_value(family, pt, n)
        return val, case
    if formula == "curve":
        return curve_value(family, ctx.point(z), n, typo)
    if family not in BRANCH_FAMILIES:
        raise WrongRegion(f"the Airy formulas cover {', '.join(f.value for f in BRANCH_FAMILIES)}")
    return branch_value(family, BranchTerms(z, ctx), n), "branch"


def run_comparison(family, formula, ns, points=None, typo="pattern", precision_bits=256, ctx=None):
    """Compare exact values with one asymptotic formula.

    Parameters
    ----------
    family : FamilyTag or str
    formula : {"strong", "curve", "branch"}
    ns : sequence of int
        Each in 10..80.
    points : sequence of complex, optional
        Defaults to :func:`default_points`.
    typo : {"pattern", "literal"}
        Reading of the E2 near-curve formula.

    Returns
    -------
    ComparisonReport

    Raises
    ------
    WrongRegion
        A point lies where the formula does not apply.
    RegionMismatch
        A case disagrees with an independent classification of its point.
    """
    family = FamilyTag.parse(family)
    if formula not in FORMULAS:
        raise ValueError(f"formula must be one of {FORMULAS}")
    if typo not in TYPO_READINGS:
        raise ValueError(f"typo must be one of {TYPO_READINGS}")
    if any(not 10 <= n <= 80 for n in ns):
        raise ValueError("comparisons are run for 10 <= n <= 80")
    ctx = ctx or default_context(precision_bits)
    points = [complex(z) for z in (points or default_points(family, formula, ctx))]
    records = []
    for z in points:
        region = None
        for n in ns:
            asym, case = _asymptotic(family, formula, z, n, typo, ctx)
            if region is None:
                region = check_case(z, case, ctx)
            ex, dex = exact_value(family, n, z, precision_bits)
            err = comparison_error(ex, dex, asym, n)
            records.append(ComparisonRecord(z, n, complex(ex), complex(asym), err, region, case))
    report = ComparisonReport(family.value, formula, typo, records)
    report.summary = summarize(records)
    if family is FamilyTag.E2 and formula == "curve":
        report.typo_verdict = typo_verdict(ns, ctx=ctx, precision_bits=precision_bits)
    return report


def summarize(records):
    errs = [r.error for r in records]
    inv = sum(1 / r.n**2 for r in records)
    spreads = {}
    for z in dict.fromkeys(r.z for r in records):
        scaled = [r.error * r.n for r in records if r.z == z]
        spreads[f"{z.real:+.6f}{z.imag:+.6f}j"] = max(scaled) / min(scaled) if min(scaled) > 0 else float("inf")
    return {
        "max_error": max(errs),
        "median_error": statistics.median(errs),
        "fitted_C": sum(r.error / r.n for r in records) / inv,
        "spread_error_times_n": spreads,
    }


def typo_verdict(ns=(20, 40, 60), ctx=None, precision_bits=256):
    """Which reading of the E2 near-curve formula converges to the exact remainder.

    A reading converges when, at every sample point, the error at the
    largest n is below 0.05 and below half the error at the smallest n.

    Returns
    -------
    dict
        Errors per reading and point, the converging readings and the verdict
        ("pattern", "literal", "both" or "neither").
    """
    ctx = ctx or default_context(precision_bits)
    ns = sorted(ns)
    points = curve_sample_points(FamilyTag.E2, ctx)
    errors, converging = {}, []
    for reading in TYPO_READINGS:
        table = []
        for z in points:
            pt = ctx.point(z)
            row = []
            for n in (ns[0], ns[-1]):
                val, _ = curve_value(FamilyTag.E2, pt, n, reading)
                ex, dex = exact_value(FamilyTag.E2, n, z, precision_bits)
                row.append(comparison_error(ex, dex, val, n))
            table.append(row)
        errors[reading] = table
        if all(last < 0.05 and last < 0.5 * first for first, last in table):
            converging.append(reading)
    verdict = {0: "neither", 2: "both"}.get(len(converging), converging[0] if converging else "neither")
    return {"ns": [ns[0], ns[-1]], "errors": errors, "converging": converging, "verdict": verdict}
