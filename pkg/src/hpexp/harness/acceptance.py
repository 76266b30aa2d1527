"""The acceptance suite: thirteen numbered checks plus the parametrix jump check."""

import cmath
import inspect
import math
import time
from dataclasses import dataclass, field

import mpmath
import numpy as np

from ..asymptotics import (
    ZERO_ANGLES,
    curve_value,
    default_context,
    det3,
    jump_residual,
    ntilde_point,
    predicted_zeros,
)
from ..exact_hp import (
    assemble_X,
    contact_order,
    det_identity,
    evaluate_X,
    jump_matrix,
    remainder_series,
    type2_construct,
)
from ..errors import HPError
from ..numerics.airy import airy_pair_mpc
from ..potentials import EXPECTED_MASS, g_boundary, g_value, measure, phi_evaluator
from ..potentials.phi import F1Map
from ..surface import branch_points, classify_region
from ..surface.algebra import Z_BRANCH
from ..surface.branch import z_of_w_mp
from ..surface.regions import D_P_STAR
from ..surface.sheets import distance_to_polyline
from .compare import exact_value, run_comparison, typo_verdict
from .zeros import family_zeros, nearest_zeros, remainder_zero_count


@dataclass
class CriterionResult:
    """Outcome of one acceptance check."""

    key: str
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0
    data: dict = field(default_factory=dict, repr=False)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.key:>3} {self.title} ({self.seconds:.1f} s): {self.detail}"


def _fmt(x):
    return f"{float(x):.3g}"


# 1 -----------------------------------------------------------------------------
def check_contact_order(max_total=15):
    """Both remainders vanish to order exactly n1+n2+n3+2 for n1+n2+n3 <= max_total."""
    bad = []
    count = 0
    for total in range(max_total + 1):
        for n1 in range(total + 1):
            for n2 in range(total - n1 + 1):
                n3 = total - n1 - n2
                t = type2_construct(n1, n2, n3)
                e1, e2 = remainder_series(t, total + 2)
                count += 1
                if contact_order(e1) != total + 2 or contact_order(e2) != total + 2:
                    bad.append((n1, n2, n3))
    return not bad, f"{count} index triples, {len(bad)} with wrong order", {"failures": bad}


# 2 -----------------------------------------------------------------------------
def check_det_identity(max_n=8):
    failed = []
    for n in range(1, max_n + 1):
        try:
            det_identity(n)
        except HPError:
            failed.append(n)
    return not failed, f"det = z^(6n+4) exactly for n = 1..{max_n}; failures {failed}", {"failures": failed}


# 3 -----------------------------------------------------------------------------
def x_jump_bits(n):
    return math.ceil(8 * (3 * n + 2) * math.log2(3 * n + 3))


def check_x_jump(ns=(10, 30), points=20, tol=1e-20):
    """max |X_in - X_out J| / max(1, |X_in|) at equally spaced points of |z| = 1."""
    worst = {}
    for n in ns:
        bits = x_jump_bits(n)
        ev = assemble_X(n)
        w = mpmath.mpf(0)
        with mpmath.workprec(bits):
            for k in range(points):
                z = mpmath.expjpi(mpmath.mpf(2 * k + 1) / points)
                xi = evaluate_X(ev, z, "inside", bits)
                xo = evaluate_X(ev, z, "outside", bits)
                J = jump_matrix(n, z)
                for i in range(3):
                    for j in range(3):
                        prod = sum(xo[i][m].value * J[m][j] for m in range(3))
                        w = max(w, abs(xi[i][j].value - prod) / max(1, abs(xi[i][j].value)))
        worst[n] = w
    ok = all(v <= tol for v in worst.values())
    return ok, ", ".join(f"n={n}: {_fmt(v)} at {x_jump_bits(n)} bits" for n, v in worst.items()), {}


# 4 -----------------------------------------------------------------------------
def check_branch_points(tol=1e-70):
    bd = branch_points(256)
    with mpmath.workprec(276):
        errs = [abs(z_of_w_mp(w.value) - z.value) for w, z in zip(bd.w, bd.z)]
    return max(errs) <= tol, f"max |z(w_k) - z_k| = {_fmt(max(errs))}", {}


# 5 -----------------------------------------------------------------------------
def check_masses(tol=1e-8):
    errs, neg = {}, {}
    for label, expected in EXPECTED_MASS.items():
        m = measure(label)
        errs[label] = abs(m.mass - expected)
        neg[label] = min(float(np.min(d)) for d in m.density.values())
    ok = max(errs.values()) <= tol and min(neg.values()) >= 0
    detail = ("mass errors " + ", ".join(f"{k} {_fmt(v)}" for k, v in errs.items())
              + f"; min density {_fmt(min(neg.values()))}")
    return ok, detail, {}


# 6 -----------------------------------------------------------------------------
def _grid_points(predicate, count=20, box=(-2.0, 2.0, -1.5, 1.5), res=41, clearance=0.03):
    cs = default_context().curves
    xs = np.linspace(box[0], box[1], res)
    ys = np.linspace(box[2], box[3], res)
    cand = []
    for y in ys:
        for x in xs:
            z = complex(x, y)
            if abs(z) < 0.05:
                continue
            if min(distance_to_polyline(c.nodes, z)[0] for c in cs.curves.values()) < clearance:
                continue
            region = classify_region(z, cs)
            if predicate(region):
                cand.append(z)
    idx = np.linspace(0, len(cand) - 1, count).round().astype(int)
    return [cand[i] for i in idx]


def _curve_nodes(label, count=20):
    c = default_context().curves[label]
    return [int(j) for j in np.linspace(0.1 * len(c.nodes), 0.9 * len(c.nodes), count).round()]


def check_g_identities(tol=1e-7):
    res = {}
    pts = _grid_points(lambda r: True, box=(-2.5, 2.5, -2.0, 2.0))
    res["gA=gP+gR"] = max(abs(cmath.exp(g_value(z, "A") - g_value(z, "P") - g_value(z, "R")) - 1) for z in pts)
    out = _grid_points(lambda r: D_P_STAR not in r, box=(-2.5, 2.5, -2.0, 2.0))
    res["gB+gP=3log z"] = max(abs(cmath.exp(g_value(z, "B") + g_value(z, "P")) / z**3 - 1) for z in out)
    inside = _grid_points(lambda r: D_P_STAR in r, box=(-0.7, 0.5, -0.7, 0.7), res=61)
    # exp(l) = 2 exp(-i pi) = -2
    res["gA-3z=gB+l"] = max(abs(cmath.exp(g_value(z, "A") - 3 * z - g_value(z, "B")) / -2 - 1) for z in inside)
    for S, label, sheet in (("A", "P", "P"), ("A", "R", "R"), ("B", "P*", "P"), ("C", "R*", "R")):
        ph = phi_evaluator(sheet)
        worst = 0.0
        for j in _curve_nodes(label):
            jump = cmath.exp(g_boundary(S, label, j, 1) - g_boundary(S, label, j, -1))
            plus = ph.boundary_exact(label, j)
            worst = max(worst, abs(jump - cmath.exp(-2 * plus)))
            if label in ("P", "R"):
                minus = ph.boundary(label, j, -1)
                worst = max(worst, abs(jump - cmath.exp(2 * minus)))
        res[f"jump {S} on {label}"] = worst
    ok = max(res.values()) <= tol
    return ok, ", ".join(f"{k} {_fmt(v)}" for k, v in res.items()), res


# 7 -----------------------------------------------------------------------------
def check_f1(tol_slope=1e-6, tol_imag=1e-8):
    ctx = default_context()
    fm = F1Map(ctx.curves)
    with mpmath.workprec(276):
        d = fm.derivative(ctx.branch.z[0], precision_bits=256).value
        c1 = mpmath.cbrt(2) * mpmath.power(3, mpmath.mpf(5) / 12) * mpmath.expjpi(mpmath.mpf(-7) / 36)
        slope_err = abs(d - c1)
    c = ctx.curves["P"]
    z1 = Z_BRANCH[0]
    vals = []
    for r in (0.1, 0.2, 0.3):
        j = int(np.argmin(np.abs(np.abs(c.nodes - z1) - r)))
        vals.append(complex(fm.value(complex(c.nodes[j]), 256).value))
    ok = slope_err <= tol_slope and all(abs(v.imag) <= tol_imag and v.real < 0 for v in vals)
    detail = f"|f1'(z1) - c1| = {_fmt(slope_err)}; f1 on Gamma_P: " + ", ".join(f"{v:.4g}" for v in vals)
    return ok, detail, {}


# 8 -----------------------------------------------------------------------------
def check_airy(tol_ode=1e-10, tol_w=1e-12, bits=256):
    h = mpmath.mpf(2) ** (-bits // 3)
    worst_ode = mpmath.mpf(0)
    with mpmath.workprec(bits + 20):
        for x in np.linspace(-10, 10, 21):
            for y in np.linspace(-10, 10, 21):
                s = mpmath.mpc(x, y)
                if abs(s) > 10:
                    continue
                ai, aip = airy_pair_mpc(s, bits)
                _, up = airy_pair_mpc(s + h, bits)
                _, dn = airy_pair_mpc(s - h, bits)
                second = (up - dn) / (2 * h)
                worst_ode = max(worst_ode, abs(second - s * ai) / max(1, abs(s * ai)))
        omega = mpmath.expjpi(mpmath.mpf(2) / 3)
        target = -mpmath.expjpi(mpmath.mpf(1) / 6) / (2 * mpmath.pi)
        worst_w = mpmath.mpf(0)
        for k in range(50):
            s = mpmath.mpf(1 + 4 * (k % 5) / 2) * mpmath.expjpi(mpmath.mpf(2 * k + 1) / 50)
            a, ap = airy_pair_mpc(s, bits)
            b, bp = airy_pair_mpc(omega * s, bits)
            worst_w = max(worst_w, abs(a * bp - omega**2 * b * ap - target))
    ok = worst_ode <= tol_ode and worst_w <= tol_w
    return ok, f"ODE residual {_fmt(worst_ode)}, Wronskian residual {_fmt(worst_w)}", {}


# 9 -----------------------------------------------------------------------------
def check_strong(ns=(10, 20, 40), factor=3.0, last_tol=0.1, precision_bits=256):
    worst_spread, worst_last, parts = 0.0, 0.0, []
    for fam in ("A", "B", "C", "E1", "E2"):
        rep = run_comparison(fam, "strong", ns, precision_bits=precision_bits)
        spread = max(rep.summary["spread_error_times_n"].values())
        last = max(r.error for r in rep.records if r.n == ns[-1])
        worst_spread, worst_last = max(worst_spread, spread), max(worst_last, last)
        parts.append(f"{fam} spread {spread:.3f} e{ns[-1]} {last:.3g}")
    ok = worst_spread <= factor and worst_last <= last_tol
    return ok, "; ".join(parts), {}


# 10 ----------------------------------------------------------------------------
def check_curve_A(fracs=(0.25, 0.5, 0.75), tol=0.15, precision_bits=256):
    ctx = default_context(precision_bits)
    c = ctx.curves["P"]
    rows, ok = [], True
    for f in fracs:
        z = complex(c.nodes[int(f * (len(c.nodes) - 1))])
        pt = ctx.point(z)
        errs = []
        for n in (30, 60):
            val, _ = curve_value("A", pt, n)
            ex, _ = exact_value("A", n, z, precision_bits)
            errs.append(float(abs(ex / val - 1)))
        ok &= errs[0] <= tol and errs[1] < errs[0]
        rows.append(f"{f}: {errs[0]:.3g} -> {errs[1]:.3g}")
    return ok, "n=30 -> 60 at node fractions " + ", ".join(rows), {}


# 11 ----------------------------------------------------------------------------
def zero_law(family, ns=(30, 60), count=3, precision_bits=256):
    """Distances and angle deviations of the nearest zeros from their predictions.

    Returns a dict with per-n lists of |delta| * n and |arg(z - z1) - theta|.
    """
    z1 = Z_BRANCH[0]
    theta = float(ZERO_ANGLES[family]) * math.pi
    out = {}
    for n in ns:
        pred = predicted_zeros(family, n, count, precision_bits)
        seeds = pred if family == "E1" else None
        zs = [complex(z.value) for z in nearest_zeros(family.lower(), n, count, precision_bits, seeds=seeds)]
        pc = [complex(p.value) for p in pred]
        row = {
            "zeros": zs,
            "scaled_error": [abs(a - b) * n for a, b in zip(zs, pc)],
            "angle_dev": [cmath.phase((a - z1) * cmath.exp(-1j * theta)) for a in zs],
        }
        if family == "E1":
            d = [abs(z - z1) for z in zs]
            radii = [(d[k] + d[k + 1]) / 2 for k in range(count - 1)] + [d[-1] + (d[-1] - d[-2]) / 2]
            row["counts"] = [remainder_zero_count("e1", n, z1, r, precision_bits=precision_bits) for r in radii]
        out[n] = row
    return out


def check_zero_law(max_C=5.0, angle_tol=0.1, precision_bits=256):
    """Fitted C over n = 30, 60; approach direction judged at the largest n."""
    parts, ok, data = [], True, {}
    for fam in ("A", "B", "E1"):
        law = zero_law(fam, precision_bits=precision_bits)
        data[fam] = law
        C = max(max(row["scaled_error"]) for row in law.values())
        last = law[max(law)]
        dev = max(abs(a) for a in last["angle_dev"])
        counted = all(row.get("counts", [1, 2, 3]) == [1, 2, 3] for row in law.values())
        fam_ok = C <= max_C and dev <= angle_tol and counted
        ok &= fam_ok
        devs30 = max(abs(a) for a in law[min(law)]["angle_dev"])
        parts.append(f"{fam} C={C:.2f} angle dev {dev:.3f} rad at n={max(law)} ({devs30:.3f} at n={min(law)})"
                     + ("" if fam_ok else " FAIL"))
    return ok, "; ".join(parts), data


# 12 ----------------------------------------------------------------------------
def check_weak_star(n=60, near=0.05, min_fraction=0.95, max_miss=3, precision_bits=256):
    cs = default_context().curves
    excl = 3 * n ** (-2 / 3)
    zs = [complex(z.value) for z in family_zeros("a", n, precision_bits)]
    kept = [z for z in zs if min(abs(z - zk) for zk in Z_BRANCH) > excl]
    close = sum(1 for z in kept if min(distance_to_polyline(cs[l].nodes, z)[0] for l in ("P", "R")) < near)
    frac = close / len(kept)
    # B_n has 2n zeros; nu_{B_n} -> mu_B / 2 puts n mu_B(half) of them on a half of Gamma_P*
    # levels are pi times the running mass; interpolate at the real-axis crossing
    c = cs["P*"]
    k = next(i for i in range(len(c.nodes) - 1) if (c.nodes[i].imag > 0) != (c.nodes[i + 1].imag > 0))
    t = c.nodes[k].imag / (c.nodes[k].imag - c.nodes[k + 1].imag)
    below = (c.levels[k] + t * (c.levels[k + 1] - c.levels[k])) / math.pi
    first_half = "lower" if c.nodes[0].imag < 0 else "upper"
    other = "upper" if first_half == "lower" else "lower"
    halves = {first_half: below, other: c.levels[-1] / math.pi - below}
    bz = [complex(z.value) for z in family_zeros("b", n, precision_bits)]
    on = [z for z in bz if distance_to_polyline(cs["P*"].nodes, z)[0] < near]
    counts = {"lower": sum(1 for z in on if z.imag < 0), "upper": sum(1 for z in on if z.imag > 0)}
    diffs = {h: counts[h] - n * halves[h] for h in halves}
    frac_diffs = {h: counts[h] / (2 * n) - halves[h] / 2 for h in halves}
    ok = frac >= min_fraction and all(abs(d) <= max_miss for d in diffs.values())
    detail = (f"A{n}: {close}/{len(kept)} = {frac:.3f} near Gamma_P u Gamma_R; "
              f"B{n} per half of Gamma_P*: {counts} vs n mu_B(half) = "
              + ", ".join(f"{h} {n * m:.2f}" for h, m in halves.items())
              + "; fraction gaps " + ", ".join(f"{h} {d:+.3f}" for h, d in frac_diffs.items()))
    return ok, detail, {"fraction": frac, "counts": counts, "halves": halves}


# 13 ----------------------------------------------------------------------------
def check_typo(precision_bits=256):
    v = typo_verdict(ctx=default_context(precision_bits), precision_bits=precision_bits)
    detail = f"verdict {v['verdict']}; converging readings {v['converging']}"
    return v["verdict"] != "neither", detail, v


# parametrix --------------------------------------------------------------------
def check_ntilde(tol=1e-30, precision_bits=256):
    """N~ jumps on Gamma_P and Gamma_R and det N~ = 1 (fails when the sqrt anchor is corrupted)."""
    ctx = default_context(precision_bits)
    worst = mpmath.mpf(0)
    for label in ("P", "R"):
        n = len(ctx.curves[label].nodes)
        for j in (n // 4, n // 2, 3 * n // 4):
            worst = max(worst, jump_residual(label, j, ctx))
    det_err = mpmath.mpf(0)
    for z in (2, -2 + 0.5j, 1j, -0.3 + 0.1j):
        pt = ctx.point(z)
        with mpmath.workprec(pt.precision_bits):
            det_err = max(det_err, abs(det3(ntilde_point(pt)) - 1))
    ok = worst <= tol and det_err <= tol
    return ok, f"jump residual {_fmt(worst)}, |det - 1| {_fmt(det_err)}", {}


CRITERIA = (
    ("1", "order of contact", check_contact_order),
    ("2", "determinant identity", check_det_identity),
    ("3", "jump of X", check_x_jump),
    ("4", "branch points", check_branch_points),
    ("5", "measure masses", check_masses),
    ("6", "g identities and jumps", check_g_identities),
    ("7", "f1 calibration", check_f1),
    ("8", "Airy kernel", check_airy),
    ("9", "strong asymptotics rate", check_strong),
    ("10", "near-curve formulas", check_curve_A),
    ("11", "Airy regime zero law", check_zero_law),
    ("12", "weak-* portrait", check_weak_star),
    ("13", "E2 reading verdict", check_typo),
    ("N", "parametrix jumps", check_ntilde),
)


def run_check(key, precision_bits=None):
    """Run one check; ``precision_bits`` reaches the checks whose formulas take it."""
    for k, title, fn in CRITERIA:
        if k == key:
            kwargs = {}
            if precision_bits and "precision_bits" in inspect.signature(fn).parameters:
                kwargs["precision_bits"] = precision_bits
            t = time.perf_counter()
            try:
                ok, detail, data = fn(**kwargs)
            except (HPError, ArithmeticError, ValueError) as exc:
                ok, detail, data = False, f"{type(exc).__name__}: {exc}", {}
            return CriterionResult(k, title, bool(ok), detail, time.perf_counter() - t, data)
    raise KeyError(f"no acceptance check {key!r}")


def run_acceptance(keys=None, emit=None, precision_bits=None):
    """Run the selected checks (all by default); ``emit`` receives each result as it completes."""
    results = []
    for k, _, _ in CRITERIA:
        if keys is not None and k not in keys:
            continue
        r = run_check(k, precision_bits)
        results.append(r)
        if emit:
            emit(r)
    return results
