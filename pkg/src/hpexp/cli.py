"""Command-line interface: construct, zeros, curves, measures, compare, branch, selftest."""

import argparse
import csv
import io
import json
import math
import sys
from contextlib import nullcontext
from dataclasses import dataclass

import mpmath
import numpy as np

from .asymptotics import predicted_zeros
from .config import default_precision
from .errors import HPError, NearBranchPoint, NoConvergence, OriginDegenerate, WrongRegion
from .exact_hp import family_to_json, scale_family, triple_to_json, type1_construct, type2_construct
from .harness import acceptance
from .harness.acceptance import zero_law
from .harness.compare import run_comparison
from .harness.zeros import MAX_N, family_zeros
from .potentials import EXPECTED_MASS, SUPPORTS, measure
from .surface import LABELS, classify_region, trace_curves
from .surface.sqrt import corrupted_anchor

EXIT_OK, EXIT_SELFTEST, EXIT_CONSTRUCT, EXIT_ROOTS, EXIT_REGION = 0, 1, 2, 3, 4
MIN_BITS = 128
MAX_GRID = 10**6


@dataclass(frozen=True)
class Grid:
    x0: float
    x1: float
    y0: float
    y1: float
    nx: int
    ny: int

    @classmethod
    def parse(cls, text):
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 6:
            raise argparse.ArgumentTypeError("grid must be x0,x1,y0,y1,nx,ny")
        g = cls(*map(float, parts[:4]), int(parts[4]), int(parts[5]))
        if g.nx < 1 or g.ny < 1 or g.nx * g.ny > MAX_GRID:
            raise argparse.ArgumentTypeError(f"grid resolution must be between 1 and {MAX_GRID} points")
        return g

    def points(self):
        xs = [self.x0 + (self.x1 - self.x0) * i / max(self.nx - 1, 1) for i in range(self.nx)]
        ys = [self.y0 + (self.y1 - self.y0) * j / max(self.ny - 1, 1) for j in range(self.ny)]
        return [complex(x, y) for y in ys for x in xs]


@dataclass(frozen=True)
class RunConfig:
    """Validated options shared by the subcommands."""

    n: int = None
    precision_bits: int = 256
    out: str = None
    fmt: str = "json"
    family: str = None
    grid: Grid = None

    def __post_init__(self):
        if self.n is not None and self.n < 1:
            raise ValueError("n must be at least 1")
        if self.precision_bits < MIN_BITS:
            raise ValueError(f"precision must be at least {MIN_BITS} bits")


def _indices(text):
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("indices must be n1,n2,n3") from None
    if len(vals) != 3 or min(vals) < 0:
        raise argparse.ArgumentTypeError("indices must be three nonnegative integers")
    return vals


def _points(text):
    try:
        return [complex(p.replace(" ", "")) for p in text.split(";") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("points must be complex numbers separated by ';'") from None


def _emit(cfg, doc=None, rows=None):
    """Write a JSON document or CSV rows to --out or standard output."""
    buf = io.StringIO()
    if cfg.fmt == "csv":
        csv.writer(buf, lineterminator="\n").writerows(rows)
    else:
        json.dump(doc, buf, indent=1)
        buf.write("\n")
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())


def _cz(z):
    z = complex(z)
    return [z.real, z.imag]


# construct ----------------------------------------------------------------------
def cmd_construct(args, cfg):
    try:
        if args.scaled:
            if cfg.n is None:
                raise ValueError("--scaled needs --n")
            doc = family_to_json(scale_family(cfg.n))
        else:
            if args.indices is None:
                raise ValueError("--indices is required unless --scaled is given")
            if args.type == "type1":
                doc = triple_to_json(type1_construct(*args.indices))
            else:
                doc = triple_to_json(type2_construct(*args.indices, normalization=args.normalization))
    except (HPError, ValueError) as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCT
    if cfg.fmt == "csv":
        rows = [["poly", "power", "num", "den"]]
        for name, coeffs in doc["polys"].items():
            rows += [[name, k, c["num"], c["den"]] for k, c in enumerate(coeffs)]
        _emit(cfg, rows=rows)
    else:
        _emit(cfg, doc)
    return EXIT_OK


# zeros ----------------------------------------------------------------------------
def cmd_zeros(args, cfg):
    if cfg.n is None or not 1 <= cfg.n <= MAX_N:
        print(f"--n must be between 1 and {MAX_N}", file=sys.stderr)
        return EXIT_ROOTS
    try:
        zs = family_zeros(cfg.family, cfg.n, cfg.precision_bits, radius=args.radius, scaled=not args.unscaled)
    except (NoConvergence, ArithmeticError) as exc:
        print(f"root finding failed: {exc}", file=sys.stderr)
        return EXIT_ROOTS
    digits = max(17, int(cfg.precision_bits * 0.30103) - 5)
    strs = [(mpmath.nstr(z.re, digits), mpmath.nstr(z.im, digits)) for z in zs]
    variable = "z" if not args.unscaled else "3nz"
    if cfg.fmt == "csv":
        _emit(cfg, rows=[["index", "re", "im"]] + [[i, re, im] for i, (re, im) in enumerate(strs)])
    else:
        _emit(cfg, {"family": cfg.family, "n": cfg.n, "variable": variable, "count": len(zs),
                    "zeros": [[re, im] for re, im in strs]})
    return EXIT_OK


# curves and measures ----------------------------------------------------------------
def _region_name(z, cs):
    # the origin and the branch points have no sheet labels
    try:
        return classify_region(z, cs).name
    except (OriginDegenerate, NearBranchPoint) as exc:
        return f"undefined ({type(exc).__name__})"


def cmd_curves(args, cfg):
    cs = trace_curves()
    regions = None
    if cfg.grid is not None:
        regions = [(z, _region_name(z, cs)) for z in cfg.grid.points()]
    if cfg.fmt == "csv":
        rows = [["label", "node", "re_z", "im_z", "density", "running_mass"]]
        for label in LABELS:
            c = cs[label]
            for i, (z, d, lv) in enumerate(zip(c.nodes, c.density, c.levels)):
                rows.append([label, i, repr(z.real), repr(z.imag), repr(float(d)), repr(float(lv) / math.pi)])
        if regions is not None:
            rows.append([])
            rows.append(["re_z", "im_z", "region"])
            rows += [[repr(z.real), repr(z.imag), name] for z, name in regions]
        _emit(cfg, rows=rows)
        return EXIT_OK
    doc = {"curves": {}}
    for label in LABELS:
        c = cs[label]
        doc["curves"][label] = {
            "sheet": c.sheet,
            "start": c.start,
            "end": c.end,
            "nodes": [_cz(z) for z in c.nodes],
            "density": [float(d) for d in c.density],
        }
    if regions is not None:
        doc["regions"] = [{"z": _cz(z), "region": name} for z, name in regions]
    _emit(cfg, doc)
    return EXIT_OK


def cmd_measures(args, cfg):
    table = []
    for label in EXPECTED_MASS:
        m = measure(label)
        table.append({
            "measure": label,
            "support": list(SUPPORTS[label]),
            "mass_re": m.mass.real,
            "mass_im": m.mass.imag,
            "expected": EXPECTED_MASS[label],
            "min_density": min(float(np.min(d)) for d in m.density.values()),
        })
    if cfg.fmt == "csv":
        keys = ["measure", "mass_re", "mass_im", "expected", "min_density"]
        _emit(cfg, rows=[keys] + [[row[k] for k in keys] for row in table])
    else:
        _emit(cfg, {"masses": table})
    return EXIT_OK


# compare and branch -------------------------------------------------------------
def cmd_compare(args, cfg):
    ns = args.ns or [10, 20, 40]
    try:
        report = run_comparison(cfg.family, args.formula, ns, points=args.points,
                                typo=args.typo_switch, precision_bits=cfg.precision_bits)
    except WrongRegion as exc:
        print(f"region mismatch: {exc}", file=sys.stderr)
        return EXIT_REGION
    if cfg.fmt == "csv":
        _emit(cfg, rows=list(report.csv_rows()))
    else:
        _emit(cfg, report.to_json())
    return EXIT_OK


def cmd_branch(args, cfg):
    family = cfg.family.upper()
    if family not in ("A", "B", "E1"):
        print("the Airy regime covers families a, b and e1", file=sys.stderr)
        return EXIT_REGION
    ns = args.ns or [30, 60]
    try:
        law = zero_law(family, ns=tuple(ns), count=args.count, precision_bits=cfg.precision_bits)
    except (NoConvergence, ArithmeticError) as exc:
        print(f"root finding failed: {exc}", file=sys.stderr)
        return EXIT_ROOTS
    rows = [["n", "nu", "re_zero", "im_zero", "re_predicted", "im_predicted", "error_times_n", "angle_deviation"]]
    doc = {"family": family, "results": []}
    for n, row in law.items():
        pred = [complex(p.value) for p in predicted_zeros(family, n, args.count, cfg.precision_bits)]
        for nu, (z, p, e, a) in enumerate(zip(row["zeros"], pred, row["scaled_error"], row["angle_dev"]), 1):
            rows.append([n, nu, z.real, z.imag, p.real, p.imag, e, a])
            doc["results"].append({"n": n, "nu": nu, "zero": _cz(z), "predicted": _cz(p),
                                   "error_times_n": e, "angle_deviation": a})
    if cfg.fmt == "csv":
        _emit(cfg, rows=rows)
    else:
        _emit(cfg, doc)
    return EXIT_OK


# selftest -----------------------------------------------------------------------
def cmd_selftest(args, cfg):
    keys = set(args.only.split(",")) if args.only else None
    results = []

    def emit(r):
        results.append(r)
        print(r.line(), flush=True)

    guard = corrupted_anchor() if args.corrupt_anchor else nullcontext()
    with guard:
        acceptance.run_acceptance(keys, emit, precision_bits=cfg.precision_bits)
    failed = [r.key for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed" + (f"; failed: {', '.join(failed)}" if failed else ""))
    return EXIT_SELFTEST if failed else EXIT_OK


COMMANDS = {
    "construct": cmd_construct,
    "zeros": cmd_zeros,
    "curves": cmd_curves,
    "measures": cmd_measures,
    "compare": cmd_compare,
    "branch": cmd_branch,
    "selftest": cmd_selftest,
}

FAMILIES = ("a", "b", "c", "e1", "e2", "p", "q", "r")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision-bits", type=int, default=None,
                        help="working precision (default: HPEXP_PRECISION_BITS or 256)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="output file (default: standard output)")
    common.add_argument("--grid", type=Grid.parse, help='sample grid "x0,x1,y0,y1,nx,ny"')

    parser = argparse.ArgumentParser(prog="hpexp", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="export exact approximants")
    p.add_argument("--type", choices=("type1", "type2"), default="type2")
    p.add_argument("--indices", type=_indices)
    p.add_argument("--normalization", choices=("A_monic", "B_monic", "C_monic"))
    p.add_argument("--scaled", action="store_true", help="scaled family A_n, B_n, C_n of indices (n, n, n)")
    p.add_argument("--n", type=int)

    p = sub.add_parser("zeros", parents=[common], help="zeros of a scaled polynomial or remainder")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--unscaled", action="store_true", help="report zeros in the variable 3nz")
    p.add_argument("--radius", type=float, default=1.2, help="search radius for e1, e2")

    sub.add_parser("curves", parents=[common], help="curve tables with densities")
    sub.add_parser("measures", parents=[common], help="mass table of the measures")

    p = sub.add_parser("compare", parents=[common], help="exact values against an asymptotic formula")
    p.add_argument("--family", choices=("a", "b", "c", "e1", "e2"), required=True)
    p.add_argument("--formula", choices=("strong", "curve", "branch"), default="strong")
    p.add_argument("--n", dest="ns", type=int, nargs="+")
    p.add_argument("--points", type=_points, help="sample points separated by ';' (e.g. '2;1.5j')")
    p.add_argument("--typo-switch", choices=("pattern", "literal"), default="pattern")

    p = sub.add_parser("branch", parents=[common], help="zeros near z1 against the Airy-zero predictions")
    p.add_argument("--family", choices=("a", "b", "e1"), required=True)
    p.add_argument("--n", dest="ns", type=int, nargs="+")
    p.add_argument("--count", type=int, default=3)

    p = sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    p.add_argument("--only", help="comma-separated check keys (1..13, N)")
    p.add_argument("--corrupt-anchor", action="store_true", help="negative control: flip the sqrt anchor")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            n=getattr(args, "n", None),
            precision_bits=args.precision_bits or default_precision(),
            out=args.out,
            fmt=args.format,
            family=getattr(args, "family", None),
            grid=args.grid,
        )
    except ValueError as exc:
        parser.error(str(exc))
    lo = {"compare": 10, "branch": 2}.get(args.command)
    if lo is not None and args.ns and not all(lo <= n <= MAX_N for n in args.ns):
        parser.error(f"{args.command} runs for {lo} <= n <= {MAX_N}")
    return COMMANDS[args.command](args, cfg)


if __name__ == "__main__":
    sys.exit(main())
