import cmath

import mpmath
import pytest

from hpexp.asymptotics import (
    BRANCH_FAMILIES,
    branch_asym,
    curve_asym,
    det3,
    h_tilde,
    jump_residual,
    ntilde,
    ntilde_point,
    predicted_zeros,
    second_row,
    strong_asym,
    strong_case,
)
from hpexp.errors import OutOfDisk, WrongRegion
from hpexp.harness.compare import comparison_error, exact_value
from hpexp.harness.zeros import nearest_zeros
from hpexp.surface import sheet_values
from hpexp.surface.algebra import Z_BRANCH
from hpexp.surface.sqrt import corrupted_anchor

Z1 = Z_BRANCH[0]


def rel(a, b):
    return abs(complex(a) - complex(b)) / abs(complex(b))


def test_sheet_values_first_order_at_ten(curves):
    f = sheet_values(10, curves, 128)
    got = [complex(f[s].value) for s in "PQR"]
    assert got == pytest.approx([-1 + 1 / 30, 1 / 30, 1 + 1 / 30], abs=3e-3)


def test_ntilde_tends_to_identity():
    m = ntilde(300 + 200j, 128)
    for i in range(3):
        for j in range(3):
            assert abs(complex(m[i][j]) - (i == j)) < 0.02


@pytest.mark.parametrize("z", [2, -2 + 0.5j, 1j, -0.3 + 0.1j, 0.7 - 0.4j])
def test_ntilde_determinant_is_one(ctx, z):
    pt = ctx.point(z)
    with mpmath.workprec(pt.precision_bits):
        assert abs(det3(ntilde_point(pt)) - 1) < mpmath.mpf(10) ** -60


@pytest.mark.parametrize("label", ["P", "R"])
def test_ntilde_jumps(ctx, label):
    n = len(ctx.curves[label].nodes)
    for j in (n // 5, n // 2, 4 * n // 5):
        assert jump_residual(label, j, ctx) < mpmath.mpf(10) ** -60


@pytest.mark.parametrize("z", [2, -1 + 1j, 0.4 + 0.3j])
def test_second_row_through_potentials(ctx, z):
    pt = ctx.point(z)
    m = ntilde_point(pt)
    row = second_row(pt)
    for a, b in zip(m[1], row):
        assert abs(a - b) <= mpmath.mpf(10) ** -60 * max(1, abs(a))


def test_corrupted_anchor_breaks_the_jumps(ctx):
    j = len(ctx.curves["P"].nodes) // 2
    assert jump_residual("P", j, ctx) < 1e-60
    with corrupted_anchor():
        assert jump_residual("P", j, ctx) > 1e-3
    assert jump_residual("P", j, ctx) < 1e-60


def test_strong_a_at_two_error_scales_like_one_over_n(ctx):
    scaled = []
    for n in (10, 20, 40):
        ex, _ = exact_value("a", n, 2)
        scaled.append(rel(strong_asym(2, "a", n, ctx=ctx), ex) * n)
    assert max(scaled) / min(scaled) < 3


@pytest.mark.parametrize("family, z", [("b", -2 + 0.5j), ("b", -0.1 + 0.1j), ("c", 0.1 + 0.1j), ("e1", 2), ("e2", -2)])
def test_strong_converges(ctx, family, z):
    errs = [rel(strong_asym(z, family, n, ctx=ctx), exact_value(family, n, z)[0]) for n in (20, 40)]
    assert errs[1] < 0.6 * errs[0]
    assert errs[1] < 0.1


def test_strong_rejects_zero_curves(ctx):
    node = ctx.curves["P"].nodes[len(ctx.curves["P"].nodes) // 2]
    with pytest.raises(WrongRegion):
        strong_asym(node, "a", 20, ctx=ctx)
    assert strong_case("b", ctx.point(-0.5)) == "B/D_P_star"


def test_curve_formula_on_gamma_p(ctx):
    c = ctx.curves["P"].nodes
    z = complex(c[len(c) // 2])
    # the error oscillates with n on the curve, so bound error * n
    for n in (20, 40, 80):
        ex, dex = exact_value("a", n, z)
        assert comparison_error(ex, dex, curve_asym(z, "a", n, ctx=ctx).value, n) * n < 1.5


def test_curve_formula_region_checks(ctx):
    with pytest.raises(WrongRegion):
        curve_asym(-2, "b", 20, ctx=ctx)
    with pytest.raises(WrongRegion):
        curve_asym(-0.5, "e1", 20, ctx=ctx)


@pytest.mark.parametrize("family", [f.value for f in BRANCH_FAMILIES])
def test_branch_formula_error_scales_like_one_over_n(ctx, family):
    z = Z1 + 0.08 * cmath.exp(1j * cmath.pi / 3)
    errs = [rel(branch_asym(z, family, n, ctx=ctx), exact_value(family, n, z)[0]) for n in (20, 40, 80)]
    assert 1.7 < errs[0] / errs[1] < 2.3 and 1.7 < errs[1] / errs[2] < 2.3
    assert errs[2] < 0.01


def test_branch_formula_outside_disk(ctx):
    with pytest.raises(OutOfDisk):
        branch_asym(Z1 + 0.2, "a", 20, ctx=ctx)


def _ring(radius, count=24):
    return [Z1 + radius * cmath.exp(2j * cmath.pi * k / count) for k in range(count)]


def test_h_tilde_is_analytic_in_the_disk(ctx):
    # mean value property on two rings crossing Gamma_P
    means = []
    for r in (0.03, 0.06):
        vals = [h_tilde(z, ctx=ctx) for z in _ring(r, 48)]
        means.append([sum(complex(v[i]) for v in vals) / len(vals) for i in range(2)])
    for a, b in zip(*means):
        assert abs(a - b) < 1e-8 * max(1, abs(a))


def _branch_vs_strong(z, family, n, ctx):
    s = strong_asym(z, family, n, ctx=ctx)
    b = branch_asym(z, family, n, ctx=ctx, delta=0.35, large_argument=True)
    return rel(b, s)


def test_branch_matches_strong_up_to_order_one_over_n(ctx):
    for z in _ring(0.3, 12):
        for family in ("a", "b", "e1"):
            d20, d40 = (_branch_vs_strong(z, family, n, ctx) for n in (20, 40))
            assert 1.8 < d20 / d40 < 2.2
            assert d40 < 0.05


def test_branch_matches_strong_for_a_above_the_branch_point(ctx):
    assert _branch_vs_strong(Z1 + 0.3j, "a", 40, ctx) < 1e-3


@pytest.mark.xfail(
    strict=True,
    reason="the two leading-order forms differ by an O(1/n) term whose constant on the ring "
    "|z - z1| = 0.3 ranges from 0.017 to 1.6, so relative 1e-3 at n = 40 is out of reach",
)
def test_branch_matches_strong_to_1e3_on_whole_ring(ctx):
    worst = max(_branch_vs_strong(z, f, 40, ctx) for z in _ring(0.3, 12) for f in ("a", "b", "e1"))
    assert worst < 1e-3


def test_predicted_zeros_against_direct_formula():
    n = 50
    preds = predicted_zeros("a", n, 3, 128)
    with mpmath.workprec(128):
        rho = mpmath.mpf(2) ** (-mpmath.mpf(1) / 3) * mpmath.mpf(3) ** (-mpmath.mpf(5) / 12)
        for k, p in enumerate(preds, 1):
            z = mpmath.mpc(Z1) + rho * mpmath.expjpi(mpmath.mpf(-29) / 36) * (-mpmath.airyaizero(k)) * mpmath.mpf(n) ** (
                -mpmath.mpf(2) / 3)
            assert abs(complex(p) - complex(z)) < 1e-12


def test_predicted_zeros_track_the_polynomial_zeros():
    n = 40
    pred = [complex(z) for z in predicted_zeros("a", n, 2, 256)]
    exact = [complex(z.value) for z in nearest_zeros("a", n, 2, 256)]
    for p, e in zip(pred, exact):
        assert abs(p - e) < abs(p - Z1) * 0.2
