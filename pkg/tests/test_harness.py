import cmath
import json

import pytest

from hpexp.asymptotics import predicted_zeros
from hpexp.errors import WrongRegion
from hpexp.harness import (
    ComparisonReport,
    family_zeros,
    nearest_zeros,
    remainder_zero_count,
    run_comparison,
)
from hpexp.harness.compare import RegionMismatch, check_case, comparison_error, exact_value, typo_verdict
from hpexp.harness.zeros import coefficient_span_bits, remainder_newton, scaled_polynomial
from hpexp.surface.algebra import Z_BRANCH


def as_set(zs, digits=8):
    return {(round(z.real, digits), round(z.imag, digits)) for z in zs}


@pytest.fixture(scope="module")
def a60():
    return [complex(z.value) for z in family_zeros("a", 60, 256)]


def test_a60_zero_count_and_symmetries(a60):
    assert len(a60) == 122
    assert as_set(a60) == as_set(z.conjugate() for z in a60)
    assert as_set(a60) == as_set(-z for z in a60)


def test_b_zeros_are_negated_c_zeros():
    b = [complex(z.value) for z in family_zeros("b", 30, 256)]
    c = [complex(z.value) for z in family_zeros("c", 30, 256)]
    assert as_set(b) == as_set(-z for z in c)


def test_zeros_are_zeros_of_the_exact_polynomial():
    for z in family_zeros("a", 60, 256)[::15]:
        val, der = exact_value("a", 60, z.value)
        assert abs(val / der) < 1e-30


def test_zeros_do_not_depend_on_requested_precision():
    lo = [complex(z.value) for z in family_zeros("b", 40, 128)]
    hi = [complex(z.value) for z in family_zeros("b", 40, 256)]
    assert as_set(lo, 10) == as_set(hi, 10)


def test_coefficient_span_grows_with_n():
    spans = [coefficient_span_bits(scaled_polynomial("b", n)) for n in (10, 30, 60)]
    assert spans == sorted(spans) and spans[-1] > 128


def test_unscaled_zeros_are_multiplied_by_3n():
    s = [complex(z.value) for z in family_zeros("a", 5, 128)]
    u = [complex(z.value) for z in family_zeros("a", 5, 128, scaled=False)]
    assert as_set((15 * z for z in s), 6) == as_set(u, 6)


def test_e1_zeros_near_branch_point_and_counts():
    n = 30
    found = nearest_zeros("e1", n, 3, 256, seeds=predicted_zeros("e1", n, 3, 256))
    for z in found:
        val, der = exact_value("e1", n, z.value)
        assert abs(val / der) < 1e-30
    zs = [complex(z.value) for z in found]
    assert len(set(zs)) == 3
    z1 = Z_BRANCH[0]
    radii = sorted(abs(z - z1) for z in zs)
    for k, r in enumerate(radii, 1):
        # the disk through the k-th zero, padded halfway to the next one, holds k zeros
        nxt = radii[k] if k < len(radii) else r * 1.3
        assert remainder_zero_count("e1", n, z1, (r + nxt) / 2, precision_bits=256) == k


def test_remainder_newton_converges_from_a_nearby_seed():
    z = complex(nearest_zeros("e1", 20, 1, 256, seeds=predicted_zeros("e1", 20, 1, 256))[0].value)
    again = complex(remainder_newton("e1", 20, z + 1e-4, 256).value)
    assert abs(again - z) < 1e-40


def test_comparison_error_near_a_zero():
    assert comparison_error(1.0, 1.0, 1.1, 10) == pytest.approx(0.1)
    # within the zero window the error is taken against |asym| / n
    assert comparison_error(1e-12, 1.0, 1e-3, 10) == pytest.approx(10, rel=1e-6)


def test_strong_comparison_report_round_trip():
    rep = run_comparison("a", "strong", [10, 20, 40], points=[2, 1.5j])
    assert isinstance(rep, ComparisonReport)
    assert len(rep.records) == 6
    doc = json.loads(json.dumps(rep.to_json()))
    assert doc["family"] == "A" and len(doc["records"]) == 6
    assert rep.summary["max_error"] < 0.05
    for spread in rep.summary["spread_error_times_n"].values():
        assert spread < 3
    rows = list(rep.csv_rows())
    assert rows[0][0] == "re_z" and len(rows) == 7


def test_comparison_rejects_bad_input():
    with pytest.raises(ValueError):
        run_comparison("a", "strong", [5])
    with pytest.raises(ValueError):
        run_comparison("a", "nonsense", [10])
    with pytest.raises(WrongRegion):
        run_comparison("b", "curve", [20], points=[-2])
    with pytest.raises(WrongRegion):
        run_comparison("c", "branch", [20])


def test_check_case_catches_a_wrong_region(ctx):
    with pytest.raises(RegionMismatch):
        check_case(2, "B/D_P_star", ctx)
    assert "D_P_star" in check_case(-0.5, "B/D_P_star", ctx)


def test_branch_comparison_errors_decay():
    rep = run_comparison("a", "branch", [20, 40])
    by_point = {}
    for r in rep.records:
        by_point.setdefault(r.z, []).append(r.error)
    for e20, e40 in by_point.values():
        assert e40 < 0.7 * e20


def test_typo_verdict_prefers_the_pattern_reading():
    v = typo_verdict()
    assert v["verdict"] == "pattern"
    assert all(row[1] > 0.5 for row in v["errors"]["literal"])


def test_e2_curve_comparison_carries_the_verdict():
    rep = run_comparison("e2", "curve", [20, 60])
    assert rep.typo_verdict["verdict"] == "pattern"
    z = rep.records[0].z
    assert abs(z - cmath.rect(abs(z), cmath.phase(z))) < 1e-15
