import cmath

import mpmath
import numpy as np
import pytest

from hpexp.errors import NearBranchPoint
from hpexp.surface import LABELS, branch_points, classify_region, sheet_values, sqrt_branch
from hpexp.surface.sqrt import corrupted_anchor


def cubic_discriminant(z):
    # z w^3 - w^2 - z w + 1/3
    a, b, c, d = z, -1, -z, 1 / 3
    return 18 * a * b * c * d - 4 * b**3 * d + b**2 * c**2 - 4 * a * c**3 - 27 * a**2 * d**2


def test_branch_points_are_discriminant_zeros():
    bd = branch_points(256)
    for zk in bd.z:
        assert abs(cubic_discriminant(complex(zk.value))) < 1e-13


def test_branch_points_are_critical_values():
    bd = branch_points(256)
    with mpmath.workprec(256):
        for wk, zk in zip(bd.w, bd.z):
            w = wk.value
            dz = mpmath.diff(lambda t: (t * t - mpmath.mpf(1) / 3) / (t * (t * t - 1)), w)
            assert abs(dz) < mpmath.mpf(10) ** -60
            assert abs(3 * w**4 + 1) < mpmath.mpf(10) ** -70


def test_first_branch_point_value():
    z1 = complex(branch_points(128).z[0].value)
    assert z1 == pytest.approx(-0.19666 + 0.73394j, abs=1e-5)


@pytest.mark.parametrize("z", [20, -20, 20j, -15 + 5j])
def test_sheet_values_at_infinity(curves, z):
    f = sheet_values(z, curves, 128)
    got = [complex(f[s].value) for s in "PQR"]
    assert got == pytest.approx([-1, 0, 1], abs=0.1)


@pytest.mark.parametrize("z", [0.5, -0.3 + 0.1j, 1j, 2 - 1j])
def test_sheet_values_satisfy_vieta(curves, z):
    f = sheet_values(z, curves, 200)
    assert max(f.vieta_residuals()) < mpmath.mpf(10) ** -50


def test_sheet_values_are_continuous_along_a_path(curves):
    # a path in the upper half plane that stays away from the curves near the branch points
    path = [3 * cmath.exp(1j * t) for t in np.linspace(0.05, 3.09, 200)]
    prev = None
    for z in path:
        f = sheet_values(z, curves, 64)
        cur = np.array([complex(f[s].value) for s in "PQR"])
        if prev is not None:
            assert np.max(np.abs(cur - prev)) < 0.05
        prev = cur


def test_sheet_values_near_branch_point_raise(curves):
    z1 = complex(branch_points(64).z[0].value)
    with pytest.raises(NearBranchPoint):
        sheet_values(z1 + 1e-14, curves, 64)


@pytest.mark.parametrize(
    "z, part",
    [(2, "D_inf_R"), (-2, "D_inf_P"), (1.5j, "D_inf_U"), (-1.5j, "D_inf_L"), (0.5, "D_R_star"), (-0.5, "D_P_star")],
)
def test_region_labels(curves, z, part):
    assert part in classify_region(z, curves)


def test_points_on_traced_curves_are_reported(curves):
    for label in LABELS:
        nodes = curves[label].nodes
        z = nodes[len(nodes) // 2]
        assert classify_region(z, curves).curve == label


def test_curves_are_conjugate_and_reflection_symmetric(curves):
    # z -> -conj(z) maps the P family onto the R family
    p = curves["P"].nodes
    r = curves["R"].nodes
    for z in p[:: max(1, len(p) // 10)]:
        assert min(np.abs(r + np.conj(z))) < 0.02


def test_densities_nonnegative(curves):
    for label in LABELS:
        d = curves[label].density
        assert np.min(d) > -1e-9


def test_sqrt_anchor():
    with mpmath.workprec(128):
        assert abs(sqrt_branch(0, "Q", precision_bits=128).value + 1) < mpmath.mpf(10) ** -30
        big = sqrt_branch(50, "R", precision_bits=128).value
        assert big.real > 0 and abs(big.imag) < 1e-20
        assert abs(big**2 - (3 * mpmath.mpf(50) ** 4 + 1)) < mpmath.mpf(10) ** -20


def test_sqrt_squares_back(curves):
    for w in (0.3 + 0.2j, -1.1 + 0.4j, 2j):
        s = sqrt_branch(w, curves=curves, precision_bits=128)
        with mpmath.workprec(128):
            assert abs(s.value**2 - (3 * mpmath.mpc(w) ** 4 + 1)) < mpmath.mpf(10) ** -30


def test_corrupted_anchor_flips_sheet_q_and_restores():
    before = complex(sqrt_branch(0, "Q", precision_bits=64).value)
    with corrupted_anchor():
        during = complex(sqrt_branch(0, "Q", precision_bits=64).value)
    after = complex(sqrt_branch(0, "Q", precision_bits=64).value)
    assert during == pytest.approx(-before)
    assert after == before


def test_curve_csv_export_is_deterministic(curves, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    curves.to_csv(a)
    curves.to_csv(b)
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().splitlines()[0] == "label,node,re_z,im_z,re_density,im_density"
