import cmath

import mpmath
import numpy as np
import pytest

from hpexp.errors import OutOfDisk
from hpexp.potentials import (
    EXPECTED_MASS,
    exp_2phi,
    exp_g_A,
    exp_g_B,
    exp_g_C,
    exp_g_P,
    exp_g_R,
    f1_map,
    g_boundary,
    g_value,
    measure,
    phi,
)
from hpexp.surface import classify_region, sheet_values
from hpexp.surface.algebra import Z_BRANCH

OFF_SUPPORT = [2.0, -2.0, 1.5j, -1.2 - 0.9j, 0.5, -0.5, 3 + 2j]


def sheets(z, curves):
    f = sheet_values(z, curves, 64)
    return {s: mpmath.mpc(complex(f[s].value)) for s in "PQR"}


def same_exp(a, b, tol=1e-8):
    # equal modulo 2 pi i
    return abs(complex(a) - complex(b)) <= tol * max(1, abs(complex(b)))


@pytest.mark.parametrize("label", sorted(EXPECTED_MASS))
def test_masses(label):
    m = measure(label).mass
    assert abs(m - EXPECTED_MASS[label]) < 1e-10


@pytest.mark.parametrize("z", OFF_SUPPORT)
def test_closed_forms_match_quadrature(curves, z):
    s = sheets(z, curves)
    region = classify_region(z, curves)
    assert same_exp(exp_g_A(z, s["Q"]), cmath.exp(g_value(z, "A")))
    assert same_exp(exp_g_P(s["P"]), cmath.exp(g_value(z, "P")))
    assert same_exp(exp_g_R(s["R"]), cmath.exp(g_value(z, "R")))
    assert same_exp(exp_g_B(z, s["P"], s["Q"], "D_P_star" in region), cmath.exp(g_value(z, "B")))
    assert same_exp(exp_g_C(z, s["R"], s["Q"], "D_R_star" in region), cmath.exp(g_value(z, "C")))


def test_g_behaves_like_mass_times_log_at_infinity():
    for S, m in EXPECTED_MASS.items():
        z = 40 + 30j
        assert abs(cmath.exp(g_value(z, S)) / z**m - 1) < 0.1


def test_g_a_is_sum_of_g_p_and_g_r():
    for z in (2, 1.5j, -0.5):
        d = g_value(z, "A") - g_value(z, "P") - g_value(z, "R")
        assert abs(cmath.exp(d) - 1) < 1e-9


def test_boundary_values_of_g_p_jump_by_the_running_mass(curves):
    c = curves["P"]
    j = len(c.nodes) // 2
    plus = g_boundary("P", "P", j, 1)
    minus = g_boundary("P", "P", j, -1)
    # the jump of int log(z - s) dmu across the support is 2 pi i times the mass on one side
    mass_after = 1 - c.levels[j] / np.pi
    for k in (0, 1, -1):
        if abs((plus - minus) - 2j * np.pi * (mass_after + k)) < 1e-6 or \
           abs((plus - minus) + 2j * np.pi * (mass_after + k)) < 1e-6:
            break
    else:
        pytest.fail(f"jump {plus - minus} does not match running mass {mass_after}")


def test_exp_2phi_has_unit_modulus_on_gamma_p(curves):
    c = curves["P"]
    for j in range(5, len(c.nodes) - 5, max(1, len(c.nodes) // 12)):
        z = c.nodes[j]
        v = exp_2phi(mpmath.mpc(z), mpmath.mpc(c.psi_q[j]), mpmath.mpc(c.psi_s[j]))
        assert abs(abs(v) - 1) < 1e-8


@pytest.mark.parametrize("z", [-2.0, -1 + 0.5j, 2.0, 1.5j])
def test_phi_agrees_with_closed_exponential(curves, z):
    p = phi(z, "P", 128, curves)
    s = sheets(z, curves)
    with mpmath.workprec(128):
        assert abs(mpmath.exp(2 * p.value) / exp_2phi(mpmath.mpc(z), s["Q"], s["P"]) - 1) < 1e-12


def test_re_phi_sign_marks_the_regions(curves):
    assert mpmath.re(phi(-2.0, "P", 64, curves).value) < 0
    assert mpmath.re(phi(2.0, "P", 64, curves).value) > 0
    assert mpmath.re(phi(2.0, "R", 64, curves).value) < 0


def test_f1_vanishes_at_branch_point_and_is_real_negative_on_gamma_p(curves):
    f = f1_map(curves)
    assert abs(complex(f.value(Z_BRANCH[0], 128))) == 0
    c = curves["P"]
    near = [z for z in c.nodes if 0.02 < abs(z - Z_BRANCH[0]) < 0.3]
    for z in near[:: max(1, len(near) // 6)]:
        v = complex(f.value(complex(z), 128))
        assert v.real < 0 and abs(v.imag) < 1e-8


def test_f1_is_conformal_near_branch_point(curves):
    f = f1_map(curves)
    d = complex(f.derivative(Z_BRANCH[0] + 0.01, precision_bits=128))
    assert abs(d) > 0.1


def test_f1_outside_disk_raises(curves):
    with pytest.raises(OutOfDisk):
        f1_map(curves).value(Z_BRANCH[0] + 0.6, 64)
