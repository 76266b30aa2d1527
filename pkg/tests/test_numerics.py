from fractions import Fraction

import mpmath
import pytest

from hpexp.errors import NoConvergence
from hpexp.numerics import APComplex, RationalPoly, airy_pair, airy_zeros, find_poly_roots
from hpexp.numerics.roots import fujiwara_bound


def test_apcomplex_value_keeps_its_precision():
    with mpmath.workprec(300):
        x = APComplex.from_value(mpmath.sqrt(2), 300)
    # read back outside any workprec block
    with mpmath.workprec(300):
        assert abs(x.value - mpmath.sqrt(2)) < mpmath.mpf(2) ** -295


def test_apcomplex_arithmetic_takes_smaller_precision():
    a = APComplex.from_value(1, 200)
    b = APComplex.from_value(2, 100)
    assert (a + b).precision_bits == 100
    assert complex(a * 3) == 3


def test_roots_of_product_of_known_factors():
    zs = [Fraction(1, 3), Fraction(-2), Fraction(5, 7)]
    p = RationalPoly([1])
    for z in zs:
        p = p * RationalPoly([-z, 1])
    roots = find_poly_roots(p, 200, check_vieta=True)
    got = sorted(float(r.re) for r in roots)
    assert got == pytest.approx(sorted(float(z) for z in zs), abs=1e-50)


def test_roots_against_mpmath_polyroots():
    coeffs = [3, -1, 4, 1, -5, 9, 2]
    ours = sorted((complex(r) for r in find_poly_roots(coeffs, 128)), key=lambda z: (z.real, z.imag))
    with mpmath.workprec(128):
        ref = mpmath.polyroots(list(reversed(coeffs)), maxsteps=200, extraprec=128)
    ref = sorted((complex(r) for r in ref), key=lambda z: (z.real, z.imag))
    for a, b in zip(ours, ref):
        assert abs(a - b) < 1e-14


def test_double_root_is_found_twice():
    p = RationalPoly([1, -2, 1])
    roots = find_poly_roots(p, 128)
    assert all(abs(complex(r) - 1) < 1e-15 for r in roots)


def test_root_sweep_cap_raises():
    # double-precision starting guesses alone cannot meet a 256-bit residual bound
    with pytest.raises(NoConvergence):
        find_poly_roots(list(range(1, 40)), 256, max_sweeps=0)


def test_fujiwara_bounds_root_moduli():
    coeffs = [1, 0, -7, 6]  # descending: z^3 - 7z + 6 = (z-1)(z-2)(z+3)
    assert fujiwara_bound([mpmath.mpf(c) for c in coeffs]) >= 3


@pytest.mark.parametrize("s", [0.5, -3 + 1j, 6 - 2j, -9.5, 12 + 12j, 30j])
def test_airy_against_mpmath(s):
    ai, aip = airy_pair(s, 200)
    with mpmath.workprec(200):
        ref, refp = mpmath.airyai(s), mpmath.airyai(s, derivative=1)
        assert abs(ai.value - ref) <= mpmath.mpf(10) ** -55 * max(1, abs(ref))
        assert abs(aip.value - refp) <= mpmath.mpf(10) ** -55 * max(1, abs(refp))


def test_airy_zeros_against_mpmath():
    ours = airy_zeros(5, 128)
    with mpmath.workprec(128):
        for k, x in enumerate(ours, 1):
            assert abs(-x - mpmath.airyaizero(k)) < mpmath.mpf(10) ** -30


def test_rational_poly_scale_and_exp_taylor():
    p = RationalPoly.exp_taylor(4, -1)
    assert p.coeffs[3] == Fraction(-1, 6)
    q = RationalPoly([1, 1]).scale(3)
    assert list(q.coeffs) == [1, 3]
