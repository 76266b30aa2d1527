import json
from fractions import Fraction
from math import factorial

import mpmath
import pytest

from hpexp.errors import DegenerateNormalization
from hpexp.exact_hp import (
    assemble_X,
    contact_order,
    det_identity,
    evaluate_X,
    family_from_json,
    family_to_json,
    jump_matrix,
    remainder_series,
    scale_family,
    triple_from_json,
    triple_to_json,
    type1_construct,
    type2_construct,
)


def exp_series_coeff(poly, k, sign):
    """z^k coefficient of poly(z) * exp(sign*z), summed directly."""
    cs = list(poly.coeffs)
    return sum(Fraction(c) * Fraction(sign) ** (k - j) / factorial(k - j) for j, c in enumerate(cs) if j <= k)


def first_nonzero(coeff, limit):
    return next(k for k in range(limit) if coeff(k) != 0)


@pytest.mark.parametrize("idx", [(1, 1, 1), (2, 0, 3), (0, 2, 1), (3, 3, 3), (4, 1, 2)])
def test_type2_contact_order_by_direct_series(idx):
    t = type2_construct(*idx)
    N = sum(idx)
    o1 = first_nonzero(lambda k: exp_series_coeff(t.a, k, -1) - Fraction(t.b.coeff(k)), N + 10)
    o2 = first_nonzero(lambda k: exp_series_coeff(t.a, k, 1) - Fraction(t.c.coeff(k)), N + 10)
    assert min(o1, o2) >= N + 2
    assert t.a.degree <= idx[1] + idx[2] + 2
    assert t.b.degree <= idx[0] + idx[2]
    assert t.c.degree <= idx[0] + idx[1]


@pytest.mark.parametrize("idx", [(1, 1, 1), (2, 3, 1), (0, 4, 0)])
def test_type1_contact_order_by_direct_series(idx):
    t = type1_construct(*idx)
    coeff = lambda k: exp_series_coeff(t.p, k, -1) + Fraction(t.q.coeff(k)) + exp_series_coeff(t.r, k, 1)
    assert first_nonzero(coeff, sum(idx) + 10) >= sum(idx) + 2


def test_type1_zero_indices():
    t = type1_construct(0, 0, 0)
    assert [t.p.coeff(0), t.q.coeff(0), t.r.coeff(0)] == [1, -2, 1]


def test_type2_zero_indices_degenerate():
    t = type2_construct(0, 0, 0)
    assert t.degenerate
    assert t.b.is_zero and t.c.is_zero


def test_contact_order_matches_construction():
    t = type2_construct(2, 2, 2)
    e1, e2 = remainder_series(t, 12)
    assert contact_order(e1) == contact_order(e2) == 8


def test_scaled_family_shape_and_symmetry():
    fam = scale_family(60)
    assert fam.A.degree == 122
    assert fam.A.leading == 1
    assert fam.B.degree == fam.C.degree == 120
    # z -> -z swaps the roles of e^{-z} and e^{z}
    assert fam.C == fam.B.reflect()
    assert fam.A == fam.A.reflect()


def test_monic_normalization_of_deficient_target_raises():
    with pytest.raises(DegenerateNormalization):
        type2_construct(0, 0, 0, normalization="B_monic")


def test_invalid_indices():
    with pytest.raises(ValueError):
        type2_construct(-1, 0, 0)
    with pytest.raises(ValueError):
        type1_construct(1.5, 0, 0)


def test_json_round_trip_exact():
    for t in (type1_construct(2, 1, 3), type2_construct(2, 2, 2, normalization="A_monic", scale=6)):
        doc = json.loads(json.dumps(triple_to_json(t)))
        assert triple_from_json(doc) == t
    fam = scale_family(5)
    assert family_from_json(json.loads(json.dumps(family_to_json(fam)))) == fam


@pytest.mark.parametrize("n", [1, 2, 5])
def test_det_identity(n):
    det_identity(n)


def test_x_jump_relation_at_a_contour_point():
    n = 3
    ev = assemble_X(n)
    with mpmath.workprec(600):
        z = mpmath.mpc(0.3, 0.4)
        xin = [[x.value for x in row] for row in evaluate_X(ev, z, "inside", 600)]
        xout = [[x.value for x in row] for row in evaluate_X(ev, z, "outside", 600)]
        J = jump_matrix(n, z)
        prod = [[sum(xout[i][k] * J[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
        worst = max(abs(prod[i][j] - xin[i][j]) for i in range(3) for j in range(3))
    assert worst < mpmath.mpf(10) ** -150


def test_x_inside_at_origin_is_the_limit():
    n = 2
    ev = assemble_X(n)
    at0 = evaluate_X(ev, 0, "inside", 300)
    near = evaluate_X(ev, mpmath.mpc("1e-30"), "inside", 300)
    for r0, r1 in zip(at0, near):
        for a, b in zip(r0, r1):
            assert abs(complex(a) - complex(b)) <= 1e-20 * max(1, abs(complex(a)))
