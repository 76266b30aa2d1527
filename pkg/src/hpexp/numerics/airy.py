"""The Airy function Ai and its derivative on the complex plane.

Small arguments use the Maclaurin series with enough guard bits to absorb
the cancellation; large arguments use the asymptotic expansions, summed up
to their smallest term. The switch radius grows with the precision so that
the smallest asymptotic term stays below the working epsilon.
"""

from functools import lru_cache

import mpmath

from .apcomplex import APComplex, as_mpc


def switch_radius(precision_bits):
    """|s| beyond which the asymptotic expansion is accurate to ``precision_bits``.

    The smallest term of the expansion is about exp(-2 zeta) with
    zeta = (2/3)|s|**1.5, so we need 2 zeta / ln 2 >= precision + 20.
    """
    return (0.52 * (precision_bits + 20)) ** (2.0 / 3.0)


@lru_cache(maxsize=None)
def _u_coeffs(count, prec):
    u = [mpmath.mpf(1)]
    for k in range(1, count):
        u.append(u[-1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216 * k))
    return u


def _v_coeff(u, k):
    return u[k] if k == 0 else -u[k] * (6 * k + 1) / (6 * k - 1)


def _maclaurin(s, prec):
    a = abs(s)
    # Terms grow like exp(zeta) while Ai may be as small as exp(-zeta).
    guard = int((4.0 / 3.0) * float(a) ** 1.5 / 0.693) + 20
    with mpmath.workprec(prec + guard):
        s = mpmath.mpc(s)
        s3 = s**3
        eps = mpmath.mpf(2) ** (-(prec + guard))
        c1 = mpmath.power(3, mpmath.mpf(-2) / 3) / mpmath.gamma(mpmath.mpf(2) / 3)
        c2 = mpmath.power(3, mpmath.mpf(-1) / 3) / mpmath.gamma(mpmath.mpf(1) / 3)

        f = tf = mpmath.mpc(1)
        g = tg = s
        fp = tfp = s * s / 2
        gp = tgp = mpmath.mpc(1)
        k = 0
        while True:
            tf = tf * s3 / ((3 * k + 2) * (3 * k + 3))
            tg = tg * s3 / ((3 * k + 3) * (3 * k + 4))
            tgp = tgp * s3 / ((3 * k + 1) * (3 * k + 3))
            k += 1
            tfp = tfp * s3 / ((3 * k) * (3 * k + 2))
            f += tf
            g += tg
            fp += tfp
            gp += tgp
            if k > 4 and max(abs(tf), abs(tg), abs(tfp), abs(tgp)) <= eps:
                break
        return c1 * f - c2 * g, c1 * fp - c2 * gp


def _series(zeta, coeffs, eps, alternate=True, parity=None):
    # Sum c_k / zeta**k (with (-1)**k if alternate) up to the smallest term.
    total = mpmath.mpc(0)
    best = None
    power = mpmath.mpc(1)
    for k, c in enumerate(coeffs):
        if k:
            power /= zeta
        if parity is not None and k % 2 != parity:
            continue
        term = c * power
        if alternate:
            sign = (-1) ** (k // 2) if parity is not None else (-1) ** k
            term *= sign
        mag = abs(term)
        if best is not None and mag > best:
            break
        total += term
        best = mag
        if mag <= eps * abs(total):
            break
    return total


def _asymptotic(s, prec):
    with mpmath.workprec(prec + 20):
        s = mpmath.mpc(s)
        eps = mpmath.mpf(2) ** (-prec - 10)
        count = int(4 * (2.0 / 3.0) * float(abs(s)) ** 1.5) + 10
        u = _u_coeffs(count, mpmath.mp.prec)
        v = [_v_coeff(u, k) for k in range(count)]
        sqpi = mpmath.sqrt(mpmath.pi)
        if abs(mpmath.arg(s)) <= 2 * mpmath.pi / 3:
            zeta = mpmath.mpf(2) / 3 * s**1.5
            ez = mpmath.exp(-zeta)
            q = s**0.25
            ai = ez / (2 * sqpi * q) * _series(zeta, u, eps)
            aip = -q * ez / (2 * sqpi) * _series(zeta, v, eps)
            return ai, aip
        # Oscillatory side: Ai(-x), Ai'(-x) with |arg x| < pi/3.
        x = -s
        zeta = mpmath.mpf(2) / 3 * x**1.5
        q = x**0.25
        c = mpmath.cos(zeta - mpmath.pi / 4)
        sn = mpmath.sin(zeta - mpmath.pi / 4)
        ue = _series(zeta, u, eps, parity=0)
        uo = _series(zeta, u, eps, parity=1)
        ve = _series(zeta, v, eps, parity=0)
        vo = _series(zeta, v, eps, parity=1)
        ai = (c * ue + sn * uo) / (sqpi * q)
        aip = q / sqpi * (sn * ve - c * vo)
        return ai, aip


def airy_pair_mpc(s, precision_bits):
    """(Ai(s), Ai'(s)) as mpc values at ``precision_bits``."""
    s = mpmath.mpc(s)
    if abs(s) <= switch_radius(precision_bits):
        ai, aip = _maclaurin(s, precision_bits)
    else:
        ai, aip = _asymptotic(s, precision_bits)
    with mpmath.workprec(precision_bits):
        return +ai, +aip


def airy_pair(s, precision_bits=None):
    """Ai(s) and Ai'(s).

    Parameters
    ----------
    s : APComplex or number
    precision_bits : int, optional
        Defaults to the precision of ``s`` (or the current mpmath precision).

    Returns
    -------
    tuple of APComplex
    """
    if precision_bits is None:
        precision_bits = s.precision_bits if isinstance(s, APComplex) else mpmath.mp.prec
    with mpmath.workprec(precision_bits):
        ai, aip = airy_pair_mpc(as_mpc(s), precision_bits)
    return APComplex.from_value(ai, precision_bits), APComplex.from_value(aip, precision_bits)


def airy_zeros(count, precision_bits=128):
    """Moduli iota_1 < iota_2 < ... of the (negative real) zeros of Ai."""
    out = []
    with mpmath.workprec(precision_bits + 20):
        for nu in range(1, count + 1):
            t = 3 * mpmath.pi * (4 * nu - 1) / 8
            x = t ** (mpmath.mpf(2) / 3) * (1 + mpmath.mpf(5) / 48 / t**2)
            for _ in range(100):
                ai, aip = airy_pair_mpc(-x, precision_bits + 20)
                # d/dx Ai(-x) = -Ai'(-x)
                step = ai / (-aip)
                x = x - step.real
                if abs(step) < mpmath.mpf(2) ** (-precision_bits):
                    break
            out.append(+x.real if isinstance(x, mpmath.mpc) else +x)
    return out
