"""Exact nullspace of integer matrices by fraction-free elimination."""

from fractions import Fraction

from gmpy2 import mpz

from ..errors import RankDeficient


def solve_nullspace_exact(M):
    """Nonzero kernel vector of an integer matrix with a 1-dimensional nullspace.

    Parameters
    ----------
    M : sequence of sequences of int
        ``r`` rows of equal length ``c``. Usually ``c = r + 1``, but extra
        redundant rows are tolerated as long as the rank is ``c - 1``.

    Returns
    -------
    list of Fraction
        Vector ``v`` with ``M v = 0`` exactly, scaled so that its last
        nonzero entry equals 1.

    Raises
    ------
    RankDeficient
        If the nullspace is not one-dimensional.
    """
    rows = [[mpz(x) for x in row] for row in M]
    if not rows:
        raise RankDeficient(0, 0)
    ncols = len(rows[0])
    if any(len(row) != ncols for row in rows):
        raise ValueError("ragged matrix")

    # Bareiss elimination: every stored entry stays an integer minor, so
    # division by the previous pivot is exact.
    prev = mpz(1)
    pivots = []
    r = 0
    for col in range(ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv_row = rows[r]
        pv = piv_row[col]
        for i in range(r + 1, len(rows)):
            row = rows[i]
            f = row[col]
            if f:
                for j in range(col + 1, ncols):
                    row[j] = (row[j] * pv - f * piv_row[j]) // prev
            else:
                for j in range(col + 1, ncols):
                    row[j] = (row[j] * pv) // prev
            row[col] = mpz(0)
        prev = pv
        pivots.append(col)
        r += 1

    if len(pivots) != ncols - 1:
        raise RankDeficient(len(pivots), ncols)

    free = next(j for j in range(ncols) if j not in set(pivots))
    v = [Fraction(0)] * ncols
    v[free] = Fraction(1)
    for k in reversed(range(len(pivots))):
        col = pivots[k]
        row = rows[k]
        acc = sum((int(row[j]) * v[j] for j in range(col + 1, ncols) if row[j] and v[j]), Fraction(0))
        v[col] = -acc / int(row[col])

    last = next(x for x in reversed(v) if x)
    v = [x / last for x in v]

    for row in M:
        if sum(Fraction(int(a)) * x for a, x in zip(row, v) if a and x) != 0:
            raise ArithmeticError("nullspace verification failed")
    return v
