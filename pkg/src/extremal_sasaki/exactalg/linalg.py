"""Fraction-free (Bareiss) elimination over exact integral domains.

Works for Python ints and for ``Polynomial`` entries (the ring Q[a]); the
caller supplies the exact division.
"""
from fractions import Fraction
from math import lcm

from ..errors import SingularSystem


def _int_div(x, y):
    q, r = divmod(x, y)
    if r:
        raise ArithmeticError("inexact Bareiss division")
    return q


def bareiss_solve(M, rhs, exact_div=_int_div, zero=0, one=1):
    """Solve M x = rhs; return (y, d) with x_i = y_i / d.

    d is the determinant of the row-permuted matrix.  Raises SingularSystem
    when no nonzero pivot exists.
    """
    n = len(M)
    A = [list(row) + [r] for row, r in zip(M, rhs)]
    prev = one
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k] != zero), None)
        if piv is None:
            raise SingularSystem(f"zero pivot in column {k}")
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            for j in range(k + 1, n + 1):
                A[i][j] = exact_div(A[i][j] * akk - aik * A[k][j], prev)
            A[i][k] = zero
        prev = akk
    d = A[n - 1][n - 1]
    y = [zero] * n
    for i in range(n - 1, -1, -1):
        acc = A[i][n] * d
        for j in range(i + 1, n):
            acc = acc - A[i][j] * y[j]
        y[i] = exact_div(acc, A[i][i])
    return y, d


def solve_rational(M, rhs):
    """Exact solution of a rational linear system via integer Bareiss."""
    rows = []
    vec = []
    for row, r in zip(M, rhs):
        vals = [Fraction(x) for x in row] + [Fraction(r)]
        L = lcm(*(v.denominator for v in vals))
        ints = [v.numerator * (L // v.denominator) for v in vals]
        rows.append(ints[:-1])
        vec.append(ints[-1])
    y, d = bareiss_solve(rows, vec)
    return [Fraction(v, d) for v in y]
