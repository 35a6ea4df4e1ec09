"""Dense exact-arithmetic matrix helpers.

All graphs and intersection matrices handled here are tiny (n <= a few
hundred), so plain list-of-lists with Python integers keeps every residual
exact; scalar types other than int (mpmath/float) also work where noted.
"""

from __future__ import annotations

Matrix = list


def eye(n, one=1):
    return [[one if i == j else 0 * one for j in range(n)] for i in range(n)]


def matmul(a, b):
    n, inner, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row_a = a[i]
        row = [0] * m
        for t in range(inner):
            x = row_a[t]
            if x == 0:
                continue
            row_b = b[t]
            for j in range(m):
                row[j] += x * row_b[j]
        out.append(row)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def add_diag(a, c):
    out = [row[:] for row in a]
    for i in range(len(out)):
        out[i][i] += c
    return out


def eval_poly(coefficients, a):
    """Horner evaluation of a polynomial (constant term first) at a square
    matrix.  Works for integer coefficients and for float/mpf coefficients."""
    n = len(a)
    if not coefficients:
        return [[0] * n for _ in range(n)]
    result = [[coefficients[-1] if i == j else 0 for j in range(n)] for i in range(n)]
    for c in reversed(coefficients[:-1]):
        result = add_diag(matmul(result, a), c)
    return result


def max_abs(a):
    return max(abs(x) for row in a for x in row)


def trace(a):
    return sum(a[i][i] for i in range(len(a)))
