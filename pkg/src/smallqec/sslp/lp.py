"""Linear feasibility of A x = b, x >= 0 by phase-1 simplex with Bland's rule.

Two arithmetic routes: fast float (tolerance 1e-9) and an exact Fraction
re-solve for auditing; the two must agree on every candidate (tested
exhaustively on small instances).
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

FEAS_TOL = 1e-9


def phase1_feasible_float(a: np.ndarray, b: np.ndarray, tol: float = FEAS_TOL):
    """Returns (feasible, x) for {A x = b, x >= 0}; x is a basic solution."""
    a = np.asarray(a, dtype=np.float64).copy()
    b = np.asarray(b, dtype=np.float64).copy()
    m, n = a.shape
    flip = b < 0
    a[flip] *= -1
    b[flip] *= -1
    # tableau [A | I | b], artificial basis, objective = sum of artificials
    t = np.zeros((m + 1, n + m + 1))
    t[:m, :n] = a
    t[:m, n : n + m] = np.eye(m)
    t[:m, -1] = b
    t[m, :] = -t[:m, :].sum(axis=0)  # reduced costs for artificial basis
    t[m, n : n + m] = 0.0
    basis = list(range(n, n + m))
    while True:
        enter = -1
        for j in range(n + m):  # Bland: smallest eligible index
            if t[m, j] < -tol:
                enter = j
                break
        if enter < 0:
            break
        ratios = [
            (t[i, -1] / t[i, enter], basis[i], i)
            for i in range(m)
            if t[i, enter] > tol
        ]
        if not ratios:
            break  # phase-1 objective is bounded; defensive
        _, _, row = min(ratios, key=lambda r: (r[0], r[1]))
        t[row, :] /= t[row, enter]
        for i in range(m + 1):
            if i != row and abs(t[i, enter]) > 0:
                t[i, :] -= t[i, enter] * t[row, :]
        basis[row] = enter
    objective = -t[m, -1]
    feasible = objective <= tol
    x = np.zeros(n)
    if feasible:
        for i, j in enumerate(basis):
            if j < n:
                x[j] = t[i, -1]
    return feasible, x


def phase1_feasible_exact(a_rows, b_col):
    """Exact-rational twin of the float solver (Fraction arithmetic, tol 0)."""
    a = [[Fraction(x).limit_denominator(10**12) if not isinstance(x, (int, Fraction))
          else Fraction(x) for x in row] for row in a_rows]
    b = [Fraction(x) if isinstance(x, (int, Fraction))
         else Fraction(x).limit_denominator(10**12) for x in b_col]
    m, n = len(a), len(a[0])
    for i in range(m):
        if b[i] < 0:
            a[i] = [-x for x in a[i]]
            b[i] = -b[i]
    width = n + m + 1
    t = [[Fraction(0)] * width for _ in range(m + 1)]
    for i in range(m):
        t[i][:n] = a[i]
        t[i][n + i] = Fraction(1)
        t[i][-1] = b[i]
    for j in range(width):
        t[m][j] = -sum(t[i][j] for i in range(m))
    for i in range(m):
        t[m][n + i] = Fraction(0)
    basis = list(range(n, n + m))
    while True:
        enter = -1
        for j in range(n + m):
            if t[m][j] < 0:
                enter = j
                break
        if enter < 0:
            break
        ratios = [
            (t[i][-1] / t[i][enter], basis[i], i)
            for i in range(m)
            if t[i][enter] > 0
        ]
        if not ratios:
            break
        _, _, row = min(ratios)
        piv = t[row][enter]
        t[row] = [v / piv for v in t[row]]
        for i in range(m + 1):
            if i != row and t[i][enter] != 0:
                f = t[i][enter]
                t[i] = [v - f * w for v, w in zip(t[i], t[row])]
        basis[row] = enter
    feasible = -t[m][-1] == 0
    x = [Fraction(0)] * n
    if feasible:
        for i, j in enumerate(basis):
            if j < n:
                x[j] = t[i][-1]
    return feasible, x
