"""Exact feasibility for ``A y = b, y >= 0`` over the rationals.

Phase-one simplex on a dense tableau of Fractions with Bland's rule, so no
cycling on the degenerate systems that touching polytopes produce.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

_ZERO = Fraction(0)


def feasible_point(A: Sequence[Sequence], b: Sequence) -> Optional[list[Fraction]]:
    """Return some y >= 0 with A y = b, or None if there is none."""
    rows = len(A)
    n = len(A[0]) if rows else 0
    if rows == 0:
        return [_ZERO] * n
    tab = []
    for row, rhs in zip(A, b):
        row = [Fraction(x) for x in row]
        rhs = Fraction(rhs)
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        tab.append(row + [_ZERO] * rows + [rhs])
    for i in range(rows):
        tab[i][n + i] = Fraction(1)
    basis = list(range(n, n + rows))
    width = n + rows

    # phase-one objective: minimize the sum of artificials; cost row holds
    # reduced costs, last entry minus the objective value
    cost = [_ZERO] * (width + 1)
    for i in range(rows):
        for j in range(n):
            if tab[i][j]:
                cost[j] -= tab[i][j]
        cost[width] -= tab[i][width]

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(rows):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][width] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # cannot happen in phase one: the objective is bounded below by 0
            raise ArithmeticError("unbounded phase-one problem")
        _pivot(tab, cost, leave, enter)
        basis[leave] = enter

    if cost[width] != 0:
        return None
    y = [_ZERO] * n
    for i, j in enumerate(basis):
        if j < n:
            y[j] = tab[i][width]
    return y


def _pivot(tab, cost, r, c):
    prow = tab[r]
    p = prow[c]
    if p != 1:
        prow[:] = [x / p if x else x for x in prow]
    nz = [j for j, x in enumerate(prow) if x]
    for i, row in enumerate(tab):
        if i == r:
            continue
        f = row[c]
        if f:
            for j in nz:
                row[j] -= f * prow[j]
    f = cost[c]
    if f:
        for j in nz:
            cost[j] -= f * prow[j]
