"""Exact phase-one simplex over the rationals with Bland's rule.

Only feasibility is needed here: every basic feasible solution is a vertex of
``{x >= 0 : A x = b}``, and that is what the certificate construction relies
on.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def basic_feasible_solution(
    a: Sequence[Sequence], b: Sequence
) -> tuple[tuple[Fraction, ...], tuple[int, ...]] | None:
    """Find a basic feasible solution of ``A x = b, x >= 0``.

    Returns ``(x, basis)`` where ``basis`` lists the basic columns that belong
    to the original problem, or None when the system is infeasible.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    rows = [[Fraction(x) for x in r] for r in a]
    rhs = [Fraction(x) for x in b]
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]

    # reuse existing unit columns as the starting basis, add artificials elsewhere
    basis: list[int | None] = [None] * m
    for j in range(n):
        col = [rows[i][j] for i in range(m)]
        nz = [i for i in range(m) if col[i] != 0]
        if len(nz) == 1 and col[nz[0]] == 1 and basis[nz[0]] is None:
            basis[nz[0]] = j
    n_art = 0
    for i in range(m):
        if basis[i] is None:
            basis[i] = n + n_art
            n_art += 1
    width = n + n_art
    tab = []
    for i in range(m):
        extra = [Fraction(0)] * n_art
        if basis[i] >= n:
            extra[basis[i] - n] = Fraction(1)
        tab.append(rows[i] + extra + [rhs[i]])

    # phase-one objective: minimise the sum of artificials, as reduced costs
    cost = [Fraction(0)] * (width + 1)
    for i in range(m):
        if basis[i] >= n:
            for j in range(width + 1):
                cost[j] -= tab[i][j]
    for i in range(m):
        if basis[i] >= n:
            cost[basis[i]] = Fraction(0)

    while True:
        entering = next((j for j in range(width) if cost[j] < 0), None)
        if entering is None:
            break
        leave = None
        best = None
        for i in range(m):
            if tab[i][entering] > 0:
                ratio = tab[i][width] / tab[i][entering]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # unbounded direction cannot occur: the artificial objective is >= 0
            raise AssertionError("phase-one objective unbounded")
        _pivot(tab, cost, basis, leave, entering)

    if -cost[width] != 0:
        return None

    # drive degenerate artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= n:
            j = next((j for j in range(n) if tab[i][j] != 0), None)
            if j is not None:
                _pivot(tab, cost, basis, i, j)

    x = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = tab[i][width]
    return tuple(x), tuple(sorted(j for j in basis if j < n))


def _pivot(tab, cost, basis, r, c):
    piv = tab[r][c]
    tab[r] = [x / piv for x in tab[r]]
    prow = tab[r]
    for i in range(len(tab)):
        if i != r and tab[i][c] != 0:
            f = tab[i][c]
            tab[i] = [x - f * y for x, y in zip(tab[i], prow)]
    if cost[c] != 0:
        f = cost[c]
        cost[:] = [x - f * y for x, y in zip(cost, prow)]
    basis[r] = c
