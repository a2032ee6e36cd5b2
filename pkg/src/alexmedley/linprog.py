"""Exact linear programming over the rationals.

Two-phase tableau simplex with Bland's rule, so every run terminates and
repeated runs return the same basic solution.  Problems are in standard
form: optimize ``c·x`` subject to ``A x = b`` and ``x >= 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None

    @property
    def ok(self) -> bool:
        return self.status == OPTIMAL


def _pivot(tab: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    piv = tab[r][c]
    row = [x / piv for x in tab[r]]
    tab[r] = row
    for i, other in enumerate(tab):
        if i != r and other[c]:
            f = other[c]
            tab[i] = [a - f * b for a, b in zip(other, row)]
    basis[r] = c


def _run(tab: list[list[Fraction]], basis: list[int], allowed: int) -> bool:
    """Minimize the objective held in the last row; False when unbounded.

    The objective row stores reduced costs; columns >= ``allowed`` never enter.
    """
    m = len(basis)
    obj = tab[m]
    while True:
        enter = next((j for j in range(allowed) if obj[j] < 0), None)
        if enter is None:
            return True
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return False
        _pivot(tab, basis, best[1], enter)
        obj = tab[m]


def solve_lp(c: Sequence, a_eq: Sequence[Sequence], b_eq: Sequence, maximize: bool = False) -> LPResult:
    """Optimize ``c·x`` over ``{x >= 0 : a_eq x = b_eq}`` exactly."""
    n = len(c)
    cost = [Fraction(v) for v in c]
    if maximize:
        cost = [-v for v in cost]
    rows = [[Fraction(v) for v in r] for r in a_eq]
    rhs = [Fraction(v) for v in b_eq]
    if any(len(r) != n for r in rows) or len(rows) != len(rhs):
        raise ValueError("inconsistent LP dimensions")
    m = len(rows)
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]

    # phase 1: artificial variables n..n+m-1
    tab = []
    for i in range(m):
        art = [Fraction(int(i == k)) for k in range(m)]
        tab.append(rows[i] + art + [rhs[i]])
    basis = list(range(n, n + m))
    obj = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        for j in range(n):
            obj[j] -= tab[i][j]
        obj[-1] -= tab[i][-1]
    tab.append(obj)
    _run(tab, basis, n + m)
    if tab[m][-1] != 0:
        return LPResult(INFEASIBLE)

    # drive remaining artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(basis):
        if basis[i] >= n:
            col = next((j for j in range(n) if tab[i][j] != 0), None)
            if col is None:
                del tab[i]
                del basis[i]
                continue
            _pivot(tab, basis, i, col)
        i += 1
    m = len(basis)

    # phase 2
    obj = cost + [Fraction(0)] * (len(tab[0]) - n - 1) + [Fraction(0)]
    for i in range(m):
        f = obj[basis[i]]
        if f:
            obj = [a - f * b for a, b in zip(obj, tab[i])]
    tab[m] = obj
    if not _run(tab, basis, n):
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        x[j] = tab[i][-1]
    value = sum((a * b for a, b in zip(cost, x)), Fraction(0))
    return LPResult(OPTIMAL, tuple(x), -value if maximize else value)


def lexmin(a_eq: Sequence[Sequence], b_eq: Sequence, order: Sequence[int], n: int) -> LPResult:
    """Lexicographically least feasible point: minimize x[order[0]], fix it, then the next."""
    rows = [list(r) for r in a_eq]
    rhs = list(b_eq)
    res = None
    for k in order:
        c = [0] * n
        c[k] = 1
        res = solve_lp(c, rows, rhs)
        if not res.ok:
            return res
        fix = [0] * n
        fix[k] = 1
        rows.append(fix)
        rhs.append(res.x[k])
    if res is None:
        res = solve_lp([0] * n, rows, rhs)
    return res
