"""Small exact linear algebra: rank over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rational_rank(rows: Sequence[Sequence[int | Fraction]]) -> int:
    """Rank of a matrix by exact Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        m[row] = [x / pv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        rank += 1
        row += 1
        if row == len(m):
            break
    return rank
