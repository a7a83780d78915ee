"""Exact rational feasibility solver.

Decides whether a small system of linear equalities/inequalities with
rational data has a solution, and produces an exact rational witness when it
does. Method: phase-one simplex over `fractions.Fraction` with Bland's rule,
so no floating point is involved anywhere and cycling cannot occur. A
Fourier-Motzkin eliminator is provided as an independent oracle for
low-dimensional cross-checks.

Solver state is confined to one call; concurrent calls on separate problems
are safe.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

Q = Fraction


def _frac_vec(v: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


@dataclass
class FeasibilityProblem:
    """Find x with the given equalities/inequalities; `nonneg[i]` constrains
    x_i >= 0. Senses: ("le", coeffs, rhs) means coeffs*x <= rhs, "ge" means >=.
    """

    nvars: int
    equalities: list[tuple[tuple[Fraction, ...], Fraction]] = field(default_factory=list)
    inequalities: list[tuple[str, tuple[Fraction, ...], Fraction]] = field(default_factory=list)
    nonneg: tuple[bool, ...] = ()

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("dimension must be >= 1")
        if not self.nonneg:
            self.nonneg = (True,) * self.nvars
        if len(self.nonneg) != self.nvars:
            raise ValueError("nonneg flags must match dimension")
        self.equalities = [(self._row(c), Fraction(b)) for c, b in self.equalities]
        self.inequalities = [(s, self._row(c), Fraction(b)) for s, c, b in self.inequalities]

    def _row(self, coeffs: Sequence) -> tuple[Fraction, ...]:
        row = _frac_vec(coeffs)
        if len(row) != self.nvars:
            raise ValueError("constraint row length != dimension")
        return row

    def add_eq(self, coeffs: Sequence, rhs) -> None:
        self.equalities.append((self._row(coeffs), Fraction(rhs)))

    def add_le(self, coeffs: Sequence, rhs) -> None:
        self.inequalities.append(("le", self._row(coeffs), Fraction(rhs)))

    def add_ge(self, coeffs: Sequence, rhs) -> None:
        self.inequalities.append(("ge", self._row(coeffs), Fraction(rhs)))

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        x = _frac_vec(x)
        if len(x) != self.nvars:
            return False
        if any(self.nonneg[i] and x[i] < 0 for i in range(self.nvars)):
            return False
        for c, b in self.equalities:
            if sum(ci * xi for ci, xi in zip(c, x)) != b:
                return False
        for sense, c, b in self.inequalities:
            v = sum(ci * xi for ci, xi in zip(c, x))
            if sense == "le" and v > b:
                return False
            if sense == "ge" and v < b:
                return False
        return True


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    witness: tuple[Fraction, ...] | None = None


def solve(p: FeasibilityProblem) -> Feasibility:
    """Exact feasibility decision; the witness re-satisfies every constraint
    under exact rational evaluation (checked before returning)."""
    # Column layout: one column per nonnegative variable, two (x+ - x-) per
    # free variable; then one slack per inequality; artificials appended last.
    cols: list[tuple[int, int]] = []  # (var index, sign)
    for i in range(p.nvars):
        cols.append((i, 1))
        if not p.nonneg[i]:
            cols.append((i, -1))
    nstruct = len(cols)

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    slack_sign: list[Fraction | None] = []
    for c, b in p.equalities:
        rows.append([c[i] * s for i, s in cols])
        rhs.append(b)
        slack_sign.append(None)
    for sense, c, b in p.inequalities:
        rows.append([c[i] * s for i, s in cols])
        rhs.append(b)
        slack_sign.append(Q(1) if sense == "le" else Q(-1))

    m = len(rows)
    nslack = sum(1 for s in slack_sign if s is not None)
    width = nstruct + nslack + m  # artificials reserve one column per row
    tab = [[Q(0)] * width for _ in range(m)]
    b_col = [Q(0)] * m

    si = 0
    slack_col_of_row: list[int | None] = [None] * m
    for r in range(m):
        for j in range(nstruct):
            tab[r][j] = rows[r][j]
        if slack_sign[r] is not None:
            tab[r][nstruct + si] = slack_sign[r]
            slack_col_of_row[r] = nstruct + si
            si += 1
        b_col[r] = rhs[r]

    # Normalize rhs >= 0, then pick an initial basis: the slack column where
    # it enters with +1, otherwise an artificial.
    basis: list[int] = [0] * m
    art_cols: list[int] = []
    ai = 0
    for r in range(m):
        if b_col[r] < 0:
            tab[r] = [-v for v in tab[r]]
            b_col[r] = -b_col[r]
        sc = slack_col_of_row[r]
        if sc is not None and tab[r][sc] == 1:
            basis[r] = sc
        else:
            col = nstruct + nslack + ai
            tab[r][col] = Q(1)
            basis[r] = col
            art_cols.append(col)
            ai += 1
    used_width = nstruct + nslack + ai
    art_set = set(art_cols)

    # Phase-one objective: minimize the sum of artificials. Reduced costs for
    # the equivalent max problem; Bland's rule on both choices.
    cost = [Q(0)] * used_width
    for c in art_cols:
        cost[c] = Q(1)
    # z_j - c_j with current basis (artificials basic)
    obj = [Q(0)] * used_width
    objval = Q(0)
    for r in range(m):
        if basis[r] in art_set:
            for j in range(used_width):
                obj[j] += tab[r][j]
            objval += b_col[r]
    for j in range(used_width):
        obj[j] -= cost[j]

    while True:
        enter = -1
        for j in range(used_width):  # Bland: lowest-index improving column
            if obj[j] > 0:
                enter = j
                break
        if enter == -1:
            break
        leave = -1
        best = None
        for r in range(m):
            a = tab[r][enter]
            if a > 0:
                ratio = b_col[r] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best = ratio
                    leave = r
        if leave == -1:
            # Unbounded phase-one objective cannot happen (bounded below by 0).
            raise RuntimeError("phase-one simplex unbounded; inconsistent tableau")
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        b_col[leave] /= piv
        for r in range(m):
            if r != leave and tab[r][enter] != 0:
                f = tab[r][enter]
                tab[r] = [v - f * w for v, w in zip(tab[r], tab[leave])]
                b_col[r] -= f * b_col[leave]
        f = obj[enter]
        obj = [v - f * w for v, w in zip(obj, tab[leave])]
        objval -= f * b_col[leave]
        basis[leave] = enter

    if objval != 0:
        return Feasibility(False, None)

    values = [Q(0)] * used_width
    for r in range(m):
        values[basis[r]] = b_col[r]
    x = [Q(0)] * p.nvars
    for j, (i, s) in enumerate(cols):
        x[i] += s * values[j]
    witness = tuple(x)
    if not p.satisfied_by(witness):
        raise RuntimeError("simplex produced an invalid witness; exact arithmetic bug")
    return Feasibility(True, witness)


def feasible(p: FeasibilityProblem) -> bool:
    return solve(p).feasible


def fourier_motzkin_feasible(p: FeasibilityProblem) -> bool:
    """Independent eliminator-based decision; practical for dimension <= 4."""
    # Collect everything as coeffs*x <= rhs pairs.
    les: list[tuple[tuple[Fraction, ...], Fraction]] = []
    for c, b in p.equalities:
        les.append((c, b))
        les.append((tuple(-v for v in c), -b))
    for sense, c, b in p.inequalities:
        if sense == "le":
            les.append((c, b))
        else:
            les.append((tuple(-v for v in c), -b))
    for i in range(p.nvars):
        if p.nonneg[i]:
            row = [Q(0)] * p.nvars
            row[i] = Q(-1)
            les.append((tuple(row), Q(0)))

    n = p.nvars
    for k in range(n - 1, -1, -1):
        lowers, uppers, rest = [], [], []
        for c, b in les:
            a = c[k]
            if a > 0:
                uppers.append((c, b))
            elif a < 0:
                lowers.append((c, b))
            else:
                rest.append((c, b))
        new = rest
        for cl, bl in lowers:
            for cu, bu in uppers:
                al, au = -cl[k], cu[k]
                c = tuple(au * cl[j] + al * cu[j] for j in range(n))
                new.append((c, au * bl + al * bu))
        les = [(c, b) for c, b in new]
    return all(b >= 0 for _, b in les)
