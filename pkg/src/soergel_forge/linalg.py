"""Exact sparse linear algebra over the rationals.

Rows are dicts column -> Fraction.  Everything here is plain row reduction;
the systems produced by the morphism solvers are sparse and modest in size,
so incremental echelon form with first-available pivoting is enough.
"""

from __future__ import annotations

from fractions import Fraction


class Echelon:
    """Incremental row-echelon accumulator over Q."""

    def __init__(self):
        self.pivots = {}  # pivot column -> reduced row (leading coeff 1)

    def reduce(self, row):
        """Reduce a row against the current basis (row is consumed)."""
        row = dict(row)
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                return row
            factor = row[c]
            for k, v in piv.items():
                s = row.get(k, 0) - factor * v
                if s:
                    row[k] = s
                else:
                    row.pop(k, None)
        return row

    def add(self, row):
        """Insert a row; returns True if it increased the rank."""
        red = self.reduce(row)
        if not red:
            return False
        c = min(red)
        inv = Fraction(1) / red[c]
        self.pivots[c] = {k: v * inv for k, v in red.items()}
        return True

    @property
    def rank(self):
        return len(self.pivots)


def rank(rows):
    ech = Echelon()
    for r in rows:
        if r:
            ech.add(r)
    return ech.rank


def kernel_dimension(rows, ncols):
    return ncols - rank(rows)


def solve_rational(rows, rhs, ncols):
    """Solve the sparse system rows * x = rhs.

    Returns one solution as a list of Fractions of length ncols (free
    variables set to zero), or None if inconsistent.
    """
    RHS = ncols  # extra column index for the right-hand side
    ech = Echelon()
    for row, b in zip(rows, rhs):
        aug = dict(row)
        if b:
            aug[RHS] = Fraction(b)
        red = ech.reduce(aug)
        if not red:
            continue
        if min(red) == RHS:
            return None
        c = min(red)
        inv = Fraction(1) / red[c]
        ech.pivots[c] = {k: v * inv for k, v in red.items()}
    # back substitution: process pivots from highest column down
    x = [Fraction(0)] * ncols
    for c in sorted(ech.pivots, reverse=True):
        row = ech.pivots[c]
        val = row.get(RHS, Fraction(0))
        for k, v in row.items():
            if k != c and k != RHS:
                val -= v * x[k]
        x[c] = val
    return x


def rational_matrix_rank(entries):
    """Rank of a dense list-of-lists rational matrix."""
    rows = []
    for r in entries:
        rows.append({j: Fraction(v) for j, v in enumerate(r) if v})
    return rank(rows)
