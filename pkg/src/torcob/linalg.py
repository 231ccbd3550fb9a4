"""Exact linear algebra over the rationals (sparse Gaussian elimination)."""

from __future__ import annotations

from fractions import Fraction

UNIQUE = "unique"
INCONSISTENT = "inconsistent"
UNDERDETERMINED = "underdetermined"


def solve(rows, rhs, ncols):
    """Solve A x = b for sparse rows {col: Fraction}.

    Returns (status, solution); the solution is a list of Fractions when the
    status is UNIQUE (with free columns only when every one of them is forced,
    which cannot happen here), otherwise None.
    """
    rows = [dict(r) for r in rows]
    rhs = list(rhs)
    pivots = {}  # col -> row index
    row_order = []
    for i, row in enumerate(rows):
        b = rhs[i]
        for col, rj in pivots.items():
            f = row.get(col)
            if f is None:
                continue
            prow = rows[rj]
            for c2, v2 in prow.items():
                val = row.get(c2, Fraction(0)) - f * v2
                if val:
                    row[c2] = val
                elif c2 in row:
                    del row[c2]
            b -= f * rhs[rj]
        if row:
            col = min(row)
            piv = row[col]
            if piv != 1:
                for c2 in list(row):
                    row[c2] /= piv
                b /= piv
            rows[i] = row
            rhs[i] = b
            pivots[col] = i
            row_order.append(col)
        else:
            rhs[i] = b
            if b:
                return INCONSISTENT, None
    if len(pivots) < ncols:
        return UNDERDETERMINED, None
    # back substitution
    x = [Fraction(0)] * ncols
    for col in sorted(pivots, reverse=True):
        i = pivots[col]
        b = rhs[i]
        for c2, v2 in rows[i].items():
            if c2 != col:
                b -= v2 * x[c2]
        x[col] = b
    return UNIQUE, x


def rank(rows):
    """Rank of a sparse rational matrix given as rows {col: Fraction}."""
    basis = []  # reduced rows, each with leading column
    r = 0
    for row in rows:
        row = dict(row)
        for lead, brow in basis:
            f = row.get(lead)
            if f is None:
                continue
            for c2, v2 in brow.items():
                val = row.get(c2, Fraction(0)) - f * v2
                if val:
                    row[c2] = val
                elif c2 in row:
                    del row[c2]
        if row:
            lead = min(row)
            piv = row[lead]
            if piv != 1:
                for c2 in list(row):
                    row[c2] /= piv
            basis.append((lead, row))
            r += 1
    return r
