"""Fraction-free Gaussian elimination over the rationals.

Rows are stored sparsely as ``{column: int}`` after clearing denominators.
Elimination cross-multiplies and then divides out the content, so entries
stay integral and reasonably small without any modular arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

Row = Dict[int, int]


def integral_row(values: Mapping[int, object]) -> Row:
    """Scale a sparse rational vector to a primitive integer vector."""
    fr = {k: Fraction(v) for k, v in values.items() if v}
    if not fr:
        return {}
    den = lcm(*(v.denominator for v in fr.values()))
    row = {k: int(v * den) for k, v in fr.items()}
    return _primitive(row)


def _primitive(row: Row) -> Row:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        row = {k: v // g for k, v in row.items()}
    return row


class EchelonSpace:
    """Row space kept in echelon form, with incremental insertion.

    Each stored row is keyed by its pivot (smallest column index). Inserting
    a vector reduces it against existing pivots; a nonzero residue becomes a
    new pivot row. ``rank`` is the number of pivot rows.
    """

    def __init__(self, rows: Iterable[Mapping[int, object]] = ()):
        self.pivots: Dict[int, Row] = {}
        for r in rows:
            self.insert(r)

    def copy(self) -> "EchelonSpace":
        other = EchelonSpace()
        other.pivots = dict(self.pivots)
        return other

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _residue(self, row: Row) -> Row:
        row = dict(row)
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                return row
            a, b = piv[c], row[c]
            g = gcd(a, b)
            ma, mb = a // g, b // g
            # row <- ma*row - mb*piv, which clears column c
            new = {k: ma * v for k, v in row.items()}
            for k, v in piv.items():
                t = new.get(k, 0) - mb * v
                if t:
                    new[k] = t
                else:
                    new.pop(k, None)
            row = _primitive(new) if new else new
        return row

    def insert(self, values: Mapping[int, object]) -> bool:
        """Add a vector; return True if it enlarged the space."""
        row = self._residue(integral_row(values))
        if not row:
            return False
        self.pivots[min(row)] = row
        return True

    def contains(self, values: Mapping[int, object]) -> bool:
        return not self._residue(integral_row(values))


def rank(rows: Iterable[Mapping[int, object]]) -> int:
    return EchelonSpace(rows).rank


def dense_rank(matrix: Sequence[Sequence[object]]) -> int:
    return rank({j: v for j, v in enumerate(r) if v} for r in matrix)


def solve_unique(matrix: Sequence[Sequence[object]], rhs: Sequence[object]) -> Optional[Tuple[Fraction, ...]]:
    """Solve ``matrix @ x == rhs`` exactly.

    Returns the solution if it exists and is unique, otherwise ``None``.
    """
    rows = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(matrix, rhs)]
    if not rows:
        return None
    ncols = len(rows[0]) - 1
    # Bareiss-style fraction-free forward elimination on integer rows
    ints: List[List[int]] = []
    for r in rows:
        den = lcm(*(v.denominator for v in r)) if r else 1
        ints.append([int(v * den) for v in r])
    pivot_cols: List[int] = []
    prow = 0
    for col in range(ncols):
        sel = next((i for i in range(prow, len(ints)) if ints[i][col]), None)
        if sel is None:
            continue
        ints[prow], ints[sel] = ints[sel], ints[prow]
        p = ints[prow]
        for i in range(len(ints)):
            if i == prow or not ints[i][col]:
                continue
            a, b = p[col], ints[i][col]
            g = gcd(a, b)
            row = [(a // g) * x - (b // g) * y for x, y in zip(ints[i], p)]
            cg = 0
            for v in row:
                cg = gcd(cg, v)
            ints[i] = [v // cg for v in row] if cg > 1 else row
        pivot_cols.append(col)
        prow += 1
        if prow == len(ints):
            break
    # inconsistent if some zero row has a nonzero right-hand side
    for r in ints[prow:]:
        if not any(r[:ncols]) and r[ncols]:
            return None
    if len(pivot_cols) < ncols:
        return None
    x = [Fraction(0)] * ncols
    for i, col in enumerate(pivot_cols):
        x[col] = Fraction(ints[i][ncols], ints[i][col])
    return tuple(x)
