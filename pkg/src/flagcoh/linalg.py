"""Exact linear algebra over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class Reduction:
    rref: tuple[tuple[Fraction, ...], ...]
    rank: int
    pivots: tuple[int, ...]


def row_reduce(matrix: Sequence[Sequence]) -> Reduction:
    """Reduced row echelon form.

    Pivots are chosen column by column from the left; within a column the
    remaining row with the smallest index wins.
    """
    rows = [[Fraction(v) for v in row] for row in matrix]
    if not rows:
        return Reduction((), 0, ())
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ValueError("ragged matrix")
    pivots = []
    top = 0
    for col in range(ncols):
        pr = next((r for r in range(top, len(rows)) if rows[r][col]), None)
        if pr is None:
            continue
        if pr != top:
            rows.insert(top, rows.pop(pr))
        piv = rows[top][col]
        rows[top] = [v / piv for v in rows[top]]
        prow = rows[top]
        for r in range(len(rows)):
            if r != top and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], prow)]
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return Reduction(tuple(tuple(r) for r in rows), top, tuple(pivots))


def rank(matrix) -> int:
    return row_reduce(matrix).rank


def bareiss_rank(matrix: Sequence[Sequence]) -> int:
    """Rank by fraction-free elimination (rows scaled to integers first)."""
    rows = []
    for row in matrix:
        fr = [Fraction(v) for v in row]
        den = 1
        for v in fr:
            den = den * v.denominator // _gcd(den, v.denominator)
        rows.append([int(v * den) for v in fr])
    if not rows:
        return 0
    ncols = len(rows[0])
    r, prev = 0, 1
    for col in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        for i in range(r + 1, len(rows)):
            rows[i] = [(rows[r][col] * rows[i][k] - rows[i][col] * rows[r][k]) // prev for k in range(ncols)]
        prev = rows[r][col]
        r += 1
        if r == len(rows):
            break
    return r


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


class SparseEchelon:
    """Incrementally maintained echelon basis of sparse rational vectors.

    Vectors are dicts ``{column: Fraction}``. Pivot of a row is its smallest
    column; rows are kept fully reduced against each other.
    """

    def __init__(self):
        self.rows: dict[int, dict[int, Fraction]] = {}

    def __len__(self):
        return len(self.rows)

    def _reduce_full(self, vec):
        v = dict(vec)
        while True:
            hit = [c for c in v if c in self.rows]
            if not hit:
                return v
            col = min(hit)
            f = v[col]
            for k, a in self.rows[col].items():
                nv = v.get(k, 0) - f * a
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)

    def add(self, vec: dict[int, Fraction]) -> bool:
        v = self._reduce_full(vec)
        if not v:
            return False
        piv = min(v)
        inv = 1 / v[piv]
        v = {k: a * inv for k, a in v.items()}
        for col, row in self.rows.items():
            f = row.get(piv)
            if f:
                for k, a in v.items():
                    nv = row.get(k, 0) - f * a
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        self.rows[piv] = v
        return True

    def normal(self, vec):
        return self._reduce_full(vec)
