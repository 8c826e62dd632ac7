"""Dense linear algebra over a Field: elimination, rank, solve, nullspace.

Matrices are lists of row lists of canonical field ints.  Everything here
is exact; sizes stay small (at most a few hundred rows), so plain
Gauss-Jordan with the first nonzero pivot is enough.
"""

from __future__ import annotations

from typing import Sequence

from .field import Field

Matrix = list[list[int]]


def _copy(rows: Sequence[Sequence[int]]) -> Matrix:
    return [list(r) for r in rows]


def row_reduce(F: Field, rows: Sequence[Sequence[int]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot column indices."""
    m = _copy(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, len(m)):
            if m[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        inv = F.inv(m[rank][col])
        m[rank] = [F.mul(inv, x) for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                c = m[i][col]
                m[i] = [F.sub(x, F.mul(c, y)) for x, y in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    return m, pivots


def rank(F: Field, rows: Sequence[Sequence[int]]) -> int:
    _, pivots = row_reduce(F, rows)
    return len(pivots)


def solve(F: Field, rows: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[int] | None:
    """One solution x of rows @ x = rhs, or None when the system is inconsistent.

    With multiple solutions the free variables are set to zero.
    """
    if len(rows) != len(rhs):
        raise ValueError("rhs length must match the row count")
    if not rows:
        return []
    ncols = len(rows[0])
    augmented = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = row_reduce(F, augmented)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for i, col in enumerate(pivots):
        x[col] = reduced[i][ncols]
    return x


def nullspace(F: Field, rows: Sequence[Sequence[int]]) -> Matrix:
    """Basis of {x : rows @ x = 0}, one vector per list entry."""
    if not rows:
        return []
    ncols = len(rows[0])
    reduced, pivots = row_reduce(F, rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis: Matrix = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, col in enumerate(pivots):
            v[col] = F.neg(reduced[i][f])
        basis.append(v)
    return basis


def mat_vec(F: Field, rows: Sequence[Sequence[int]], x: Sequence[int]) -> list[int]:
    out = []
    for r in rows:
        acc = 0
        for a, b in zip(r, x):
            if a and b:
                acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return out
