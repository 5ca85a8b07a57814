"""Exact Gaussian elimination over the radical scalars.

Small dense systems only (a stationarity system is 2N x (N+E) with N <= 12),
so the plain reduced-row-echelon pass with exact field inverses is plenty.
"""

from __future__ import annotations

from .exact import RadExpr

Matrix = list[list[RadExpr]]
Vector = list[RadExpr]


def _coerce_matrix(rows) -> Matrix:
    return [[RadExpr.of(x) for x in row] for row in rows]


def rref(rows, rhs=None) -> tuple[Matrix, list[int], Vector | None]:
    """Reduced row echelon form; returns (matrix, pivot columns, reduced rhs)."""
    m = _coerce_matrix(rows)
    b: Vector | None = [RadExpr.of(x) for x in rhs] if rhs is not None else None
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for rr in range(r, nrows):
            if not m[rr][c].is_zero():
                pivot_row = rr
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        if b is not None:
            b[r], b[pivot_row] = b[pivot_row], b[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        if b is not None:
            b[r] = b[r] * inv
        for rr in range(nrows):
            if rr != r and not m[rr][c].is_zero():
                factor = m[rr][c]
                m[rr] = [x - factor * y for x, y in zip(m[rr], m[r])]
                if b is not None:
                    b[rr] = b[rr] - factor * b[r]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots, b


def kernel_from_rref(m: Matrix, pivots: list[int], ncols: int) -> list[Vector]:
    """One basis vector per free column, unit in that coordinate."""
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [RadExpr.of(0)] * ncols
        vec[f] = RadExpr.of(1)
        for r, p in enumerate(pivots):
            vec[p] = -m[r][f]
        basis.append(vec)
    return basis


def particular_from_rref(
    m: Matrix, pivots: list[int], b: Vector
) -> Vector | None:
    """A solution with all free coordinates zero, or None if inconsistent."""
    ncols = len(m[0]) if m else 0
    for r in range(len(m)):
        if all(x.is_zero() for x in m[r]) and not b[r].is_zero():
            return None
    vec = [RadExpr.of(0)] * ncols
    for r, p in enumerate(pivots):
        vec[p] = b[r]
    return vec


def solve_linear(rows, rhs):
    """Full exact solve: (particular or None, kernel basis, rank, free columns)."""
    ncols = len(rows[0]) if rows else 0
    m, pivots, b = rref(rows, rhs)
    particular = particular_from_rref(m, pivots, b)
    kernel = kernel_from_rref(m, pivots, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    return particular, kernel, len(pivots), free


def matvec(rows, vec) -> Vector:
    return [
        sum((RadExpr.of(a) * RadExpr.of(x) for a, x in zip(row, vec)), RadExpr.of(0))
        for row in rows
    ]
