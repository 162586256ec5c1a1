"""Exact linear algebra over field-like elements, plus a fraction-free determinant.

Field-like means: +, -, *, /, an ``is_zero`` property, and a usable equality.
Both QqFraction and CycloNum qualify. Matrices are lists of row lists.
"""

from __future__ import annotations

from typing import Sequence, TypeVar

from .laurent import LaurentPoly

T = TypeVar("T")
Matrix = list[list[T]]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = a[i][0] * b[0][j]
            for k in range(1, inner):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def mat_vec(a: Matrix, v: Sequence[T]) -> list[T]:
    out = []
    for row in a:
        acc = row[0] * v[0]
        for k in range(1, len(v)):
            acc = acc + row[k] * v[k]
        out.append(acc)
    return out


def vec_mat(v: Sequence[T], a: Matrix) -> list[T]:
    cols = len(a[0])
    out = []
    for j in range(cols):
        acc = v[0] * a[0][j]
        for k in range(1, len(v)):
            acc = acc + v[k] * a[k][j]
        out.append(acc)
    return out


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def identity_matrix(n: int, one: T, zero: T) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_equal(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def row_reduce(rows: Matrix, ncols: int) -> tuple[Matrix, list[int]]:
    """In-place-free reduced row echelon form; returns (rref rows, pivot columns)."""
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, len(mat)):
            if not mat[r][col].is_zero:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        inv = mat[rank][col]
        mat[rank] = [x / inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and not mat[r][col].is_zero:
                factor = mat[r][col]
                mat[r] = [x - factor * y for x, y in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    return mat[:rank], pivots


def rank_of(rows: Matrix, ncols: int) -> int:
    return len(row_reduce(rows, ncols)[0])


class RowSolver:
    """Echelonizes a row family once, then answers membership queries cheaply.

    ``solve(target)`` returns coefficients c with sum_i c_i rows[i] = target
    (free coefficients zero), or None when the target is outside the row space.
    """

    def __init__(self, rows: Matrix, ncols: int):
        self.k = len(rows)
        self.n = ncols
        if self.k == 0:
            self.mat: Matrix = []
            self.pivots: list[int] = []
            return
        one = _one_of(rows)
        zero = one - one
        self._zero = zero
        mat = []
        for i, r in enumerate(rows):
            book = [zero] * self.k
            book[i] = one
            mat.append(list(r) + book)
        rank = 0
        pivots = []
        for col in range(ncols):
            pivot_row = None
            for r in range(rank, len(mat)):
                if not mat[r][col].is_zero:
                    pivot_row = r
                    break
            if pivot_row is None:
                continue
            mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
            inv = mat[rank][col]
            mat[rank] = [x / inv for x in mat[rank]]
            for r in range(len(mat)):
                if r != rank and not mat[r][col].is_zero:
                    factor = mat[r][col]
                    mat[r] = [x - factor * y for x, y in zip(mat[r], mat[rank])]
            pivots.append(col)
            rank += 1
        self.mat = mat[:rank]
        self.pivots = pivots

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def solve(self, target: Sequence[T]) -> list[T] | None:
        if self.k == 0:
            return [] if all(x.is_zero for x in target) else None
        zero = self._zero
        residual = list(target)
        coeffs = [zero] * self.k
        for prow, pcol in zip(self.mat, self.pivots):
            factor = residual[pcol]
            if factor.is_zero:
                continue
            for j in range(self.n):
                residual[j] = residual[j] - factor * prow[j]
            for j in range(self.k):
                coeffs[j] = coeffs[j] + factor * prow[self.n + j]
        if any(not x.is_zero for x in residual):
            return None
        return coeffs


def solve_in_rowspace(rows: Matrix, target: Sequence[T]) -> list[T] | None:
    """One-shot wrapper around RowSolver."""
    if not rows:
        return [] if all(x.is_zero for x in target) else None
    try:
        return RowSolver(rows, len(target)).solve(target)
    except ValueError:
        if all(x.is_zero for x in target):
            return [target[0] - target[0] if target else rows[0][0]] * len(rows)
        return None


def _one_of(rows: Matrix):
    for r in rows:
        for x in r:
            if not x.is_zero:
                return x / x
    raise ValueError("cannot infer the field's one from an all-zero matrix")


def invert_matrix(a: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan; raises on singular input."""
    n = len(a)
    one = _one_of(a)
    zero = one - one
    mat = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(a)]
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if not mat[r][col].is_zero:
                pivot_row = r
                break
        if pivot_row is None:
            raise ValueError("singular matrix")
        mat[col], mat[pivot_row] = mat[pivot_row], mat[col]
        inv = mat[col][col]
        mat[col] = [x / inv for x in mat[col]]
        for r in range(n):
            if r != col and not mat[r][col].is_zero:
                factor = mat[r][col]
                mat[r] = [x - factor * y for x, y in zip(mat[r], mat[col])]
    return [row[n:] for row in mat]


def solve_linear_system(a: Matrix, b: Sequence[T]) -> list[T] | None:
    """One solution x of A x = b (free variables zero), or None."""
    cols = list(zip(*a))
    rows = [list(c) for c in cols]
    return solve_in_rowspace(rows, b)


def bareiss_det(matrix: list[list[LaurentPoly]]) -> LaurentPoly:
    """Exact determinant of a LaurentPoly matrix by fraction-free elimination.

    Rows are normalized by their q-power content first; the determinant picks
    the content back up, so the result is exact.
    """
    n = len(matrix)
    if n == 0:
        return LaurentPoly.one()
    shift_total = 0
    mat: list[list[LaurentPoly]] = []
    for row in matrix:
        exps = [p.min_exp() for p in row if not p.is_zero]
        k = min(exps) if exps else 0
        shift_total += k
        mat.append([p.shift(-k) for p in row])
    sign = 1
    prev = LaurentPoly.one()
    for col in range(n - 1):
        pivot_row = None
        for r in range(col, n):
            if not mat[r][col].is_zero:
                pivot_row = r
                break
        if pivot_row is None:
            return LaurentPoly.zero()
        if pivot_row != col:
            mat[col], mat[pivot_row] = mat[pivot_row], mat[col]
            sign = -sign
        pivot = mat[col][col]
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                num = mat[r][c] * pivot - mat[r][col] * mat[col][c]
                mat[r][c] = num.exact_div(prev)
            mat[r][col] = LaurentPoly.zero()
        prev = pivot
    det = mat[n - 1][n - 1]
    if sign < 0:
        det = -det
    return det.shift(shift_total)
