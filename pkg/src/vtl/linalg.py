"""Dense exact matrices over a quadratic number field.

Everything here is plain Gaussian elimination with exact division; there is
no floating point anywhere.  Matrices are immutable by convention: methods
return fresh instances and never mutate entry lists in place.
"""

from __future__ import annotations

from .errors import StrandMismatchError
from .scalars import QuadScalar, as_scalar

Row = list[QuadScalar]

_ZERO = QuadScalar(0)
_ONE = QuadScalar(1)


class DenseMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: list[Row]):
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", [list(row) for row in entries])

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("DenseMatrix is immutable")

    @classmethod
    def zero(cls, rows: int, cols: int) -> DenseMatrix:
        return cls([[_ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, size: int) -> DenseMatrix:
        out = [[_ZERO] * size for _ in range(size)]
        for k in range(size):
            out[k][k] = _ONE
        return cls(out)

    @classmethod
    def from_entries(cls, rows: int, cols: int, positions) -> DenseMatrix:
        """Build from {(row, col): scalar-like} nonzero positions."""
        out = [[_ZERO] * cols for _ in range(rows)]
        for (r, c), value in positions.items():
            out[r][c] = as_scalar(value)
        return cls(out)

    def __getitem__(self, key: tuple[int, int]) -> QuadScalar:
        r, c = key
        return self.entries[r][c]

    def __eq__(self, other) -> bool:
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):  # pragma: no cover - unused, keep eq sane
        return hash((self.rows, self.cols, tuple(map(tuple, self.entries))))

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for row in self.entries for e in row)

    def __add__(self, other: DenseMatrix) -> DenseMatrix:
        self._shape_check(other, same=True)
        return DenseMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: DenseMatrix) -> DenseMatrix:
        self._shape_check(other, same=True)
        return DenseMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __neg__(self) -> DenseMatrix:
        return self.scale(-1)

    def scale(self, s) -> DenseMatrix:
        s = as_scalar(s)
        return DenseMatrix([[s * e for e in row] for row in self.entries])

    def __mul__(self, other: DenseMatrix) -> DenseMatrix:
        self._shape_check(other, same=False)
        out = [[_ZERO] * other.cols for _ in range(self.rows)]
        for r, row in enumerate(self.entries):
            acc = out[r]
            for k, a in enumerate(row):
                if a.is_zero:
                    continue
                brow = other.entries[k]
                for c, b in enumerate(brow):
                    if not b.is_zero:
                        acc[c] = acc[c] + a * b
        return DenseMatrix(out)

    def _shape_check(self, other: DenseMatrix, same: bool) -> None:
        if same and (self.rows, self.cols) != (other.rows, other.cols):
            raise StrandMismatchError(
                f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )
        if not same and self.cols != other.rows:
            raise StrandMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )

    def transpose(self) -> DenseMatrix:
        return DenseMatrix(
            [[self.entries[r][c] for r in range(self.rows)] for c in range(self.cols)]
        )

    def trace(self) -> QuadScalar:
        total = _ZERO
        for k in range(min(self.rows, self.cols)):
            total = total + self.entries[k][k]
        return total

    def to_obj(self) -> dict:
        D = None
        for row in self.entries:
            for e in row:
                if not e.is_rational:
                    if D is not None and D != e.D:
                        raise ValueError("mixed discriminants in one matrix")
                    D = e.D
        if D is None:
            from fractions import Fraction

            D = Fraction(0)
        flat = [
            [e.x.numerator, e.x.denominator, e.y.numerator, e.y.denominator]
            for row in self.entries
            for e in row
        ]
        return {
            "rows": self.rows,
            "cols": self.cols,
            "D": [D.numerator, D.denominator],
            "entries": flat,
        }


def invert(m: DenseMatrix) -> DenseMatrix | None:
    """Exact inverse by Gauss-Jordan elimination; None when singular.

    Singularity is a value outcome here, not an error: callers decide what a
    missing inverse means for them.
    """
    if m.rows != m.cols:
        return None
    size = m.rows
    work = [list(row) for row in m.entries]
    aug = [list(row) for row in DenseMatrix.identity(size).entries]
    for col in range(size):
        pivot = next((r for r in range(col, size) if not work[r][col].is_zero), None)
        if pivot is None:
            return None
        work[col], work[pivot] = work[pivot], work[col]
        aug[col], aug[pivot] = aug[pivot], aug[col]
        scale = work[col][col].inv()
        work[col] = [e * scale for e in work[col]]
        aug[col] = [e * scale for e in aug[col]]
        for r in range(size):
            if r == col or work[r][col].is_zero:
                continue
            f = work[r][col]
            work[r] = [a - f * b for a, b in zip(work[r], work[col])]
            aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return DenseMatrix(aug)


def rank(m: DenseMatrix) -> int:
    work = [list(row) for row in m.entries]
    r = 0
    for col in range(m.cols):
        pivot = next((k for k in range(r, m.rows) if not work[k][col].is_zero), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv_p = work[r][col].inv()
        work[r] = [e * inv_p for e in work[r]]
        for k in range(m.rows):
            if k != r and not work[k][col].is_zero:
                f = work[k][col]
                work[k] = [a - f * b for a, b in zip(work[k], work[r])]
        r += 1
        if r == m.rows:
            break
    return r


def solve_columns(
    columns: list[dict[int, QuadScalar]],
    target: dict[int, QuadScalar],
    dim: int,
) -> list[QuadScalar] | None:
    """Solve sum_j c_j * columns[j] = target; None when inconsistent.

    Columns are sparse {row: value} maps over `dim` rows.  When the system is
    underdetermined any one exact solution is returned.
    """
    width = len(columns)
    rows = [
        [col.get(r, _ZERO) for col in columns] + [target.get(r, _ZERO)]
        for r in range(dim)
    ]
    pivots: list[tuple[int, int]] = []  # (row, col)
    r = 0
    for c in range(width):
        pivot = next((k for k in range(r, dim) if not rows[k][c].is_zero), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv_p = rows[r][c].inv()
        rows[r] = [e * inv_p for e in rows[r]]
        for k in range(dim):
            if k != r and not rows[k][c].is_zero:
                f = rows[k][c]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        pivots.append((r, c))
        r += 1
        if r == dim:
            break
    for k in range(r, dim):
        if not rows[k][width].is_zero:
            return None
    solution = [_ZERO] * width
    for row_idx, col_idx in pivots:
        solution[col_idx] = rows[row_idx][width]
    return solution
