"""
Row reduction over GF(2) and the solvers built on it.

All routines work on packed integer rows; a row operation is one XOR on the
matrix row and one XOR on the matching row of the accumulated transform.
"""
import logging
from dataclasses import dataclass

from src.f2.bits import BitMatrix, BitVector

logger: logging.Logger = logging.getLogger(__name__)


class InconsistentSystemError(ValueError):
    """Raised when a linear system a·x = b has no solution."""


class SingularMatrixError(ValueError):
    """Raised when a square matrix is not invertible."""


class RowsDependentError(ValueError):
    """Raised when a right inverse is requested for a matrix with dependent rows."""


@dataclass(frozen=True)
class RowReductionRecord:
    """Pivot columns and the row-operation matrix T with T·A = rref(A)."""

    pivot_columns: tuple[int, ...]
    transform: BitMatrix

    @property
    def rank(self) -> int: return len(self.pivot_columns)


def rref(a: BitMatrix) -> tuple[BitMatrix, RowReductionRecord]:
    """
    Fully reduced row-echelon form of a, eliminating above and below each pivot.

    Args:
        a: Matrix to reduce

    Returns:
        (reduced matrix, record with pivot columns and accumulated transform)
    """
    rows = list(a.rows)
    row_count, col_count = a.shape
    transform = list(BitMatrix.identity(row_count).rows)
    pivots: list[int] = []

    r = 0
    for col in range(col_count):
        if r == row_count: break
        mask = 1 << (col_count - 1 - col)
        pivot = next((i for i in range(r, row_count) if rows[i] & mask), None)
        if pivot is None: continue

        rows[r], rows[pivot] = rows[pivot], rows[r]
        transform[r], transform[pivot] = transform[pivot], transform[r]
        for i in range(row_count):
            if i != r and rows[i] & mask:
                rows[i] ^= rows[r]
                transform[i] ^= transform[r]
        pivots.append(col)
        r += 1

    return BitMatrix(tuple(rows), col_count), RowReductionRecord(tuple(pivots), BitMatrix(tuple(transform), row_count))


def rank(a: BitMatrix) -> int:
    return rref(a)[1].rank


def solve(a: BitMatrix, b: BitVector) -> BitVector:
    """
    Solve a·x = b with every free variable set to zero.

    Raises:
        InconsistentSystemError: If no solution exists
    """
    if b.length != a.row_count: raise ValueError(f"Right-hand side has length {b.length}, expected {a.row_count}")

    reduced, record = rref(a)
    rhs = record.transform @ b
    for i in range(record.rank, a.row_count):
        if rhs[i]: raise InconsistentSystemError(f"System of {a.row_count} equations in {a.col_count} unknowns is inconsistent")

    x = 0
    for r, col in enumerate(record.pivot_columns):
        if rhs[r]: x |= 1 << (a.col_count - 1 - col)
    return BitVector(x, a.col_count)


def null_space_basis(a: BitMatrix) -> list[BitVector]:
    """Kernel basis of a, one vector per free column in increasing column order."""
    reduced, record = rref(a)
    pivot_set = set(record.pivot_columns)
    basis: list[BitVector] = []

    for free in range(a.col_count):
        if free in pivot_set: continue
        x = BitVector.unit(free, a.col_count)
        for r, col in enumerate(record.pivot_columns):
            if reduced.entry(r, free): x = x.flip(col)
        basis.append(x)

    return basis


def invert(a: BitMatrix) -> BitMatrix:
    """
    Inverse of a square matrix over GF(2).

    Raises:
        SingularMatrixError: If rank < size
    """
    if a.row_count != a.col_count: raise ValueError(f"Cannot invert non-square matrix of shape {a.shape}")

    _, record = rref(a)
    if record.rank < a.row_count: raise SingularMatrixError(f"Matrix of size {a.row_count} has rank {record.rank}")
    return record.transform


def right_pseudoinverse(a: BitMatrix) -> BitMatrix:
    """
    Right inverse A⁺ with A·A⁺ = I.

    Uses A^T(AA^T)^{-1} when AA^T is invertible. Over GF(2) independent rows do
    not guarantee that (e.g. A = [[1, 1]]), in which case each column of A⁺ is
    obtained by solving A·x = e_i.

    Raises:
        RowsDependentError: If the rows of a are linearly dependent
    """
    row_count, col_count = a.shape
    if row_count > col_count: raise RowsDependentError(f"{row_count} rows in {col_count} columns are necessarily dependent")
    if rank(a) < row_count: raise RowsDependentError(f"Rows of the {row_count}x{col_count} matrix are linearly dependent")

    a_t = a.transpose()
    try:
        return a_t @ invert(a @ a_t)
    except SingularMatrixError:
        logger.debug("AA^T is singular; building the right inverse column by column")

    columns = [solve(a, BitVector.unit(i, row_count)) for i in range(row_count)]
    return BitMatrix.from_vectors(columns, col_count).transpose()
