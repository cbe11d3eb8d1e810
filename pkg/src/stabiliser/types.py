"""Affine-subspace triples and check matrices."""
import logging
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from src.f2 import BitMatrix, BitVector, rank
from src.pauli import PauliOperator

logger: logging.Logger = logging.getLogger(__name__)


class NotAStabiliserStateError(ValueError):
    """Raised when a conversion meets a vector that is not proportional to a stabiliser state."""


class InvalidCheckMatrixError(ValueError):
    """Raised for check matrices with the wrong shape, dependent rows or non-commuting rows."""


class InvalidTripleError(ValueError):
    """Raised for triples with dependent basis vectors or inconsistent dimensions."""


@dataclass(frozen=True)
class AffineSubspaceTriple:
    """
    Stabiliser state Σ_α (−1)^{Q(α)} i^{ℓ(α)} |α·basis + shift>.

    qform is the k x k upper-triangular matrix Q̃ with Q(α) = α^T Q̃ α, and lmap
    holds ℓ on the basis vectors; both use coordinates relative to basis.
    """

    n: int
    basis: tuple[BitVector, ...]
    shift: BitVector
    qform: BitMatrix
    lmap: BitVector

    def __post_init__(self) -> None:
        k = len(self.basis)
        if self.shift.length != self.n: raise InvalidTripleError(f"Shift has length {self.shift.length}, expected {self.n}")
        if k > self.n: raise InvalidTripleError(f"{k} basis vectors in dimension {self.n}")
        for vector in self.basis:
            if vector.length != self.n: raise InvalidTripleError(f"Basis vector {vector} has length {vector.length}, expected {self.n}")
        if self.qform.shape != (k, k): raise InvalidTripleError(f"Quadratic form has shape {self.qform.shape}, expected ({k}, {k})")
        if self.lmap.length != k: raise InvalidTripleError(f"Linear map has length {self.lmap.length}, expected {k}")

        for i in range(k):
            for j in range(i):
                if self.qform.entry(i, j): raise InvalidTripleError(f"Quadratic form is not upper triangular at ({i}, {j})")

        if k and rank(self.basis_matrix) < k: raise InvalidTripleError("Basis vectors are linearly dependent")

    @property
    def k(self) -> int: return len(self.basis)

    @property
    def basis_matrix(self) -> BitMatrix:
        """k x n matrix with the basis vectors as rows."""
        return BitMatrix.from_vectors(self.basis, self.n)

    def quadratic(self, alpha: BitVector) -> int:
        """Q(α) = α^T Q̃ α over GF(2)."""
        return alpha.dot(self.qform @ alpha)

    def linear(self, alpha: BitVector) -> int:
        return alpha.dot(self.lmap)


class CheckRow(NamedTuple):
    """One generator (−1)^c (−i)^{p·q} Z^p X^q."""

    q: BitVector
    p: BitVector
    c: int


@dataclass(frozen=True)
class CheckMatrix:
    """
    n generators of a stabiliser group, one (q | p | c) row each.

    Rows use the Z^p X^q ordering; paulis() and from_paulis() translate to and
    from the X^q Z^p normal form, where the sign bit differs by p·q.
    """

    n: int
    rows: tuple[CheckRow, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n: raise InvalidCheckMatrixError(f"Check matrix for {self.n} qubits has {len(self.rows)} rows")
        for row in self.rows:
            if row.q.length != self.n or row.p.length != self.n: raise InvalidCheckMatrixError(f"Row ({row.q}|{row.p}) does not have {self.n} columns per block")
            if row.c not in (0, 1): raise InvalidCheckMatrixError(f"Sign bit must be 0 or 1, got {row.c}")

    @classmethod
    def from_paulis(cls, paulis: Sequence[PauliOperator]) -> "CheckMatrix":
        """
        Build a check matrix from normal-form generators.

        Raises:
            InvalidCheckMatrixError: If a generator is not Hermitian of order two
        """
        rows: list[CheckRow] = []
        for pauli in paulis:
            if not pauli.is_hermitian_order_two(): raise InvalidCheckMatrixError(f"Generator {pauli} is not Hermitian")
            rows.append(CheckRow(pauli.q, pauli.p, pauli.c ^ pauli.p.dot(pauli.q)))
        n = rows[0].q.length if rows else 0
        return cls(n, tuple(rows))

    def paulis(self) -> list[PauliOperator]:
        """Generators in the X^q Z^p normal form."""
        return [PauliOperator(row.q, row.p, row.c ^ row.p.dot(row.q), row.p.dot(row.q)) for row in self.rows]

    @property
    def symplectic_matrix(self) -> BitMatrix:
        """n x 2n matrix with rows (q_i | p_i)."""
        return BitMatrix.from_vectors([row.q.concat(row.p) for row in self.rows], 2 * self.n)


def validate_check_matrix(m: CheckMatrix) -> None:
    """
    Raises:
        InvalidCheckMatrixError: If the rows do not commute pairwise or (q|p) rows are dependent
    """
    paulis = m.paulis()
    for i in range(m.n):
        for j in range(i + 1, m.n):
            if paulis[i].symplectic_form(paulis[j]): raise InvalidCheckMatrixError(f"Rows {i} and {j} anticommute")
    if rank(m.symplectic_matrix) < m.n: raise InvalidCheckMatrixError("Rows are linearly dependent")


def is_valid_check_matrix(m: CheckMatrix) -> bool:
    try:
        validate_check_matrix(m)
    except InvalidCheckMatrixError as e:
        logger.debug(f"Invalid check matrix: {e}")
        return False
    return True
