"""Stabiliser tableaus and dense Clifford matrices."""
import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import numpy.typing as npt

from src.pauli import PauliOperator, commutes, qubit_count

logger: logging.Logger = logging.getLogger(__name__)


class InvalidTableauError(ValueError):
    """Raised when a tableau violates the conjugate-tuple relations."""


class ExtractionFailedError(ValueError):
    """Raised when tableau extraction meets an internal inconsistency, i.e. a non-Clifford input."""


class TableauRow(NamedTuple):
    """(U_i, V_i) = (C Z_i C*, C X_i C*)."""

    u: PauliOperator
    v: PauliOperator


@dataclass(frozen=True)
class Tableau:
    n: int
    rows: tuple[TableauRow, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n: raise InvalidTableauError(f"Tableau for {self.n} qubits has {len(self.rows)} rows")
        for row in self.rows:
            if row.u.n != self.n or row.v.n != self.n: raise InvalidTableauError(f"Row ({row.u}, {row.v}) does not act on {self.n} qubits")

    @classmethod
    def identity(cls, n: int) -> "Tableau":
        return cls(n, tuple(TableauRow(PauliOperator.basic_z(i, n), PauliOperator.basic_x(i, n)) for i in range(n)))

    @property
    def us(self) -> list[PauliOperator]: return [row.u for row in self.rows]

    @property
    def vs(self) -> list[PauliOperator]: return [row.v for row in self.rows]


def tableau_violation(t: Tableau) -> str | None:
    """Description of the first violated relation, or None for a valid tableau."""
    us, vs = t.us, t.vs
    for i in range(t.n):
        if not us[i].is_hermitian_order_two(): return f"U_{i + 1} = {us[i]} is not Hermitian"
        if not vs[i].is_hermitian_order_two(): return f"V_{i + 1} = {vs[i]} is not Hermitian"

    for i in range(t.n):
        for j in range(t.n):
            if commutes(us[i], vs[j]) == (i == j): return f"U_{i + 1} and V_{j + 1} {'commute' if i == j else 'anticommute'}"
            if j > i and not commutes(us[i], us[j]): return f"U_{i + 1} and U_{j + 1} anticommute"
            if j > i and not commutes(vs[i], vs[j]): return f"V_{i + 1} and V_{j + 1} anticommute"
    return None


def is_valid_tableau(t: Tableau) -> bool:
    """True iff every U_i, V_i is Hermitian and the conjugate-tuple commutation relations hold."""
    violation = tableau_violation(t)
    if violation: logger.debug(f"Invalid tableau: {violation}")
    return violation is None


class CliffordMatrix:
    """Dense 2^n x 2^n complex matrix; column index_of(z) is C|z>."""

    __slots__ = ("entries",)

    def __init__(self, entries: npt.ArrayLike):
        array = np.asarray(entries, dtype=np.complex128)
        if array.ndim != 2 or array.shape[0] != array.shape[1]: raise ValueError(f"Expected a square matrix, got shape {array.shape}")
        qubit_count(array.shape[0])
        self.entries: npt.NDArray[np.complex128] = array

    @property
    def n(self) -> int: return qubit_count(self.entries.shape[0])

    def column(self, index: int) -> npt.NDArray[np.complex128]: return self.entries[:, index]

    def __repr__(self) -> str: return f"CliffordMatrix(n={self.n})"
