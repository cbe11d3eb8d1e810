"""
Pauli operators in the normal form (−1)^c (−i)^d X^q Z^p.

The phase is carried exactly as the bits (c, d); internally the two bits are
combined into one exponent k = 2c + d of (−i), so products reduce to integer
addition mod 4.
"""
import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import numpy.typing as npt

from src.f2 import BitVector
from src.utils import settings

logger: logging.Logger = logging.getLogger(__name__)

_LITERAL_PREFIXES: dict[str, int] = {"+i": 3, "-i": 1, "+": 0, "-": 2}
_PREFIX_FOR_EXPONENT: dict[int, str] = {0: "", 1: "-i", 2: "-", 3: "+i"}

_SINGLE_QUBIT_DENSE: dict[tuple[int, int], npt.NDArray[np.complex128]] = {
    (0, 0): np.eye(2, dtype=np.complex128),
    (1, 0): np.array([[0, 1], [1, 0]], dtype=np.complex128),
    (0, 1): np.array([[1, 0], [0, -1]], dtype=np.complex128),
    (1, 1): np.array([[0, -1], [1, 0]], dtype=np.complex128),  # XZ
}


class QubitCountMismatchError(ValueError):
    """Raised when operands act on different numbers of qubits."""


class PauliLiteralError(ValueError):
    """Raised for malformed textual Pauli literals."""


class OracleLimitError(ValueError):
    """Raised when a dense or brute-force routine is asked to exceed its qubit limit."""


@dataclass(frozen=True)
class PauliOperator:
    """
    The unitary (−1)^c (−i)^d X^q Z^p on n qubits.

    q is the X part and p the Z part; position i of each vector is qubit i+1.
    """

    q: BitVector
    p: BitVector
    c: int = 0
    d: int = 0

    def __post_init__(self) -> None:
        if self.q.length != self.p.length: raise QubitCountMismatchError(f"X part has length {self.q.length}, Z part {self.p.length}")
        if self.c not in (0, 1) or self.d not in (0, 1): raise ValueError(f"Phase bits must be 0 or 1, got c={self.c}, d={self.d}")

    @property
    def n(self) -> int: return self.q.length

    @property
    def phase_exponent(self) -> int:
        """k with phase (−i)^k."""
        return 2 * self.c + self.d

    @property
    def phase(self) -> complex: return (-1j) ** self.phase_exponent

    @classmethod
    def from_exponent(cls, q: BitVector, p: BitVector, exponent: int) -> "PauliOperator":
        exponent %= 4
        return cls(q, p, exponent >> 1, exponent & 1)

    @classmethod
    def identity(cls, n: int) -> "PauliOperator": return cls(BitVector.zeros(n), BitVector.zeros(n))

    @classmethod
    def basic_z(cls, qubit: int, n: int) -> "PauliOperator":
        """Z on qubit index `qubit` (0-based), identity elsewhere."""
        return cls(BitVector.zeros(n), BitVector.unit(qubit, n))

    @classmethod
    def basic_x(cls, qubit: int, n: int) -> "PauliOperator":
        return cls(BitVector.unit(qubit, n), BitVector.zeros(n))

    @classmethod
    def hermitian(cls, q: BitVector, p: BitVector, sign: int = 0) -> "PauliOperator":
        """The order-two operator (−1)^sign (−i)^{p·q} X^q Z^p."""
        return cls(q, p, sign & 1, p.dot(q))

    def is_hermitian_order_two(self) -> bool: return self.d == self.p.dot(self.q)

    def symplectic_form(self, other: "PauliOperator") -> int:
        _check_qubits(self, other)
        return (self.p.dot(other.q) + other.p.dot(self.q)) & 1

    def scaled(self, exponent: int) -> "PauliOperator":
        """This operator multiplied by (−i)^exponent."""
        return PauliOperator.from_exponent(self.q, self.p, self.phase_exponent + exponent)

    def __str__(self) -> str: return format_pauli(self)


def _check_qubits(a: PauliOperator, b: PauliOperator) -> None:
    if a.n != b.n: raise QubitCountMismatchError(f"Operands act on {a.n} and {b.n} qubits")


def multiply(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    """Normal-form representative of the matrix product a·b."""
    _check_qubits(a, b)
    # Z^pa X^qb = (−1)^{pa·qb} X^qb Z^pa
    exponent = a.phase_exponent + b.phase_exponent + 2 * a.p.dot(b.q)
    return PauliOperator.from_exponent(a.q + b.q, a.p + b.p, exponent)


def commutes(a: PauliOperator, b: PauliOperator) -> bool:
    return a.symplectic_form(b) == 0


def power_product(generators: Sequence[PauliOperator], exponents: BitVector) -> PauliOperator:
    """
    Left-to-right product of the generators selected by exponents.

    Args:
        generators: Non-empty list of operators on a common qubit count, or empty with n taken as 0
        exponents: Selector bits, one per generator

    Returns:
        U_1^{e_1} ... U_m^{e_m}
    """
    if exponents.length != len(generators): raise ValueError(f"{exponents.length} exponents for {len(generators)} generators")
    if not generators: return PauliOperator.identity(0)

    result = PauliOperator.identity(generators[0].n)
    for generator, selected in zip(generators, exponents):
        if selected: result = multiply(result, generator)
    return result


def to_dense(a: PauliOperator, max_qubits: int | None = None) -> npt.NDArray[np.complex128]:
    """
    Dense 2^n x 2^n matrix of the operator.

    Raises:
        OracleLimitError: If n exceeds max_qubits (default settings.ORACLE_MAX_DENSE_QUBITS)
    """
    limit = max_qubits if max_qubits is not None else settings.ORACLE_MAX_DENSE_QUBITS
    if a.n > limit: raise OracleLimitError(f"Refusing to densify a {a.n}-qubit Pauli (limit {limit})")

    dense = np.ones((1, 1), dtype=np.complex128)
    for x_bit, z_bit in zip(a.q, a.p):
        dense = np.kron(dense, _SINGLE_QUBIT_DENSE[(x_bit, z_bit)])
    return a.phase * dense


def parse_pauli(text: str) -> PauliOperator:
    """
    Parse a literal such as "-XZI", "+iYY" or "ZZ".

    The optional prefix is one of +, -, +i, -i (U+2212 accepted for the minus
    sign). Y is the Hermitian matrix [[0, -i], [i, 0]] = i·XZ.

    Raises:
        PauliLiteralError: On any character outside the grammar
    """
    literal = text.strip().replace("−", "-")
    prefix_exponent = 0
    for prefix, exponent in _LITERAL_PREFIXES.items():
        if literal.startswith(prefix):
            prefix_exponent = exponent
            literal = literal[len(prefix):]
            break

    if any(ch not in "IXYZ" for ch in literal): raise PauliLiteralError(f"Invalid Pauli literal: {text!r}")

    q = BitVector.from_list([ch in "XY" for ch in literal])
    p = BitVector.from_list([ch in "ZY" for ch in literal])
    # each Y contributes i = (−i)^3 relative to XZ
    return PauliOperator.from_exponent(q, p, prefix_exponent + 3 * literal.count("Y"))


def format_pauli(a: PauliOperator) -> str:
    """Inverse of parse_pauli; the "+" prefix is omitted."""
    letters = "".join("IXZY"[x_bit + 2 * z_bit] for x_bit, z_bit in zip(a.q, a.p))
    y_count = letters.count("Y")
    return _PREFIX_FOR_EXPONENT[(a.phase_exponent + y_count) % 4] + letters
