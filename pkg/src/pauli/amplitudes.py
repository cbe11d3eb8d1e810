"""Amplitude vectors and the one-pass application of a Pauli operator."""
import logging

import numpy as np
import numpy.typing as npt

from src.f2 import BitVector
from src.pauli.operator import PauliOperator, QubitCountMismatchError

logger: logging.Logger = logging.getLogger(__name__)


def index_of(z: BitVector) -> int:
    """Basis index of the label |z_1 ... z_n>; qubit 1 is the most significant bit."""
    return z.bits


def bits_of(index: int, n: int) -> BitVector:
    if not 0 <= index < (1 << n): raise IndexError(f"Index {index} out of range for {n} qubits")
    return BitVector(index, n)


def qubit_count(size: int) -> int:
    """n with size == 2^n, or ValueError."""
    if size < 1 or size & (size - 1): raise ValueError(f"Length {size} is not a power of two")
    return size.bit_length() - 1


class AmplitudeVector:
    """Length-2^n complex vector indexed by basis label."""

    __slots__ = ("entries",)

    def __init__(self, entries: npt.ArrayLike):
        array = np.asarray(entries, dtype=np.complex128)
        if array.ndim != 1: raise ValueError(f"Amplitude vector must be one-dimensional, got shape {array.shape}")
        qubit_count(array.size)
        self.entries: npt.NDArray[np.complex128] = array

    @property
    def n(self) -> int: return qubit_count(self.entries.size)

    @classmethod
    def basis_state(cls, index: int, n: int) -> "AmplitudeVector":
        entries = np.zeros(1 << n, dtype=np.complex128)
        entries[index_of(bits_of(index, n))] = 1
        return cls(entries)

    def __len__(self) -> int: return self.entries.size

    def __getitem__(self, index: int) -> complex: return complex(self.entries[index])

    def __repr__(self) -> str: return f"AmplitudeVector(n={self.n}, entries={self.entries!r})"

    def norm(self) -> float: return float(np.linalg.norm(self.entries))

    def normalised(self) -> "AmplitudeVector":
        norm = self.norm()
        if norm == 0: raise ValueError("Cannot normalise the zero vector")
        return AmplitudeVector(self.entries / norm)


def parity(values: npt.NDArray[np.int64]) -> npt.NDArray[np.int64]:
    return (np.bitwise_count(values) & 1).astype(np.int64)


def apply_array(a: PauliOperator, array: npt.NDArray[np.complex128]) -> npt.NDArray[np.complex128]:
    """
    Apply a to every column of an array of shape (2^n,) or (2^n, m).

    result[z + q] = (−i)^k (−1)^{p·z} array[z], computed as a gather on z' = z XOR q.
    """
    if array.shape[0] != 1 << a.n: raise QubitCountMismatchError(f"Pauli on {a.n} qubits applied to array with {array.shape[0]} rows")

    indices = np.arange(array.shape[0], dtype=np.int64)
    source = indices ^ index_of(a.q)
    signs = 1 - 2 * parity(source & index_of(a.p))
    factor = a.phase * signs
    if array.ndim > 1: factor = factor.reshape((-1,) + (1,) * (array.ndim - 1))
    return factor * array[source]


def apply(a: PauliOperator, v: AmplitudeVector) -> AmplitudeVector:
    if a.n != v.n: raise QubitCountMismatchError(f"Pauli on {a.n} qubits applied to a {v.n}-qubit vector")
    return AmplitudeVector(apply_array(a, v.entries))


def applied_entry(a: PauliOperator, array: npt.NDArray[np.complex128], index: int) -> complex:
    """Single entry (a·array)[index] without touching the rest of the vector."""
    source = index ^ index_of(a.q)
    sign = -1 if (source & index_of(a.p)).bit_count() & 1 else 1
    return a.phase * sign * complex(array[source])
