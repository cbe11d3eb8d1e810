"""Assertion helpers shared by the test modules."""
import numpy as np
import numpy.typing as npt

from src.cli.schemas import MatrixDocument
from src.pauli import AmplitudeVector, apply
from src.stabiliser import CheckMatrix


def phase_distance(a: npt.ArrayLike, b: npt.ArrayLike) -> float:
    """Max-norm distance between a and the closest multiple λ·b with |λ| = 1."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    anchor = np.unravel_index(np.argmax(np.abs(b)), b.shape)
    if b[anchor] == 0: return float(np.abs(a).max())
    phase = a[anchor] / b[anchor]
    phase = phase / abs(phase) if phase != 0 else 1
    return float(np.abs(a - phase * b).max())


def scalar_distance(a: npt.ArrayLike, b: npt.ArrayLike) -> float:
    """Max-norm distance between a and the closest multiple λ·b with λ any complex scalar fixed by the largest entry of b."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    anchor = np.unravel_index(np.argmax(np.abs(b)), b.shape)
    return float(np.abs(a - (a[anchor] / b[anchor]) * b).max())


def stabilisation_residual(m: CheckMatrix, v: AmplitudeVector) -> float:
    """Largest |P·v − v| over the generators of m."""
    return max(float(np.abs(apply(pauli, v).entries - v.entries).max()) for pauli in m.paulis())


def matrix_document(matrix: npt.NDArray[np.complex128]) -> MatrixDocument:
    n = matrix.shape[0].bit_length() - 1
    return MatrixDocument(n=n, payload=[[(float(z.real), float(z.imag)) for z in row] for row in matrix])
