"""
Pytest fixtures for testing.
"""
import pytest
import numpy as np

from src.cli.schemas import AmplitudesDocument, CheckMatrixDocument, MatrixDocument, TableauDocument
from src.pauli import AmplitudeVector


@pytest.fixture
def rng():
    """Seeded generator for reproducible random instances."""
    return np.random.default_rng(42)


@pytest.fixture
def dense_gates():
    """Dense single- and two-qubit gates; qubit 1 is the most significant index bit."""
    return {
        'H': np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2),
        'S': np.diag([1, 1j]).astype(np.complex128),
        'T': np.diag([1, np.exp(1j * np.pi / 4)]).astype(np.complex128),
        'CNOT': np.array([
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 0, 1],
            [0, 0, 1, 0],
        ], dtype=np.complex128),
    }


@pytest.fixture
def single_qubit_states():
    """The six single-qubit stabiliser states |0>, |1>, |+>, |->, |+i>, |-i>."""
    r = 1 / np.sqrt(2)
    return {
        '0': AmplitudeVector([1, 0]),
        '1': AmplitudeVector([0, 1]),
        '+': AmplitudeVector([r, r]),
        '-': AmplitudeVector([r, -r]),
        '+i': AmplitudeVector([r, 1j * r]),
        '-i': AmplitudeVector([r, -1j * r]),
    }


@pytest.fixture
def bell_state():
    """(|00> + |11>)/sqrt(2)."""
    return AmplitudeVector(np.array([1, 0, 0, 1]) / np.sqrt(2))


@pytest.fixture
def magic_state():
    """(|0> + e^{iπ/4}|1>)/sqrt(2), not a stabiliser state."""
    return AmplitudeVector(np.array([1, np.exp(1j * np.pi / 4)]) / np.sqrt(2))


@pytest.fixture
def sample_amplitudes_document():
    """|00> as an amplitudes document."""
    return AmplitudesDocument(n=2, payload=[(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)])


@pytest.fixture
def sample_bell_check_document():
    """Check matrix {X1X2, Z1Z2} of the Bell state."""
    return CheckMatrixDocument(n=2, payload=["11000", "00110"])


@pytest.fixture
def sample_hadamard_tableau_document():
    """Tableau (U=X, V=Z) of the Hadamard gate."""
    return TableauDocument.model_validate({"n": 1, "payload": {"rows": [{"u": "X", "v": "Z"}]}})


@pytest.fixture
def sample_t_matrix_document(dense_gates):
    """Dense T gate as a matrix document."""
    return MatrixDocument(n=1, payload=[[(float(z.real), float(z.imag)) for z in row] for row in dense_gates['T']])
