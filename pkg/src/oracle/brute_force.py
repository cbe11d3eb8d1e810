"""
Exhaustive reference implementations over dense matrices.

Nothing here reuses the fast paths; the only shared piece is the dense form of
a Pauli operator. Every routine enforces a hard qubit limit at entry.
"""
import itertools
import logging

import numpy as np
import numpy.typing as npt

from src.clifford import CliffordMatrix, ExtractionFailedError, Tableau, TableauRow
from src.f2 import BitVector
from src.pauli import AmplitudeVector, OracleLimitError, PauliOperator, to_dense
from src.stabiliser import CheckMatrix
from src.utils import settings

logger: logging.Logger = logging.getLogger(__name__)


def _check_limit(n: int, limit: int, what: str) -> None:
    if n > limit: raise OracleLimitError(f"Brute-force {what} limited to {limit} qubits, got {n}")


def _all_paulis(n: int) -> list[PauliOperator]:
    """All 4^n Hermitian Paulis with positive sign, identity first."""
    return [PauliOperator.hermitian(BitVector(q, n), BitVector(p, n)) for q in range(1 << n) for p in range(1 << n)]


def _phase_normalised(vector: npt.NDArray[np.complex128], tolerance: float) -> npt.NDArray[np.complex128]:
    """Unit vector whose first non-negligible entry is positive real."""
    vector = vector / np.linalg.norm(vector)
    first = int(np.flatnonzero(np.abs(vector) > tolerance)[0])
    return vector * (abs(vector[first]) / vector[first])


def brute_stabiliser_group(v: AmplitudeVector, tolerance: float | None = None) -> list[PauliOperator]:
    """
    Every Hermitian Pauli P (both signs) with P·v = v, found by dense multiplication.

    Raises:
        OracleLimitError: If n > settings.ORACLE_MAX_STATE_QUBITS
    """
    tolerance = tolerance if tolerance is not None else settings.ORACLE_TOLERANCE
    _check_limit(v.n, settings.ORACLE_MAX_STATE_QUBITS, "stabiliser group")
    norm = v.norm()
    if norm == 0: return []
    state = v.entries / norm

    group: list[PauliOperator] = []
    for pauli in _all_paulis(v.n):
        image = to_dense(pauli) @ state
        if np.abs(image - state).max() <= tolerance: group.append(pauli)
        elif np.abs(image + state).max() <= tolerance: group.append(PauliOperator(pauli.q, pauli.p, pauli.c ^ 1, pauli.d))
    return group


def brute_is_stabiliser(v: AmplitudeVector, tolerance: float | None = None) -> bool:
    return len(brute_stabiliser_group(v, tolerance)) == 1 << v.n


def _pauli_decomposition(image: npt.NDArray[np.complex128], n: int, tolerance: float) -> PauliOperator | None:
    """The operator λ·P equal to image with λ a fourth root of unity, if one exists."""
    size = 1 << n
    for pauli in _all_paulis(n):
        dense = to_dense(pauli)
        coefficient = complex(np.trace(dense.conj().T @ image)) / size
        if abs(abs(coefficient) - 1) > tolerance: continue
        if np.abs(image - coefficient * dense).max() > tolerance: continue
        exponent = int(np.rint(np.angle(coefficient) / (-np.pi / 2))) % 4
        if abs(coefficient - (-1j) ** exponent) > tolerance: return None
        return pauli.scaled(exponent)
    return None


def _conjugation_images(m: CliffordMatrix, tolerance: float) -> list[tuple[PauliOperator | None, PauliOperator | None]] | None:
    """(C Z_i C*, C X_i C*) decomposed over the Pauli group, or None for a non-unitary matrix."""
    n = m.n
    entries = m.entries
    if np.abs(entries @ entries.conj().T - np.eye(1 << n)).max() > tolerance:
        logger.warning(f"Brute-force Clifford check received a non-unitary {n}-qubit matrix")
        return None

    images: list[tuple[PauliOperator | None, PauliOperator | None]] = []
    for qubit in range(n):
        z_image = entries @ to_dense(PauliOperator.basic_z(qubit, n)) @ entries.conj().T
        x_image = entries @ to_dense(PauliOperator.basic_x(qubit, n)) @ entries.conj().T
        images.append((_pauli_decomposition(z_image, n, tolerance), _pauli_decomposition(x_image, n, tolerance)))
    return images


def brute_is_clifford(m: CliffordMatrix, tolerance: float | None = None) -> bool:
    """
    True iff m conjugates every Z_i and X_i to a Pauli with a fourth-root phase.

    Non-unitary input returns False.

    Raises:
        OracleLimitError: If n > settings.ORACLE_MAX_GATE_QUBITS
    """
    tolerance = tolerance if tolerance is not None else settings.ORACLE_TOLERANCE
    _check_limit(m.n, settings.ORACLE_MAX_GATE_QUBITS, "Clifford check")
    images = _conjugation_images(m, tolerance)
    if images is None: return False
    return all(u is not None and v is not None for u, v in images)


def brute_tableau(m: CliffordMatrix, tolerance: float | None = None) -> Tableau:
    """
    Tableau by direct conjugation of the basic Paulis.

    Raises:
        OracleLimitError: If n > settings.ORACLE_MAX_GATE_QUBITS
        ExtractionFailedError: If m is not a Clifford gate
    """
    tolerance = tolerance if tolerance is not None else settings.ORACLE_TOLERANCE
    _check_limit(m.n, settings.ORACLE_MAX_GATE_QUBITS, "tableau")
    images = _conjugation_images(m, tolerance)
    if images is None: raise ExtractionFailedError("Matrix is not unitary")

    rows: list[TableauRow] = []
    for qubit, (u, v) in enumerate(images):
        if u is None or v is None: raise ExtractionFailedError(f"Conjugate of Z_{qubit + 1} or X_{qubit + 1} is not a Pauli")
        rows.append(TableauRow(u, v))
    return Tableau(m.n, tuple(rows))


def _projector(generators: list[PauliOperator]) -> npt.NDArray[np.complex128]:
    n = generators[0].n
    projector = np.eye(1 << n, dtype=np.complex128)
    for generator in generators:
        projector = projector @ (np.eye(1 << n) + to_dense(generator)) / 2
    return projector


def brute_check_to_amplitudes(m: CheckMatrix, tolerance: float | None = None) -> AmplitudeVector:
    """
    +1 eigenvector of the generators via the projector Π (I + P_i)/2.

    The result is normalised with its first nonzero entry positive real.

    Raises:
        OracleLimitError: If n > settings.ORACLE_MAX_STATE_QUBITS
    """
    tolerance = tolerance if tolerance is not None else settings.ORACLE_TOLERANCE
    _check_limit(m.n, settings.ORACLE_MAX_STATE_QUBITS, "check-matrix evaluation")
    projector = _projector(m.paulis())
    column = projector[:, int(np.argmax(np.linalg.norm(projector, axis=0)))]
    return AmplitudeVector(_phase_normalised(column, tolerance))


def enumerate_stabiliser_states(n: int, tolerance: float | None = None) -> list[AmplitudeVector]:
    """
    Every n-qubit stabiliser state up to global phase.

    Runs over commuting sets of n independent non-identity Paulis and all sign
    patterns, keeps the rank-one projectors and deduplicates their columns up to phase.

    Raises:
        OracleLimitError: If n > settings.ORACLE_MAX_ENUMERATION_QUBITS
    """
    tolerance = tolerance if tolerance is not None else settings.ORACLE_TOLERANCE
    _check_limit(n, settings.ORACLE_MAX_ENUMERATION_QUBITS, "state enumeration")
    candidates = _all_paulis(n)[1:]

    states: dict[tuple[complex, ...], AmplitudeVector] = {}
    for subset in itertools.combinations(candidates, n):
        if any(a.symplectic_form(b) for a, b in itertools.combinations(subset, 2)): continue
        for signs in itertools.product((0, 1), repeat=n):
            generators = [PauliOperator(g.q, g.p, sign, g.d) for g, sign in zip(subset, signs)]
            projector = _projector(generators)
            if abs(np.trace(projector) - 1) > tolerance: continue
            column = projector[:, int(np.argmax(np.linalg.norm(projector, axis=0)))]
            state = _phase_normalised(column, tolerance)
            key = tuple(np.round(state, 8) + 0.0)
            states.setdefault(key, AmplitudeVector(state))

    logger.debug(f"Enumerated {len(states)} stabiliser states on {n} qubits")
    return list(states.values())
