"""
Dense Clifford matrices to and from stabiliser tableaus.

Extraction reads U_i = C Z_i C* from the stabiliser group of column 0 and the
signs each generator takes on the weight-one columns, then V_i = C X_i C* from
relative phases between columns 0, e_i and e_i + e_j. Verification repeats the
same steps with every column checked, and walks all columns in Gray-code order
so each one is predicted from its neighbour by a single V_j.
"""
import logging

import numpy as np
import numpy.typing as npt

from src.clifford.diagnosis import CliffordDiagnosis, CliffordFailure
from src.clifford.tableau import CliffordMatrix, ExtractionFailedError, InvalidTableauError, Tableau, TableauRow, tableau_violation
from src.f2 import BitMatrix, BitVector, RowsDependentError, SingularMatrixError, gray_sequence, invert, right_pseudoinverse
from src.pauli import AmplitudeVector, PauliOperator, applied_entry, apply_array, commutes, index_of, multiply, parity, power_product
from src.stabiliser import CheckMatrix, check_to_amplitudes, triple_to_check, verify_stabiliser_vector
from src.utils import settings

logger: logging.Logger = logging.getLogger(__name__)


class _Rejection(Exception):
    def __init__(self, reason: CliffordFailure, witness: int | None, message: str):
        super().__init__(message)
        self.reason = reason
        self.witness = witness
        self.message = message


def _unit_index(qubit: int, n: int) -> int:
    """Column index of |e_qubit>."""
    return 1 << (n - 1 - qubit)


def _first_nonzero(column: npt.NDArray[np.complex128], tolerance: float) -> int | None:
    magnitudes = np.abs(column)
    peak = magnitudes.max()
    if peak == 0: return None
    return int(np.flatnonzero(magnitudes > tolerance * peak)[0])


def _phase_exponent(numerator: complex, denominator: complex, phase_tolerance: float, witness: int) -> int:
    """k with numerator/denominator = (−i)^k, or a rejection naming the witness column."""
    if denominator == 0: raise _Rejection(CliffordFailure.NON_UNITARY_SUPPORT_PATTERN, witness, f"Column {witness} has no entry where its predecessor predicts one")

    ratio = numerator / denominator
    modulus = abs(ratio)
    if abs(modulus - 1) > phase_tolerance: raise _Rejection(CliffordFailure.NON_UNITARY_SUPPORT_PATTERN, witness, f"Column {witness} has relative modulus {modulus:.6g}")

    exponent = int(np.rint(np.angle(ratio) / (-np.pi / 2))) % 4
    if abs(ratio / modulus - (-1j) ** exponent) > phase_tolerance:
        raise _Rejection(CliffordFailure.RELATIVE_PHASE_INCONSISTENT, witness, f"Relative phase of column {witness} is not a fourth root of unity")
    return exponent


def _sign_bit(numerator: complex, denominator: complex, phase_tolerance: float, reason: CliffordFailure, witness: int) -> int:
    exponent = _phase_exponent(numerator, denominator, phase_tolerance, witness)
    if exponent & 1: raise _Rejection(reason, witness, f"Column {witness} picks up an imaginary relative phase where ±1 is required")
    return exponent >> 1


def _column0_generators(entries: npt.NDArray[np.complex128], tolerance: float, phase_tolerance: float) -> list[PauliOperator]:
    diagnosis = verify_stabiliser_vector(AmplitudeVector(entries[:, 0]), tolerance, phase_tolerance)
    if not diagnosis.accepted or diagnosis.triple is None:
        raise _Rejection(CliffordFailure.FIRST_COLUMN_NOT_STABILISER, 0, f"Column 0 is not a stabiliser state: {diagnosis.message}")
    return triple_to_check(diagnosis.triple).paulis()


def _conjugated_z(generators: list[PauliOperator], rho: BitMatrix) -> list[PauliOperator]:
    """U_j = P^{μ_j} with μ_j the rows of the inverse of the sign matrix [ρ_i]."""
    try:
        mu = invert(rho)
    except SingularMatrixError as e:
        raise _Rejection(CliffordFailure.NON_UNITARY_SUPPORT_PATTERN, None, f"Column sign pattern is degenerate: {e}") from e
    return [power_product(generators, mu.row(j)) for j in range(rho.row_count)]


def _unit_anchors(entries: npt.NDArray[np.complex128], tolerance: float) -> list[int]:
    """First nonzero row of each column e_j; the only weight-one columns scanned in full."""
    n = entries.shape[0].bit_length() - 1
    anchors: list[int] = []
    for j in range(n):
        column_j = _unit_index(j, n)
        t = _first_nonzero(entries[:, column_j], tolerance)
        if t is None: raise _Rejection(CliffordFailure.NON_UNITARY_SUPPORT_PATTERN, column_j, f"Column {column_j} is zero")
        anchors.append(t)
    return anchors


def _conjugated_x(entries: npt.NDArray[np.complex128], us: list[PauliOperator], anchors: list[int], phase_tolerance: float) -> list[PauliOperator]:
    """
    V_i = κ_i W_i U^{v_i}.

    W_i has the commutation pattern of X_i against the U_j and comes from a
    right inverse of the (q | p) rows of U. κ_i compares column e_i with W_i
    applied to column 0; bit j of v_i compares column e_i + e_j with κ_i W_i
    applied to column e_j. Columns e_i + e_j are read at a single row, the
    anchor of column e_j shifted by the X part of W_i.
    """
    n = len(us)
    u_matrix = BitMatrix.from_vectors([u.q.concat(u.p) for u in us], 2 * n)
    try:
        inverse = right_pseudoinverse(u_matrix)
    except RowsDependentError as e:
        raise _Rejection(CliffordFailure.NON_UNITARY_SUPPORT_PATTERN, None, f"Conjugated Z operators are dependent: {e}") from e

    vs: list[PauliOperator] = []
    for i in range(n):
        alpha, beta = inverse.column(i).split(n)
        w = PauliOperator.hermitian(q=beta, p=alpha)
        column_i = _unit_index(i, n)

        t = anchors[i]
        kappa = _phase_exponent(complex(entries[t, column_i]), applied_entry(w, entries[:, 0], t), phase_tolerance, column_i)
        scaled_w = w.scaled(kappa)
        shift = index_of(scaled_w.q)

        v_bits: list[int] = []
        for j in range(n):
            target = column_i ^ _unit_index(j, n)
            row = anchors[j] ^ shift
            predicted = applied_entry(scaled_w, entries[:, _unit_index(j, n)], row)
            v_bits.append(_sign_bit(complex(entries[row, target]), predicted, phase_tolerance, CliffordFailure.RELATIVE_PHASE_INCONSISTENT, target))

        v = multiply(scaled_w, power_product(us, BitVector.from_list(v_bits)))
        if not v.is_hermitian_order_two(): raise _Rejection(CliffordFailure.CANDIDATE_V_NOT_HERMITIAN, column_i, f"Candidate V_{i + 1} = {v} is not Hermitian")
        vs.append(v)

    return vs


def matrix_to_tableau(c: CliffordMatrix, tolerance: float | None = None, phase_tolerance: float | None = None) -> Tableau:
    """
    Extract the tableau of a trusted Clifford matrix.

    Only columns 0, e_i and e_i + e_j are read; the generator signs on column e_j
    are taken from its first nonzero entry alone. Untrusted input belongs in
    verify_clifford_matrix.

    Raises:
        ExtractionFailedError: If any step meets an inconsistency
    """
    tolerance = tolerance if tolerance is not None else settings.ZERO_TOLERANCE
    phase_tolerance = phase_tolerance if phase_tolerance is not None else settings.PHASE_TOLERANCE
    entries = c.entries
    n = c.n

    try:
        generators = _column0_generators(entries, tolerance, phase_tolerance)

        anchors = _unit_anchors(entries, tolerance)
        rho_rows = [[0] * n for _ in range(n)]
        for j, t in enumerate(anchors):
            column_j = _unit_index(j, n)
            for i, generator in enumerate(generators):
                rho_rows[i][j] = _sign_bit(applied_entry(generator, entries[:, column_j], t), complex(entries[t, column_j]), phase_tolerance, CliffordFailure.COLUMN_NOT_STABILISED, column_j)

        us = _conjugated_z(generators, BitMatrix.from_lists(rho_rows, col_count=n))
        vs = _conjugated_x(entries, us, anchors, phase_tolerance)
    except _Rejection as e:
        logger.error(f"Tableau extraction failed ({e.reason.value}): {e.message}")
        raise ExtractionFailedError(f"{e.reason.value}: {e.message}") from e

    tableau = Tableau(n, tuple(TableauRow(u, v) for u, v in zip(us, vs)))
    logger.info(f"Extracted tableau of a {n}-qubit Clifford matrix")
    return tableau


def _column_signs(entries: npt.NDArray[np.complex128], generator: PauliOperator, scale: npt.NDArray[np.float64], tolerance: float) -> tuple[npt.NDArray[np.int64], npt.NDArray[np.bool_]]:
    """
    Sign bits s_z with generator·C|z> = (−1)^{s_z} C|z>, and the mask of
    columns that are not ±1 eigenvectors of the generator.
    """
    applied = apply_array(generator, entries)
    plus = np.abs(applied - entries).max(axis=0) <= tolerance * scale
    minus = np.abs(applied + entries).max(axis=0) <= tolerance * scale
    return (~plus).astype(np.int64), ~(plus | minus)


def _walk_columns(entries: npt.NDArray[np.complex128], vs: list[PauliOperator], tolerance: float) -> None:
    """Predict one tracked entry of every column from its Gray-code predecessor."""
    n = len(vs)
    scale = float(np.abs(entries).max())
    tracked = _first_nonzero(entries[:, 0], tolerance)
    if tracked is None: raise _Rejection(CliffordFailure.NON_UNITARY_SUPPORT_PATTERN, 0, "Column 0 is zero")
    value = complex(entries[tracked, 0])

    failures: list[int] = []
    for codeword, flipped_bit in gray_sequence(n):
        if flipped_bit is not None:
            v = vs[n - 1 - flipped_bit]
            value = _tracked_step(v, tracked, value)
            tracked ^= index_of(v.q)
        column = index_of(codeword)
        if abs(entries[tracked, column] - value) > tolerance * scale: failures.append(column)

    if failures:
        witness = min(failures)
        raise _Rejection(CliffordFailure.RELATIVE_PHASE_INCONSISTENT, witness, f"Column {witness} does not match the phase predicted from its neighbours")


def _tracked_step(v: PauliOperator, index: int, value: complex) -> complex:
    """Entry of V|column> at index XOR q given the entry at index."""
    return v.phase * (-1 if (index & index_of(v.p)).bit_count() & 1 else 1) * value


def verify_clifford_matrix(m: CliffordMatrix, tolerance: float | None = None, phase_tolerance: float | None = None) -> CliffordDiagnosis:
    """
    Decide whether m is a Clifford gate up to global phase.

    Every column is checked against every generator of column 0's stabiliser
    group, candidate V_i are checked for Hermiticity and commutation, and all
    columns are compared with the phases the V_i predict along a Gray-code walk.
    The witness is the lowest failing column where a column is at fault.

    Args:
        m: Arbitrary square matrix of dimension 2^n
        tolerance: Relative zero threshold (default settings.ZERO_TOLERANCE)
        phase_tolerance: Allowed distance from the fourth roots of unity (default settings.PHASE_TOLERANCE)

    Returns:
        Diagnosis carrying the tableau on acceptance
    """
    tolerance = tolerance if tolerance is not None else settings.ZERO_TOLERANCE
    phase_tolerance = phase_tolerance if phase_tolerance is not None else settings.PHASE_TOLERANCE
    entries = m.entries
    n = m.n

    try:
        norm = float(np.linalg.norm(entries[:, 0]))
        if abs(norm - 1) > phase_tolerance: raise _Rejection(CliffordFailure.NON_UNITARY_SUPPORT_PATTERN, 0, f"Column 0 has norm {norm:.6g}")
        generators = _column0_generators(entries, tolerance, phase_tolerance)

        labels = np.arange(1 << n, dtype=np.int64)
        scale = np.abs(entries).max(axis=0)
        zero = scale == 0
        unstabilised = np.zeros(1 << n, dtype=bool)
        rho_rows: list[BitVector] = []
        for generator in generators:
            signs, off_eigenspace = _column_signs(entries, generator, scale, tolerance)
            rho = BitVector.from_list([int(signs[_unit_index(j, n)]) for j in range(n)])
            unstabilised |= off_eigenspace | (signs != parity(labels & index_of(rho)))
            rho_rows.append(rho)

        failing = np.flatnonzero(zero | unstabilised)
        if failing.size:
            witness = int(failing[0])
            if zero[witness]: raise _Rejection(CliffordFailure.NON_UNITARY_SUPPORT_PATTERN, witness, f"Column {witness} is zero")
            raise _Rejection(CliffordFailure.COLUMN_NOT_STABILISED, witness, f"Column {witness} is not stabilised up to a label-linear sign by the generators of column 0")

        us = _conjugated_z(generators, BitMatrix.from_vectors(rho_rows, n))
        vs = _conjugated_x(entries, us, _unit_anchors(entries, tolerance), phase_tolerance)
        for i in range(n):
            for j in range(i + 1, n):
                if not commutes(vs[i], vs[j]): raise _Rejection(CliffordFailure.CANDIDATE_V_NOT_COMMUTING, None, f"Candidates V_{i + 1} and V_{j + 1} anticommute")

        _walk_columns(entries, vs, tolerance)

        tableau = Tableau(n, tuple(TableauRow(u, v) for u, v in zip(us, vs)))
        violation = tableau_violation(tableau)
        if violation: raise _Rejection(CliffordFailure.CANDIDATE_V_NOT_COMMUTING, None, violation)
    except _Rejection as e:
        logger.warning(f"Matrix rejected ({e.reason.value}): {e.message}")
        return CliffordDiagnosis.reject(e.reason, e.witness, e.message)

    logger.debug(f"Accepted {n}-qubit Clifford matrix")
    return CliffordDiagnosis.accept(tableau)


def tableau_to_matrix(t: Tableau) -> CliffordMatrix:
    """
    Build the Clifford matrix of a tableau, C|z> = V^z |u0>.

    |u0> is the +1 eigenvector of the U_i, obtained from their check matrix;
    columns are filled in Gray-code order with one Pauli application each.
    The global phase makes the first nonzero entry of column 0 positive real.

    Raises:
        InvalidTableauError: If the tableau violates the conjugate-tuple relations
    """
    violation = tableau_violation(t)
    if violation: raise InvalidTableauError(violation)

    n = t.n
    u0 = check_to_amplitudes(CheckMatrix.from_paulis(t.us)).entries
    first = _first_nonzero(u0, settings.ZERO_TOLERANCE)
    if first is None: raise InvalidTableauError("Stabiliser vector of the U operators is zero")
    u0 = u0 * (abs(u0[first]) / u0[first])

    entries = np.zeros((1 << n, 1 << n), dtype=np.complex128)
    column = u0
    vs = t.vs
    for codeword, flipped_bit in gray_sequence(n):
        if flipped_bit is not None: column = apply_array(vs[n - 1 - flipped_bit], column)
        entries[:, index_of(codeword)] = column

    logger.debug(f"Synthesised {n}-qubit matrix from tableau")
    return CliffordMatrix(entries)
