"""
Amplitude vectors to and from affine-subspace triples.

The support of a stabiliser state is an affine space z0 + V. Shifting it by z0
and sorting puts the span of the basis read off at positions 1, 2, 4, ... in
exactly the order produced by the doubling enumeration below, which is how the
support is both parameterised and checked.
"""
import logging

import numpy as np
import numpy.typing as npt

from src.f2 import BitMatrix, BitVector
from src.pauli import AmplitudeVector, index_of, parity
from src.stabiliser.diagnosis import StabiliserDiagnosis, StabiliserFailure
from src.stabiliser.types import AffineSubspaceTriple, NotAStabiliserStateError
from src.utils import settings

logger: logging.Logger = logging.getLogger(__name__)

# i^e for e in Z_4
FOURTH_ROOTS: npt.NDArray[np.complex128] = np.array([1, 1j, -1, -1j], dtype=np.complex128)


def span_labels(basis: list[int]) -> npt.NDArray[np.int64]:
    """All 2^k combinations of the packed basis vectors; position a selects basis[i] when bit i of a is set."""
    labels = np.zeros(1, dtype=np.int64)
    for vector in basis:
        labels = np.concatenate([labels, labels ^ vector])
    return labels


def form_exponents(qform: BitMatrix, lmap: BitVector) -> npt.NDArray[np.int64]:
    """
    Exponent e(α) = ℓ(α) + 2Q(α) mod 4 of i for every coordinate vector α.

    Positions follow span_labels: bit i of the position is α_i.
    """
    k = lmap.length
    lpar = np.zeros(1, dtype=np.int64)
    qpar = np.zeros(1, dtype=np.int64)
    for i in range(k):
        column_mask = sum(1 << j for j in range(i) if qform.entry(j, i))
        alpha = np.arange(lpar.size, dtype=np.int64)
        lpar = np.concatenate([lpar, lpar ^ lmap[i]])
        qpar = np.concatenate([qpar, qpar ^ qform.entry(i, i) ^ parity(alpha & column_mask)])
    return (lpar + 2 * qpar) % 4


def triple_to_amplitudes(t: AffineSubspaceTriple) -> AmplitudeVector:
    """
    Evaluate Σ_α (−1)^{Q(α)} i^{ℓ(α)} |α·basis + z0>, normalised.

    The amplitude at z0 is +1/sqrt(2^k).
    """
    labels = span_labels([index_of(vector) for vector in t.basis]) ^ index_of(t.shift)
    entries = np.zeros(1 << t.n, dtype=np.complex128)
    entries[labels] = FOURTH_ROOTS[form_exponents(t.qform, t.lmap)] / np.sqrt(2.0 ** t.k)
    return AmplitudeVector(entries)


def verify_stabiliser_vector(v: AmplitudeVector, tolerance: float | None = None, phase_tolerance: float | None = None) -> StabiliserDiagnosis:
    """
    Decide whether v is proportional to a stabiliser state.

    Never raises on numerical content; every rejection carries a reason and,
    where one exists, the basis index of an offending amplitude.

    Args:
        v: Arbitrary (possibly unnormalised) vector
        tolerance: Relative zero threshold (default settings.ZERO_TOLERANCE)
        phase_tolerance: Allowed distance from the fourth roots of unity (default settings.PHASE_TOLERANCE)

    Returns:
        Diagnosis; on acceptance it carries the triple and the amplitude at z0
    """
    tolerance = tolerance if tolerance is not None else settings.ZERO_TOLERANCE
    phase_tolerance = phase_tolerance if phase_tolerance is not None else settings.PHASE_TOLERANCE
    entries = v.entries
    n = v.n

    magnitudes = np.abs(entries)
    peak = float(magnitudes.max())
    if peak == 0: return StabiliserDiagnosis.reject(StabiliserFailure.ZERO_VECTOR, message="All amplitudes are zero")

    support = np.flatnonzero(magnitudes > tolerance * peak)
    z0 = int(support[0])
    shifted = np.sort(support ^ z0)
    size = int(shifted.size)
    if size & (size - 1): return StabiliserDiagnosis.reject(StabiliserFailure.SUPPORT_SIZE_NOT_POWER_OF_TWO, message=f"Support has {size} elements")

    k = size.bit_length() - 1
    basis = [int(shifted[1 << i]) for i in range(k)]
    labels = span_labels(basis)
    mismatched = np.flatnonzero(labels != shifted)
    if mismatched.size:
        witness = int(shifted[mismatched[0]]) ^ z0
        return StabiliserDiagnosis.reject(StabiliserFailure.SUPPORT_NOT_AFFINE, witness, f"Support is not an affine space; label {witness} breaks closure")

    factor = complex(entries[z0])
    ratios = entries[labels ^ z0] / factor
    moduli = np.abs(ratios)
    off_circle = np.flatnonzero(np.abs(moduli - 1) > phase_tolerance)
    if off_circle.size:
        witness = int(labels[off_circle[0]]) ^ z0
        return StabiliserDiagnosis.reject(StabiliserFailure.OFF_UNIT_CIRCLE, witness, f"Amplitude at {witness} has relative modulus {moduli[off_circle[0]]:.6g}")

    unit = ratios / moduli
    exponents = np.rint(np.angle(unit) / (np.pi / 2)).astype(np.int64) % 4
    off_grid = np.flatnonzero(np.abs(unit - FOURTH_ROOTS[exponents]) > phase_tolerance)
    if off_grid.size:
        witness = int(labels[off_grid[0]]) ^ z0
        return StabiliserDiagnosis.reject(StabiliserFailure.PHASE_OFF_GRID, witness, f"Relative phase at {witness} is not a fourth root of unity")

    # weight-1 positions give ℓ and the diagonal of Q̃, weight-2 positions the rest
    lmap_bits = [int(exponents[1 << i]) & 1 for i in range(k)]
    qform_rows = [[0] * k for _ in range(k)]
    for i in range(k):
        qform_rows[i][i] = int(exponents[1 << i]) >> 1
    for i in range(k):
        for j in range(i + 1, k):
            exponent = int(exponents[(1 << i) | (1 << j)])
            if exponent & 1 != lmap_bits[i] ^ lmap_bits[j]:
                witness = int(labels[(1 << i) | (1 << j)]) ^ z0
                return StabiliserDiagnosis.reject(StabiliserFailure.INCONSISTENT_WITH_FORM, witness, f"Amplitude at {witness} is not consistent with a linear ℓ")
            qform_rows[i][j] = (exponent >> 1) ^ qform_rows[i][i] ^ qform_rows[j][j]

    qform = BitMatrix.from_lists(qform_rows, col_count=k)
    lmap = BitVector.from_list(lmap_bits)
    inconsistent = np.flatnonzero(form_exponents(qform, lmap) != exponents)
    if inconsistent.size:
        witness = int(labels[inconsistent[0]]) ^ z0
        return StabiliserDiagnosis.reject(StabiliserFailure.INCONSISTENT_WITH_FORM, witness, f"Amplitude at {witness} is not consistent with the extracted Q and ℓ")

    triple = AffineSubspaceTriple(
        n=n,
        basis=tuple(BitVector(vector, n) for vector in basis),
        shift=BitVector(z0, n),
        qform=qform,
        lmap=lmap,
    )
    logger.debug(f"Accepted {n}-qubit vector with support dimension {k}")
    return StabiliserDiagnosis.accept(triple, factor)


def amplitudes_to_triple(v: AmplitudeVector, tolerance: float | None = None, phase_tolerance: float | None = None) -> tuple[AffineSubspaceTriple, complex]:
    """
    Convert amplitudes to a triple plus the global factor.

    global_factor is the amplitude at z0, so v equals global_factor times the
    unnormalised sum Σ (−1)^{Q(α)} i^{ℓ(α)} |α·basis + z0>.

    Raises:
        NotAStabiliserStateError: If v is not proportional to a stabiliser state
    """
    diagnosis = verify_stabiliser_vector(v, tolerance, phase_tolerance)
    if not diagnosis.accepted or diagnosis.triple is None or diagnosis.global_factor is None:
        raise NotAStabiliserStateError(f"{diagnosis.failure_reason.value if diagnosis.failure_reason else 'rejected'}: {diagnosis.message}")
    return diagnosis.triple, diagnosis.global_factor


def scaled_amplitudes(t: AffineSubspaceTriple, global_factor: complex) -> AmplitudeVector:
    """Inverse of amplitudes_to_triple: the original vector from the triple and its global factor."""
    normalised = triple_to_amplitudes(t)
    return AmplitudeVector(normalised.entries * global_factor * np.sqrt(2.0 ** t.k))
