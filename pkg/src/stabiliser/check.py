"""Check matrices to and from affine-subspace triples."""
import logging

from src.f2 import BitMatrix, BitVector, InconsistentSystemError, null_space_basis, rref, solve
from src.pauli import AmplitudeVector, power_product
from src.stabiliser.amplitudes import amplitudes_to_triple, triple_to_amplitudes
from src.stabiliser.types import AffineSubspaceTriple, CheckMatrix, CheckRow, InvalidCheckMatrixError, validate_check_matrix

logger: logging.Logger = logging.getLogger(__name__)


def check_to_triple(m: CheckMatrix) -> AffineSubspaceTriple:
    """
    Convert a check matrix to the triple of the state it stabilises.

    The (q|p) block is brought to reduced echelon form; each reduced row is the
    exact Pauli product of the original rows its transform row selects, so the
    reduced generators describe the same group with correct signs. Rows with a
    nonzero X part give the basis of V, the remaining Z-only rows (ρ_i, γ_i)
    fix the shift through ρ_i·z0 = γ_i.

    Raises:
        InvalidCheckMatrixError: If rows anticommute, are dependent, or the shift system is inconsistent
    """
    validate_check_matrix(m)
    n = m.n
    paulis = m.paulis()
    _, record = rref(m.symplectic_matrix)
    generators = [power_product(paulis, record.transform.row(i)) for i in range(n)]

    k = sum(1 for col in record.pivot_columns if col < n)
    x_rows = generators[:k]
    z_rows = generators[k:]

    try:
        shift = solve(BitMatrix.from_vectors([g.p for g in z_rows], n), BitVector.from_list([g.c for g in z_rows]))
    except InconsistentSystemError as e:
        raise InvalidCheckMatrixError(f"No shift satisfies the Z-type rows: {e}") from e

    lmap_bits = [g.p.dot(g.q) for g in x_rows]
    qform_rows = [[0] * k for _ in range(k)]
    for i, g in enumerate(x_rows):
        qform_rows[i][i] = g.c ^ g.p.dot(g.q + shift)
        for j in range(i + 1, k):
            qform_rows[i][j] = g.p.dot(x_rows[j].q) ^ (lmap_bits[i] & lmap_bits[j])

    triple = AffineSubspaceTriple(
        n=n,
        basis=tuple(g.q for g in x_rows),
        shift=shift,
        qform=BitMatrix.from_lists(qform_rows, col_count=k),
        lmap=BitVector.from_list(lmap_bits),
    )
    logger.debug(f"Check matrix on {n} qubits reduced to support dimension {k}")
    return triple


def _retriangularise(matrix: BitMatrix) -> BitMatrix:
    """Upper-triangular matrix with the same quadratic form: off-diagonal M_ij + M_ji, diagonal kept."""
    size = matrix.row_count
    rows = [[0] * size for _ in range(size)]
    for i in range(size):
        rows[i][i] = matrix.entry(i, i)
        for j in range(i + 1, size):
            rows[i][j] = matrix.entry(i, j) ^ matrix.entry(j, i)
    return BitMatrix.from_lists(rows, col_count=size)


def triple_to_check(t: AffineSubspaceTriple) -> CheckMatrix:
    """
    Convert a triple to a check matrix.

    The basis is row reduced to q_1..q_k; Q̃ and ℓ follow the same change of
    basis T (ℓ' = Tℓ, Q̃' from T Q̃ T^T). Each p_i solves p_i·q_j = (Q̃'+Q̃'^T)_ij + ℓ'_iℓ'_j
    with free components zero, and the kernel of the q_i supplies the Z-type rows.
    Output rows are the k X-type rows followed by the n−k rows (0, ρ_i, γ_i).
    """
    n, k = t.n, t.k
    reduced, record = rref(t.basis_matrix)
    transform = record.transform
    q_rows = reduced.vectors()

    lmap = transform @ t.lmap
    qform = _retriangularise(transform @ t.qform @ transform.transpose())

    rows: list[CheckRow] = []
    for i, q in enumerate(q_rows):
        rhs = [(qform.entry(min(i, j), max(i, j)) if i != j else 0) ^ (lmap[i] & lmap[j]) for j in range(k)]
        p = solve(reduced, BitVector.from_list(rhs))
        normal_sign = p.dot(q + t.shift) ^ qform.entry(i, i)
        rows.append(CheckRow(q, p, normal_sign ^ p.dot(q)))

    for rho in null_space_basis(reduced):
        rows.append(CheckRow(BitVector.zeros(n), rho, rho.dot(t.shift)))

    return CheckMatrix(n, tuple(rows))


def amplitudes_to_check(v: AmplitudeVector) -> CheckMatrix:
    """Amplitudes → triple → check matrix."""
    triple, _ = amplitudes_to_triple(v)
    return triple_to_check(triple)


def check_to_amplitudes(m: CheckMatrix) -> AmplitudeVector:
    """Check matrix → triple → normalised amplitudes."""
    return triple_to_amplitudes(check_to_triple(m))
