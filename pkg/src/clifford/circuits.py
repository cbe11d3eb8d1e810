"""
H / S / CNOT circuits: exact tableau updates, dense matrices and seeded random instances.

Conjugation rules on X^q Z^p with phase exponent k of (−i):
    H_a:        swap q_a and p_a; k += 2 when both are set (HXZH = ZX = −XZ)
    S_a:        if q_a: p_a ^= 1 and k += 3 (SXS* = Y = i·XZ)
    CNOT(a, b): q_b ^= q_a, p_a ^= p_b
"""
import logging
from typing import NamedTuple, Sequence

import numpy as np
import numpy.typing as npt

from src.clifford.tableau import CliffordMatrix, Tableau, TableauRow
from src.f2 import BitVector
from src.pauli import OracleLimitError, PauliOperator
from src.stabiliser import CheckMatrix
from src.utils import settings

logger: logging.Logger = logging.getLogger(__name__)

GATE_NAMES: tuple[str, ...] = ("H", "S", "CNOT")

_H = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2)
_S = np.array([[1, 0], [0, 1j]], dtype=np.complex128)


class Gate(NamedTuple):
    name: str
    qubits: tuple[int, ...]  # (target,) or (control, target)

    def __str__(self) -> str: return f"{self.name}({', '.join(str(q + 1) for q in self.qubits)})"


def _with_bit(bits: int, position: int, length: int, value: int) -> int:
    mask = 1 << (length - 1 - position)
    return (bits | mask) if value else (bits & ~mask)


def conjugate(pauli: PauliOperator, gate: Gate) -> PauliOperator:
    """G P G* for one gate, exactly."""
    n = pauli.n
    q, p, exponent = pauli.q.bits, pauli.p.bits, pauli.phase_exponent

    if gate.name == "H":
        (a,) = gate.qubits
        qa, pa = pauli.q[a], pauli.p[a]
        if qa and pa: exponent += 2
        q, p = _with_bit(q, a, n, pa), _with_bit(p, a, n, qa)
    elif gate.name == "S":
        (a,) = gate.qubits
        if pauli.q[a]:
            p ^= 1 << (n - 1 - a)
            exponent += 3
    elif gate.name == "CNOT":
        control, target = gate.qubits
        q = _with_bit(q, target, n, pauli.q[target] ^ pauli.q[control])
        p = _with_bit(p, control, n, pauli.p[control] ^ pauli.p[target])
    else:
        raise ValueError(f"Unknown gate {gate.name!r}")

    return PauliOperator.from_exponent(BitVector(q, n), BitVector(p, n), exponent)


def circuit_tableau(n: int, gates: Sequence[Gate]) -> Tableau:
    """Tableau of G_m ... G_1 for gates applied in list order."""
    rows = list(Tableau.identity(n).rows)
    for gate in gates:
        rows = [TableauRow(conjugate(row.u, gate), conjugate(row.v, gate)) for row in rows]
    return Tableau(n, tuple(rows))


def gate_matrix(n: int, gate: Gate) -> npt.NDArray[np.complex128]:
    """Dense 2^n x 2^n matrix of one gate; qubit 0 is the most significant index bit."""
    if gate.name in ("H", "S"):
        (a,) = gate.qubits
        single = _H if gate.name == "H" else _S
        return np.kron(np.kron(np.eye(1 << a), single), np.eye(1 << (n - 1 - a)))

    control, target = gate.qubits
    indices = np.arange(1 << n)
    control_set = (indices >> (n - 1 - control)) & 1
    images = indices ^ (control_set << (n - 1 - target))
    dense = np.zeros((1 << n, 1 << n), dtype=np.complex128)
    dense[images, indices] = 1
    return dense


def circuit_matrix(n: int, gates: Sequence[Gate], max_qubits: int | None = None) -> CliffordMatrix:
    """
    Dense product G_m ... G_1.

    Raises:
        OracleLimitError: If n exceeds max_qubits (default settings.DENSE_EMIT_MAX_QUBITS)
    """
    limit = max_qubits if max_qubits is not None else settings.DENSE_EMIT_MAX_QUBITS
    if n > limit: raise OracleLimitError(f"Refusing to build a dense {n}-qubit matrix (limit {limit})")

    dense = np.eye(1 << n, dtype=np.complex128)
    for gate in gates:
        dense = gate_matrix(n, gate) @ dense
    return CliffordMatrix(dense)


def random_circuit(n: int, rng: np.random.Generator, depth: int | None = None) -> list[Gate]:
    """
    Uniformly random H / S / CNOT sequence.

    Args:
        n: Qubit count (>= 1)
        rng: Seeded generator
        depth: Gate count (default settings.RANDOM_DEPTH_PER_QUBIT * n)
    """
    if n < 1: raise ValueError(f"Qubit count must be positive, got {n}")
    depth = depth if depth is not None else settings.RANDOM_DEPTH_PER_QUBIT * n
    names = GATE_NAMES if n > 1 else GATE_NAMES[:2]

    gates: list[Gate] = []
    for _ in range(depth):
        name = names[int(rng.integers(len(names)))]
        if name == "CNOT":
            control, target = rng.choice(n, size=2, replace=False)
            gates.append(Gate(name, (int(control), int(target))))
        else:
            gates.append(Gate(name, (int(rng.integers(n)),)))
    return gates


def random_check_matrix(n: int, rng: np.random.Generator, depth: int | None = None) -> CheckMatrix:
    """Check matrix of a random stabiliser state: the conjugated Z_i of a random circuit with random signs."""
    tableau = circuit_tableau(n, random_circuit(n, rng, depth))
    signs = rng.integers(2, size=n)
    generators = [PauliOperator(u.q, u.p, u.c ^ int(sign), u.d) for u, sign in zip(tableau.us, signs)]
    return CheckMatrix.from_paulis(generators)
