import logging

import numpy as np

from src.cli.schemas import GATE_KINDS, STATE_KINDS, Document, DocumentMetadata
from src.cli.services.codec import Codec
from src.cli.services.converter import Converter
from src.clifford import circuit_matrix, circuit_tableau, random_check_matrix, random_circuit
from src.utils import settings

logger: logging.Logger = logging.getLogger(__name__)


class InstanceGenerator:
    """Seeded random stabiliser states and Clifford gates."""

    @staticmethod
    def random_document(kind: str, n: int, seed: int, depth: int | None = None, emit: str | None = None) -> Document:
        """
        Generate a random instance; identical arguments give identical documents.

        Args:
            kind: "state" or "gate"
            n: Qubit count (>= 1)
            seed: Generator seed
            depth: Circuit depth (default settings.RANDOM_DEPTH_PER_QUBIT * n)
            emit: Output kind (default check_matrix for states, tableau for gates)

        Raises:
            ValueError: For unknown kinds, n < 1, or a dense emission beyond the limit
        """
        if n < 1: raise ValueError(f"Qubit count must be positive, got {n}")
        depth = depth if depth is not None else settings.RANDOM_DEPTH_PER_QUBIT * n
        rng = np.random.default_rng(seed)

        if kind == "state":
            emit = emit or "check_matrix"
            if emit not in STATE_KINDS: raise ValueError(f"A state cannot be emitted as {emit}")
            metadata = DocumentMetadata(seed=seed, generator=f"random H/S/CNOT circuit of depth {depth} applied to Z_i, random signs")
            document = Codec.to_document(random_check_matrix(n, rng, depth), metadata)
            return document if emit == "check_matrix" else Converter.convert(document, emit)

        if kind == "gate":
            emit = emit or "tableau"
            if emit not in GATE_KINDS: raise ValueError(f"A gate cannot be emitted as {emit}")
            gates = random_circuit(n, rng, depth)
            metadata = DocumentMetadata(seed=seed, generator=f"random H/S/CNOT circuit of depth {depth}")
            if emit == "tableau": return Codec.to_document(circuit_tableau(n, gates), metadata)
            if n > settings.DENSE_EMIT_MAX_QUBITS: raise ValueError(f"Dense matrices are emitted only up to {settings.DENSE_EMIT_MAX_QUBITS} qubits")
            return Codec.to_document(circuit_matrix(n, gates), metadata)

        raise ValueError(f"Unknown instance kind {kind!r}; expected 'state' or 'gate'")
