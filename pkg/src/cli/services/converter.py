import logging
import time
from collections import deque
from typing import Callable

import numpy as np

from src.cli.schemas import Document, DocumentMetadata
from src.cli.services.codec import Codec, LibraryObject
from src.clifford import CliffordMatrix, Tableau, tableau_to_matrix, verify_clifford_matrix
from src.monitoring import metrics
from src.pauli import AmplitudeVector
from src.stabiliser import AffineSubspaceTriple, CheckMatrix, StabiliserFailure, check_to_triple, triple_to_amplitudes, triple_to_check, verify_stabiliser_vector
from src.utils import settings

logger: logging.Logger = logging.getLogger(__name__)


class NoConversionPathError(ValueError):
    """Raised when the target kind is unreachable from the source kind."""


class VerificationRejectedError(Exception):
    """Raised when the verification embedded in a conversion rejects the input."""

    def __init__(self, kind: str, reason: str, witness: int | None, message: str):
        super().__init__(f"{kind} input rejected ({reason}): {message}")
        self.kind = kind
        self.reason = reason
        self.witness = witness


def _amplitudes_to_triple(v: AmplitudeVector) -> AffineSubspaceTriple:
    diagnosis = verify_stabiliser_vector(v)
    if not diagnosis.accepted or diagnosis.triple is None:
        reason = diagnosis.failure_reason.value if diagnosis.failure_reason else "rejected"
        raise VerificationRejectedError("amplitudes", reason, diagnosis.witness, diagnosis.message)
    return diagnosis.triple


def _matrix_to_tableau(m: CliffordMatrix) -> Tableau:
    diagnosis = verify_clifford_matrix(m)
    if not diagnosis.accepted or diagnosis.tableau is None:
        reason = diagnosis.failure_reason.value if diagnosis.failure_reason else "rejected"
        raise VerificationRejectedError("matrix", reason, diagnosis.witness, diagnosis.message)
    return diagnosis.tableau


def _tableau_to_matrix(t: Tableau) -> CliffordMatrix:
    if t.n > settings.DENSE_EMIT_MAX_QUBITS: raise ValueError(f"Refusing to emit a dense {t.n}-qubit matrix (limit {settings.DENSE_EMIT_MAX_QUBITS})")
    return tableau_to_matrix(t)


# one library operation per edge; longer conversions compose edges
CONVERSION_EDGES: dict[tuple[str, str], Callable[..., LibraryObject]] = {
    ("amplitudes", "triple"): _amplitudes_to_triple,
    ("triple", "amplitudes"): triple_to_amplitudes,
    ("triple", "check_matrix"): triple_to_check,
    ("check_matrix", "triple"): check_to_triple,
    ("matrix", "tableau"): _matrix_to_tableau,
    ("tableau", "matrix"): _tableau_to_matrix,
}


def _canonical_scale(entries: np.ndarray) -> tuple[np.ndarray, complex]:
    """(unit vector with first nonzero entry positive real, λ with entries = λ · that vector)."""
    magnitudes = np.abs(entries)
    if magnitudes.max() == 0: raise VerificationRejectedError("amplitudes", StabiliserFailure.ZERO_VECTOR.value, None, "Amplitude vector is zero")
    first = int(np.flatnonzero(magnitudes > settings.ZERO_TOLERANCE * magnitudes.max())[0])
    scale = complex(np.linalg.norm(entries) * entries[first] / magnitudes[first])
    return entries / scale, scale


class Converter:
    """Routes documents through the conversion graph of the library."""

    @staticmethod
    def conversion_path(source: str, target: str) -> list[str]:
        """
        Shortest chain of kinds from source to target.

        Raises:
            NoConversionPathError: If target is unreachable
        """
        previous: dict[str, str | None] = {source: None}
        queue = deque([source])
        while queue:
            kind = queue.popleft()
            if kind == target: break
            for (start, end) in CONVERSION_EDGES:
                if start == kind and end not in previous:
                    previous[end] = kind
                    queue.append(end)

        if target not in previous: raise NoConversionPathError(f"No conversion from {source} to {target}")
        path = [target]
        while (step := previous[path[-1]]) is not None:
            path.append(step)
        return path[::-1]

    @staticmethod
    def convert(document: Document, target: str) -> Document:
        """
        Convert a document to another kind.

        Amplitude and matrix inputs are verified on the way. The scalar that a
        conversion strips is kept in metadata (global_factor for states,
        global_phase for gates) and reapplied when converting back.

        Raises:
            NoConversionPathError: If target is unreachable from the document kind
            VerificationRejectedError: If embedded verification rejects the input
            ValueError: If the payload violates a library invariant
        """
        source = document.kind
        path = Converter.conversion_path(source, target)
        metadata = document.metadata.model_copy()
        obj = Codec.to_object(document)
        start = time.perf_counter()

        try:
            if isinstance(obj, AmplitudeVector) and target != source:
                _, scale = _canonical_scale(obj.entries)
                metadata.global_factor = (scale.real, scale.imag)
            original_matrix = obj if isinstance(obj, CliffordMatrix) else None

            for start_kind, end_kind in zip(path, path[1:]):
                obj = CONVERSION_EDGES[(start_kind, end_kind)](obj)
                logger.debug(f"Converted {start_kind} -> {end_kind}")

            if isinstance(obj, AmplitudeVector) and source != "amplitudes":
                canonical, _ = _canonical_scale(obj.entries)
                if metadata.global_factor is not None:
                    canonical = canonical * complex(*metadata.global_factor)
                    metadata.global_factor = None
                obj = AmplitudeVector(canonical)

            if original_matrix is not None and isinstance(obj, Tableau):
                synthesised = tableau_to_matrix(obj)
                row = int(np.argmax(np.abs(original_matrix.entries[:, 0])))
                phase = complex(original_matrix.entries[row, 0] / synthesised.entries[row, 0])
                phase /= abs(phase)
                metadata.global_phase = (phase.real, phase.imag)
            elif isinstance(obj, CliffordMatrix) and source != "matrix" and metadata.global_phase is not None:
                obj = CliffordMatrix(obj.entries * complex(*metadata.global_phase))
                metadata.global_phase = None
        except VerificationRejectedError:
            metrics.conversions_total.labels(source=source, target=target, status="rejected").inc()
            raise
        except ValueError:
            metrics.conversions_total.labels(source=source, target=target, status="error").inc()
            raise

        metrics.operation_duration_seconds.labels(operation=f"convert_{source}_to_{target}").observe(time.perf_counter() - start)
        metrics.conversions_total.labels(source=source, target=target, status="success").inc()
        logger.info(f"Converted {source} document on {document.n} qubits to {target} via {' -> '.join(path)}")
        return Codec.to_document(obj, metadata)
