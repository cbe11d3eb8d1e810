import logging
import time

from src.cli.schemas import AmplitudesDocument, Document, MatrixDocument, VerificationReport
from src.cli.services.codec import Codec
from src.clifford import CliffordMatrix, verify_clifford_matrix
from src.monitoring import metrics
from src.oracle import brute_is_clifford, brute_is_stabiliser
from src.pauli import AmplitudeVector
from src.stabiliser import triple_to_check, verify_stabiliser_vector
from src.utils import settings

logger: logging.Logger = logging.getLogger(__name__)


class Verifier:
    """Runs the fast verification on amplitude or matrix documents, optionally cross-checked by the oracle."""

    @staticmethod
    def verify(document: Document, use_oracle: bool = False) -> VerificationReport:
        """
        Verify a document.

        Args:
            document: Amplitudes or matrix document
            use_oracle: Also run the brute-force check when within its qubit limit

        Returns:
            Report with verdict, diagnosis, certificate and oracle agreement

        Raises:
            ValueError: For document kinds that cannot be verified
        """
        start = time.perf_counter()
        match document:
            case AmplitudesDocument():
                report = Verifier._verify_state(document, use_oracle)
            case MatrixDocument():
                report = Verifier._verify_gate(document, use_oracle)
            case _:
                raise ValueError(f"Only amplitudes and matrix documents can be verified, got {document.kind}")

        metrics.operation_duration_seconds.labels(operation=f"verify_{document.kind}").observe(time.perf_counter() - start)
        metrics.verifications_total.labels(kind=document.kind, verdict=report.verdict).inc()
        if report.oracle_agrees is False:
            metrics.oracle_disagreements_total.labels(kind=document.kind).inc()
            logger.error(f"Oracle disagrees with the fast verdict {report.verdict} on a {document.n}-qubit {document.kind} document")
        return report

    @staticmethod
    def _verify_state(document: AmplitudesDocument, use_oracle: bool) -> VerificationReport:
        v = Codec.to_object(document)
        assert isinstance(v, AmplitudeVector)
        diagnosis = verify_stabiliser_vector(v)
        report = VerificationReport(
            kind="amplitudes",
            n=document.n,
            verdict=diagnosis.verdict.value,
            failure_reason=diagnosis.failure_reason.value if diagnosis.failure_reason else None,
            witness=diagnosis.witness,
            message=diagnosis.message,
            certificate=Codec.to_document(triple_to_check(diagnosis.triple)) if diagnosis.triple else None,
        )
        if not use_oracle: return report

        if v.n > settings.ORACLE_MAX_STATE_QUBITS:
            logger.warning(f"Skipping oracle for {v.n} qubits (limit {settings.ORACLE_MAX_STATE_QUBITS})")
            return report.model_copy(update={"oracle_verdict": "skipped"})
        oracle_accepts = brute_is_stabiliser(v)
        return report.model_copy(update={"oracle_verdict": "accepted" if oracle_accepts else "rejected", "oracle_agrees": oracle_accepts == diagnosis.accepted})

    @staticmethod
    def _verify_gate(document: MatrixDocument, use_oracle: bool) -> VerificationReport:
        m = Codec.to_object(document)
        assert isinstance(m, CliffordMatrix)
        diagnosis = verify_clifford_matrix(m)
        report = VerificationReport(
            kind="matrix",
            n=document.n,
            verdict=diagnosis.verdict.value,
            failure_reason=diagnosis.failure_reason.value if diagnosis.failure_reason else None,
            witness=diagnosis.witness,
            message=diagnosis.message,
            certificate=Codec.to_document(diagnosis.tableau) if diagnosis.tableau else None,
        )
        if not use_oracle: return report

        if m.n > settings.ORACLE_MAX_GATE_QUBITS:
            logger.warning(f"Skipping oracle for {m.n} qubits (limit {settings.ORACLE_MAX_GATE_QUBITS})")
            return report.model_copy(update={"oracle_verdict": "skipped"})
        oracle_accepts = brute_is_clifford(m)
        return report.model_copy(update={"oracle_verdict": "accepted" if oracle_accepts else "rejected", "oracle_agrees": oracle_accepts == diagnosis.accepted})
