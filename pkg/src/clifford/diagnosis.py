"""Verdict record for Clifford-matrix verification."""
from dataclasses import dataclass
from enum import Enum

from src.clifford.tableau import Tableau
from src.stabiliser import Verdict


class CliffordFailure(str, Enum):
    FIRST_COLUMN_NOT_STABILISER = "first_column_not_stabiliser"
    COLUMN_NOT_STABILISED = "column_not_stabilised"
    CANDIDATE_V_NOT_COMMUTING = "candidate_v_not_commuting"
    CANDIDATE_V_NOT_HERMITIAN = "candidate_v_not_hermitian"
    RELATIVE_PHASE_INCONSISTENT = "relative_phase_inconsistent"
    NON_UNITARY_SUPPORT_PATTERN = "non_unitary_support_pattern"


@dataclass(frozen=True)
class CliffordDiagnosis:
    """Outcome of verifying a dense matrix; witness is a column index."""

    verdict: Verdict
    failure_reason: CliffordFailure | None = None
    witness: int | None = None
    message: str = ""
    tableau: Tableau | None = None

    def __post_init__(self) -> None:
        if self.verdict is Verdict.REJECTED and self.failure_reason is None: raise ValueError("Rejected diagnosis requires a failure reason")

    @property
    def accepted(self) -> bool: return self.verdict is Verdict.ACCEPTED

    @classmethod
    def accept(cls, tableau: Tableau) -> "CliffordDiagnosis": return cls(Verdict.ACCEPTED, tableau=tableau)

    @classmethod
    def reject(cls, reason: CliffordFailure, witness: int | None = None, message: str = "") -> "CliffordDiagnosis":
        return cls(Verdict.REJECTED, failure_reason=reason, witness=witness, message=message)
