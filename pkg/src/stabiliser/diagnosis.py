"""Verdict records returned by the verification entry points."""
from dataclasses import dataclass
from enum import Enum

from src.stabiliser.types import AffineSubspaceTriple


class Verdict(str, Enum):
    ACCEPTED = "accepted"
    REJECTED = "rejected"


class StabiliserFailure(str, Enum):
    ZERO_VECTOR = "zero_vector"
    SUPPORT_SIZE_NOT_POWER_OF_TWO = "support_size_not_power_of_two"
    SUPPORT_NOT_AFFINE = "support_not_affine"
    OFF_UNIT_CIRCLE = "amplitudes_off_unit_circle"
    PHASE_OFF_GRID = "amplitude_phase_off_grid"
    INCONSISTENT_WITH_FORM = "amplitude_inconsistent_with_form"


@dataclass(frozen=True)
class StabiliserDiagnosis:
    """
    Outcome of verifying an amplitude vector.

    On acceptance triple and global_factor reconstruct the input exactly; on
    rejection failure_reason is set and witness names the offending basis index
    where one exists.
    """

    verdict: Verdict
    failure_reason: StabiliserFailure | None = None
    witness: int | None = None
    message: str = ""
    triple: AffineSubspaceTriple | None = None
    global_factor: complex | None = None

    def __post_init__(self) -> None:
        if self.verdict is Verdict.REJECTED and self.failure_reason is None: raise ValueError("Rejected diagnosis requires a failure reason")

    @property
    def accepted(self) -> bool: return self.verdict is Verdict.ACCEPTED

    @classmethod
    def accept(cls, triple: AffineSubspaceTriple, global_factor: complex) -> "StabiliserDiagnosis":
        return cls(Verdict.ACCEPTED, triple=triple, global_factor=global_factor)

    @classmethod
    def reject(cls, reason: StabiliserFailure, witness: int | None = None, message: str = "") -> "StabiliserDiagnosis":
        return cls(Verdict.REJECTED, failure_reason=reason, witness=witness, message=message)
