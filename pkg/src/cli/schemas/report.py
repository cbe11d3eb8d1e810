from typing import Literal

from pydantic import BaseModel, Field

from src.cli.schemas.document import CheckMatrixDocument, TableauDocument


class VerificationReport(BaseModel):
    """Verdict printed by `stabtool verify`."""

    kind: Literal["amplitudes", "matrix"] = Field(..., description="Kind of the verified document")
    n: int = Field(..., description="Qubit count")
    verdict: Literal["accepted", "rejected"]
    failure_reason: str | None = Field(None, description="Enumerated rejection reason")
    witness: int | None = Field(None, description="Offending basis label or column index")
    message: str = Field("", description="Human-readable diagnosis")
    certificate: CheckMatrixDocument | TableauDocument | None = Field(None, description="Check matrix or tableau on acceptance")
    oracle_verdict: Literal["accepted", "rejected", "skipped"] | None = Field(None, description="Brute-force verdict when requested")
    oracle_agrees: bool | None = Field(None, description="Whether the brute-force verdict matches")

    class Config:
        json_schema_extra = {
            "example": {
                "kind": "amplitudes",
                "n": 1,
                "verdict": "rejected",
                "failure_reason": "amplitude_phase_off_grid",
                "witness": 1,
                "message": "Relative phase at 1 is not a fourth root of unity",
                "oracle_verdict": "rejected",
                "oracle_agrees": True
            }
        }
