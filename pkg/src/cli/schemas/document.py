from typing import Annotated, Any, Literal, Union

from pydantic import BaseModel, Field, TypeAdapter, field_validator, model_validator

from src.pauli import PauliLiteralError, parse_pauli

DocumentKind = Literal["amplitudes", "triple", "check_matrix", "tableau", "matrix"]
STATE_KINDS: tuple[str, ...] = ("amplitudes", "triple", "check_matrix")
GATE_KINDS: tuple[str, ...] = ("matrix", "tableau")

ComplexPair = tuple[float, float]


def _check_bitstring(value: str, length: int, what: str) -> None:
    if len(value) != length: raise ValueError(f"{what} {value!r} has length {len(value)}, expected {length}")
    if any(ch not in "01" for ch in value): raise ValueError(f"{what} {value!r} is not a bitstring")


class DocumentMetadata(BaseModel):
    """Provenance and the global scalar stripped by a conversion."""

    seed: int | None = Field(None, description="Seed of the generator that produced the document")
    generator: str | None = Field(None, description="Description of how the instance was generated")
    global_factor: ComplexPair | None = Field(None, description="Scalar λ with original = λ · canonical normalised state")
    global_phase: ComplexPair | None = Field(None, description="Phase λ with original matrix = λ · synthesised matrix")

    class Config:
        extra = "allow"


class _DocumentBase(BaseModel):
    n: int = Field(..., ge=0, description="Qubit count")
    metadata: DocumentMetadata = Field(default_factory=DocumentMetadata)


class AmplitudesDocument(_DocumentBase):
    """Amplitude vector as [re, im] pairs."""

    kind: Literal["amplitudes"] = "amplitudes"
    payload: list[ComplexPair] = Field(..., description="2^n amplitudes indexed by basis label, qubit 1 most significant")

    @model_validator(mode="after")
    def validate_length(self) -> "AmplitudesDocument":
        if len(self.payload) != 1 << self.n: raise ValueError(f"Amplitude payload has {len(self.payload)} entries, expected {1 << self.n}")
        return self

    class Config:
        json_schema_extra = {
            "example": {"kind": "amplitudes", "n": 1, "payload": [[0.7071067811865476, 0.0], [0.7071067811865476, 0.0]]}
        }


class TriplePayload(BaseModel):
    basis: list[str] = Field(..., description="Basis of V as bitstrings")
    shift: str = Field(..., description="Shift z0")
    qform: list[str] = Field(..., description="Row i of the upper-triangular form, entries j >= i")
    lmap: str = Field(..., description="ℓ on the basis vectors")


class TripleDocument(_DocumentBase):
    kind: Literal["triple"] = "triple"
    payload: TriplePayload

    @model_validator(mode="after")
    def validate_dimensions(self) -> "TripleDocument":
        k = len(self.payload.basis)
        if k > self.n: raise ValueError(f"{k} basis vectors for {self.n} qubits")
        _check_bitstring(self.payload.shift, self.n, "Shift")
        for vector in self.payload.basis:
            _check_bitstring(vector, self.n, "Basis vector")
        if len(self.payload.qform) != k: raise ValueError(f"Quadratic form has {len(self.payload.qform)} rows, expected {k}")
        for i, row in enumerate(self.payload.qform):
            _check_bitstring(row, k - i, f"Quadratic form row {i}")
        _check_bitstring(self.payload.lmap, k, "Linear map")
        return self


class CheckMatrixDocument(_DocumentBase):
    """Rows q|p|c as bitstrings of length 2n+1."""

    kind: Literal["check_matrix"] = "check_matrix"
    payload: list[str]

    @model_validator(mode="after")
    def validate_rows(self) -> "CheckMatrixDocument":
        if len(self.payload) != self.n: raise ValueError(f"Check matrix has {len(self.payload)} rows, expected {self.n}")
        for row in self.payload:
            _check_bitstring(row, 2 * self.n + 1, "Check-matrix row")
        return self

    class Config:
        json_schema_extra = {"example": {"kind": "check_matrix", "n": 2, "payload": ["11000", "00110"]}}


class TableauRowPayload(BaseModel):
    u: str = Field(..., description="Pauli literal of C Z_i C*")
    v: str = Field(..., description="Pauli literal of C X_i C*")

    @field_validator("u", "v")
    @classmethod
    def validate_literal(cls, value: str) -> str:
        try: parse_pauli(value)
        except PauliLiteralError as e: raise ValueError(str(e))
        return value


class TableauPayload(BaseModel):
    rows: list[TableauRowPayload]


class TableauDocument(_DocumentBase):
    kind: Literal["tableau"] = "tableau"
    payload: TableauPayload

    @model_validator(mode="after")
    def validate_rows(self) -> "TableauDocument":
        if len(self.payload.rows) != self.n: raise ValueError(f"Tableau has {len(self.payload.rows)} rows, expected {self.n}")
        for row in self.payload.rows:
            for literal in (row.u, row.v):
                if parse_pauli(literal).n != self.n: raise ValueError(f"Pauli literal {literal!r} does not act on {self.n} qubits")
        return self

    class Config:
        json_schema_extra = {"example": {"kind": "tableau", "n": 1, "payload": {"rows": [{"u": "X", "v": "Z"}]}}}


class MatrixDocument(_DocumentBase):
    """Dense matrix, row-major, entries as [re, im] pairs."""

    kind: Literal["matrix"] = "matrix"
    payload: list[list[ComplexPair]]

    @model_validator(mode="after")
    def validate_shape(self) -> "MatrixDocument":
        size = 1 << self.n
        if len(self.payload) != size: raise ValueError(f"Matrix has {len(self.payload)} rows, expected {size}")
        for row in self.payload:
            if len(row) != size: raise ValueError(f"Matrix row has {len(row)} entries, expected {size}")
        return self


Document = Annotated[
    Union[AmplitudesDocument, TripleDocument, CheckMatrixDocument, TableauDocument, MatrixDocument],
    Field(discriminator="kind"),
]
DocumentAdapter: TypeAdapter[Any] = TypeAdapter(Document)


def parse_document(text: str | bytes) -> Document:
    """Validate a JSON document; raises pydantic.ValidationError."""
    return DocumentAdapter.validate_json(text)


def dump_document(document: Document) -> str:
    return document.model_dump_json(indent=2, exclude_none=True)
