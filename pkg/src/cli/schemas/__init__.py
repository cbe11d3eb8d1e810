from src.cli.schemas.document import (
    GATE_KINDS,
    STATE_KINDS,
    AmplitudesDocument,
    CheckMatrixDocument,
    Document,
    DocumentAdapter,
    DocumentKind,
    DocumentMetadata,
    MatrixDocument,
    TableauDocument,
    TableauPayload,
    TableauRowPayload,
    TripleDocument,
    TriplePayload,
    dump_document,
    parse_document,
)
from src.cli.schemas.report import VerificationReport

__all__ = [
    "GATE_KINDS",
    "STATE_KINDS",
    "AmplitudesDocument",
    "CheckMatrixDocument",
    "Document",
    "DocumentAdapter",
    "DocumentKind",
    "DocumentMetadata",
    "MatrixDocument",
    "TableauDocument",
    "TableauPayload",
    "TableauRowPayload",
    "TripleDocument",
    "TriplePayload",
    "dump_document",
    "parse_document",
    "VerificationReport",
]
