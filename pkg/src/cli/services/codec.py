import logging
from typing import Any

import numpy as np
import numpy.typing as npt

from src.cli.schemas import (
    AmplitudesDocument,
    CheckMatrixDocument,
    Document,
    DocumentMetadata,
    MatrixDocument,
    TableauDocument,
    TableauPayload,
    TableauRowPayload,
    TripleDocument,
    TriplePayload,
)
from src.clifford import CliffordMatrix, Tableau, TableauRow
from src.f2 import BitMatrix, BitVector
from src.pauli import AmplitudeVector, format_pauli, parse_pauli
from src.stabiliser import AffineSubspaceTriple, CheckMatrix, CheckRow

logger: logging.Logger = logging.getLogger(__name__)

LibraryObject = AmplitudeVector | AffineSubspaceTriple | CheckMatrix | Tableau | CliffordMatrix


def _pairs(values: npt.NDArray[np.complex128]) -> list[tuple[float, float]]:
    return [(float(z.real), float(z.imag)) for z in values]


def _complex(pairs: Any) -> npt.NDArray[np.complex128]:
    array = np.asarray(pairs, dtype=np.float64)
    return array[..., 0] + 1j * array[..., 1]


class Codec:
    """
    Translates between on-disk documents and library objects.

    Bitstrings are written qubit-1-first; complex numbers as [re, im].
    """

    @staticmethod
    def to_object(document: Document) -> LibraryObject:
        """
        Build the library object a document describes.

        Raises:
            ValueError: If the payload violates a library invariant (e.g. dependent basis)
        """
        n = document.n
        match document:
            case AmplitudesDocument():
                return AmplitudeVector(_complex(document.payload))
            case TripleDocument():
                payload = document.payload
                k = len(payload.basis)
                qform_rows = [[0] * k for _ in range(k)]
                for i, row in enumerate(payload.qform):
                    for offset, bit in enumerate(row):
                        qform_rows[i][i + offset] = int(bit)
                return AffineSubspaceTriple(
                    n=n,
                    basis=tuple(BitVector.from_string(vector) for vector in payload.basis),
                    shift=BitVector.from_string(payload.shift),
                    qform=BitMatrix.from_lists(qform_rows, col_count=k),
                    lmap=BitVector.from_string(payload.lmap),
                )
            case CheckMatrixDocument():
                rows = [CheckRow(BitVector.from_string(row[:n]), BitVector.from_string(row[n:2 * n]), int(row[2 * n])) for row in document.payload]
                return CheckMatrix(n, tuple(rows))
            case TableauDocument():
                return Tableau(n, tuple(TableauRow(parse_pauli(row.u), parse_pauli(row.v)) for row in document.payload.rows))
            case MatrixDocument():
                return CliffordMatrix(_complex(document.payload))
        raise TypeError(f"Unsupported document {type(document).__name__}")

    @staticmethod
    def to_document(obj: LibraryObject, metadata: DocumentMetadata | None = None) -> Document:
        """Serialise a library object; metadata is attached unchanged."""
        metadata = metadata or DocumentMetadata()
        match obj:
            case AmplitudeVector():
                return AmplitudesDocument(n=obj.n, payload=_pairs(obj.entries), metadata=metadata)
            case AffineSubspaceTriple():
                payload = TriplePayload(
                    basis=[str(vector) for vector in obj.basis],
                    shift=str(obj.shift),
                    qform=["".join(str(obj.qform.entry(i, j)) for j in range(i, obj.k)) for i in range(obj.k)],
                    lmap=str(obj.lmap),
                )
                return TripleDocument(n=obj.n, payload=payload, metadata=metadata)
            case CheckMatrix():
                return CheckMatrixDocument(n=obj.n, payload=[f"{row.q}{row.p}{row.c}" for row in obj.rows], metadata=metadata)
            case Tableau():
                rows = [TableauRowPayload(u=format_pauli(row.u), v=format_pauli(row.v)) for row in obj.rows]
                return TableauDocument(n=obj.n, payload=TableauPayload(rows=rows), metadata=metadata)
            case CliffordMatrix():
                return MatrixDocument(n=obj.n, payload=[_pairs(row) for row in obj.entries], metadata=metadata)
        raise TypeError(f"Unsupported object {type(obj).__name__}")
