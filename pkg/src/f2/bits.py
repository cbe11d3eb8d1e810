"""
Bit-packed vectors and matrices over GF(2).

Each vector (and each matrix row) is stored in a single Python integer. Position 0
is the most significant bit of the packed word, so a label written qubit-1-first
("101") packs to the integer 0b101 and addition is a single XOR.
"""
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, overload


@dataclass(frozen=True)
class BitVector:
    """Fixed-length vector over GF(2)."""

    bits: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 0: raise ValueError(f"BitVector length must be non-negative, got {self.length}")
        if self.bits < 0 or self.bits >> self.length: raise ValueError(f"Bits {self.bits:#x} do not fit in length {self.length}")

    @classmethod
    def zeros(cls, length: int) -> "BitVector": return cls(0, length)

    @classmethod
    def unit(cls, position: int, length: int) -> "BitVector":
        """Standard basis vector e_position."""
        if not 0 <= position < length: raise IndexError(f"Position {position} out of range for length {length}")
        return cls(1 << (length - 1 - position), length)

    @classmethod
    def from_list(cls, entries: Sequence[int]) -> "BitVector":
        bits = 0
        for entry in entries:
            bits = (bits << 1) | (int(entry) & 1)
        return cls(bits, len(entries))

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        """Parse a bitstring written position-0-first, e.g. "0110"."""
        if any(ch not in "01" for ch in text): raise ValueError(f"Invalid bitstring: {text!r}")
        return cls(int(text, 2) if text else 0, len(text))

    def __getitem__(self, position: int) -> int:
        if not 0 <= position < self.length: raise IndexError(f"Position {position} out of range for length {self.length}")
        return (self.bits >> (self.length - 1 - position)) & 1

    def __len__(self) -> int: return self.length

    def __iter__(self) -> Iterator[int]:
        for position in range(self.length):
            yield self[position]

    def __add__(self, other: "BitVector") -> "BitVector":
        self._check_length(other)
        return BitVector(self.bits ^ other.bits, self.length)

    __xor__ = __add__

    def dot(self, other: "BitVector") -> int:
        """Inner product over GF(2)."""
        self._check_length(other)
        return (self.bits & other.bits).bit_count() & 1

    def flip(self, position: int) -> "BitVector": return self + BitVector.unit(position, self.length)

    def concat(self, other: "BitVector") -> "BitVector": return BitVector((self.bits << other.length) | other.bits, self.length + other.length)

    def split(self, head_length: int) -> tuple["BitVector", "BitVector"]:
        """Inverse of concat: (first head_length entries, remaining entries)."""
        tail_length = self.length - head_length
        return BitVector(self.bits >> tail_length, head_length), BitVector(self.bits & ((1 << tail_length) - 1), tail_length)

    def weight(self) -> int: return self.bits.bit_count()

    def is_zero(self) -> bool: return self.bits == 0

    def to_list(self) -> list[int]: return list(self)

    def __str__(self) -> str: return format(self.bits, f"0{self.length}b") if self.length else ""

    def _check_length(self, other: "BitVector") -> None:
        if self.length != other.length: raise ValueError(f"Length mismatch: {self.length} vs {other.length}")


@dataclass(frozen=True)
class BitMatrix:
    """Rectangular matrix over GF(2); each row is a packed integer of col_count bits."""

    rows: tuple[int, ...]
    col_count: int

    def __post_init__(self) -> None:
        if self.col_count < 0: raise ValueError(f"Column count must be non-negative, got {self.col_count}")
        for row in self.rows:
            if row < 0 or row >> self.col_count: raise ValueError(f"Row {row:#x} does not fit in {self.col_count} columns")

    @property
    def row_count(self) -> int: return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]: return self.row_count, self.col_count

    @classmethod
    def zeros(cls, row_count: int, col_count: int) -> "BitMatrix": return cls((0,) * row_count, col_count)

    @classmethod
    def identity(cls, size: int) -> "BitMatrix": return cls(tuple(1 << (size - 1 - i) for i in range(size)), size)

    @classmethod
    def from_vectors(cls, vectors: Iterable[BitVector], col_count: int | None = None) -> "BitMatrix":
        vectors = list(vectors)
        if col_count is None:
            if not vectors: raise ValueError("col_count required for an empty list of rows")
            col_count = vectors[0].length
        for vector in vectors:
            if vector.length != col_count: raise ValueError(f"Row length {vector.length} does not match {col_count} columns")
        return cls(tuple(vector.bits for vector in vectors), col_count)

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], col_count: int | None = None) -> "BitMatrix":
        if col_count is None: col_count = len(entries[0]) if entries else 0
        return cls.from_vectors((BitVector.from_list(row) for row in entries), col_count)

    def row(self, index: int) -> BitVector: return BitVector(self.rows[index], self.col_count)

    def vectors(self) -> list[BitVector]: return [self.row(i) for i in range(self.row_count)]

    def column(self, index: int) -> BitVector:
        shift = self.col_count - 1 - index
        return BitVector.from_list([(row >> shift) & 1 for row in self.rows])

    def entry(self, i: int, j: int) -> int: return (self.rows[i] >> (self.col_count - 1 - j)) & 1

    def transpose(self) -> "BitMatrix": return BitMatrix(tuple(self.column(j).bits for j in range(self.col_count)), self.row_count)

    @overload
    def __matmul__(self, other: "BitMatrix") -> "BitMatrix": ...

    @overload
    def __matmul__(self, other: BitVector) -> BitVector: ...

    def __matmul__(self, other: "BitMatrix | BitVector") -> "BitMatrix | BitVector":
        if isinstance(other, BitVector):
            if other.length != self.col_count: raise ValueError(f"Shape mismatch: {self.shape} @ vector of length {other.length}")
            return BitVector.from_list([(row & other.bits).bit_count() & 1 for row in self.rows])

        if self.col_count != other.row_count: raise ValueError(f"Shape mismatch: {self.shape} @ {other.shape}")
        product: list[int] = []
        for row in self.rows:
            acc = 0
            for j in range(self.col_count):
                if (row >> (self.col_count - 1 - j)) & 1: acc ^= other.rows[j]
            product.append(acc)
        return BitMatrix(tuple(product), other.col_count)

    def to_lists(self) -> list[list[int]]: return [self.row(i).to_list() for i in range(self.row_count)]

    def __str__(self) -> str: return "\n".join(str(self.row(i)) for i in range(self.row_count))
