"""Binary-reflected Gray code iteration."""
from typing import Iterator, NamedTuple

from src.f2.bits import BitVector


class GrayStep(NamedTuple):
    codeword: BitVector
    flipped_bit: int | None  # bit position (least significant = 0) changed from the previous codeword


def gray_code(index: int) -> int:
    return index ^ (index >> 1)


def gray_sequence(k: int) -> Iterator[GrayStep]:
    """
    Yield all 2^k Gray codewords starting at 0.

    The first step has flipped_bit None; every later step differs from its
    predecessor in exactly the reported bit.
    """
    if k < 0: raise ValueError(f"Gray code length must be non-negative, got {k}")

    previous = 0
    yield GrayStep(BitVector(0, k), None)
    for index in range(1, 1 << k):
        code = gray_code(index)
        yield GrayStep(BitVector(code, k), (code ^ previous).bit_length() - 1)
        previous = code
