import pytest

from src.f2 import gray_code, gray_sequence


@pytest.mark.unit
class TestGraySequence:
    """Test binary-reflected Gray code iteration."""

    def test_empty_length(self):
        """Test k = 0 yields the single empty codeword."""
        steps = list(gray_sequence(0))

        assert len(steps) == 1
        assert str(steps[0].codeword) == ""
        assert steps[0].flipped_bit is None

    def test_two_bits(self):
        """Test k = 2 gives 00, 01, 11, 10 with flips at bits 0, 1, 0."""
        steps = list(gray_sequence(2))

        assert [str(step.codeword) for step in steps] == ["00", "01", "11", "10"]
        assert [step.flipped_bit for step in steps] == [None, 0, 1, 0]

    def test_five_bits_exhaustive(self):
        """Test all 32 codewords are distinct and neighbours differ in the reported bit."""
        steps = list(gray_sequence(5))
        codes = [step.codeword.bits for step in steps]

        assert len(set(codes)) == 32
        for previous, step in zip(steps, steps[1:]):
            assert previous.codeword.bits ^ step.codeword.bits == 1 << step.flipped_bit

    def test_gray_code_values(self):
        """Test the closed form i XOR (i >> 1)."""
        assert [gray_code(i) for i in range(8)] == [0, 1, 3, 2, 6, 7, 5, 4]

    def test_negative_length(self):
        """Test a negative length raises."""
        with pytest.raises(ValueError):
            list(gray_sequence(-1))
