"""
End-to-end tests of the stabtool command through its entry point.
"""
import io
import json
from unittest.mock import patch

import pytest
import numpy as np

from src.cli.main import EXIT_INVALID_INPUT, EXIT_OK, EXIT_ORACLE_DISAGREEMENT, EXIT_REJECTED, main
from src.cli.schemas import AmplitudesDocument, dump_document, parse_document
from src.cli.services import Codec
from tests.helpers import matrix_document, phase_distance


@pytest.fixture
def write_document(tmp_path):
    """Write a document to a temporary file and return its path."""
    def _write(document, name="input.json"):
        path = tmp_path / name
        path.write_text(dump_document(document))
        return str(path)
    return _write


@pytest.mark.integration
class TestConvertCommand:
    """Test `stabtool convert`."""

    def test_amplitudes_to_check(self, write_document, sample_amplitudes_document, capsys):
        """Test |00> prints the check matrix {Z1, Z2}."""
        code = main(["convert", "--to", "check_matrix", write_document(sample_amplitudes_document)])
        document = parse_document(capsys.readouterr().out)

        assert code == EXIT_OK
        assert document.kind == "check_matrix"
        assert document.payload == ["00100", "00010"]

    def test_stdin(self, sample_bell_check_document, monkeypatch, capsys):
        """Test - reads the document from standard input."""
        monkeypatch.setattr("sys.stdin", io.StringIO(dump_document(sample_bell_check_document)))

        code = main(["convert", "--to", "amplitudes", "-"])
        document = parse_document(capsys.readouterr().out)

        assert code == EXIT_OK
        assert phase_distance(Codec.to_object(document).entries, np.array([1, 0, 0, 1]) / np.sqrt(2)) < 1e-12

    def test_chained_round_trip(self, write_document, dense_gates, tmp_path, capsys):
        """Test matrix → tableau → matrix through two invocations restores the input."""
        assert main(["convert", "--to", "tableau", write_document(matrix_document(1j * dense_gates['CNOT']))]) == EXIT_OK
        tableau_path = tmp_path / "tableau.json"
        tableau_path.write_text(capsys.readouterr().out)

        assert main(["convert", "--to", "matrix", str(tableau_path)]) == EXIT_OK
        back = Codec.to_object(parse_document(capsys.readouterr().out))

        assert np.abs(back.entries - 1j * dense_gates['CNOT']).max() < 1e-12

    def test_rejected_input(self, write_document, sample_t_matrix_document, capsys):
        """Test a non-Clifford matrix exits with the rejection code and prints nothing."""
        code = main(["convert", "--to", "tableau", write_document(sample_t_matrix_document)])

        assert code == EXIT_REJECTED
        assert capsys.readouterr().out == ""

    def test_zero_vector(self, write_document, capsys):
        """Test an all-zero amplitude document exits with the rejection code."""
        zero = AmplitudesDocument(n=2, payload=[[0.0, 0.0]] * 4)

        code = main(["convert", "--to", "check_matrix", write_document(zero)])

        assert code == EXIT_REJECTED
        assert capsys.readouterr().out == ""

    def test_unreachable_target(self, write_document, sample_amplitudes_document):
        """Test converting a state to a gate kind is invalid input."""
        assert main(["convert", "--to", "matrix", write_document(sample_amplitudes_document)]) == EXIT_INVALID_INPUT

    def test_malformed_file(self, tmp_path):
        """Test a document violating its schema is invalid input."""
        path = tmp_path / "broken.json"
        path.write_text('{"kind": "amplitudes", "n": 1, "payload": [[1, 0]]}')

        assert main(["convert", "--to", "triple", str(path)]) == EXIT_INVALID_INPUT

    def test_missing_file(self, tmp_path):
        """Test an unreadable path is invalid input."""
        assert main(["convert", "--to", "triple", str(tmp_path / "absent.json")]) == EXIT_INVALID_INPUT

    def test_unknown_target(self, write_document, sample_amplitudes_document):
        """Test argparse refuses unknown target kinds."""
        with pytest.raises(SystemExit) as info:
            main(["convert", "--to", "circuit", write_document(sample_amplitudes_document)])

        assert info.value.code == 2


@pytest.mark.integration
class TestVerifyCommand:
    """Test `stabtool verify`."""

    def test_accepted(self, write_document, bell_state, capsys):
        """Test an accepted state exits 0 with a certificate."""
        code = main(["verify", "--oracle", write_document(Codec.to_document(bell_state))])
        report = json.loads(capsys.readouterr().out)

        assert code == EXIT_OK
        assert report["verdict"] == "accepted"
        assert report["certificate"]["payload"] == ["11000", "00110"]
        assert report["oracle_agrees"] is True

    def test_rejected(self, write_document, magic_state, capsys):
        """Test a rejected state exits 3 with reason and witness."""
        code = main(["verify", write_document(Codec.to_document(magic_state))])
        report = json.loads(capsys.readouterr().out)

        assert code == EXIT_REJECTED
        assert report["failure_reason"] == "amplitude_phase_off_grid"
        assert report["witness"] == 1

    def test_zero_vector(self, write_document, capsys):
        """Test the all-zero vector is reported as rejected with reason zero_vector."""
        code = main(["verify", "--oracle", write_document(AmplitudesDocument(n=1, payload=[[0.0, 0.0]] * 2))])
        report = json.loads(capsys.readouterr().out)

        assert code == EXIT_REJECTED
        assert report["failure_reason"] == "zero_vector"
        assert report["oracle_agrees"] is True

    def test_oracle_disagreement(self, write_document, dense_gates):
        """Test an oracle contradiction exits 4."""
        with patch('src.cli.services.verifier.brute_is_clifford', return_value=False):
            code = main(["verify", "--oracle", write_document(matrix_document(dense_gates['H']))])

        assert code == EXIT_ORACLE_DISAGREEMENT

    def test_unverifiable_kind(self, write_document, sample_bell_check_document):
        """Test verifying a check matrix is invalid input."""
        assert main(["verify", write_document(sample_bell_check_document)]) == EXIT_INVALID_INPUT


@pytest.mark.integration
class TestRandomCommand:
    """Test `stabtool random`."""

    def test_deterministic(self, capsys):
        """Test the same seed prints the same document twice."""
        main(["random", "--kind", "state", "-n", "3", "--seed", "1"])
        first = capsys.readouterr().out
        main(["random", "--kind", "state", "-n", "3", "--seed", "1"])

        assert capsys.readouterr().out == first
        assert parse_document(first).kind == "check_matrix"

    def test_emit_matrix_verifies(self, tmp_path, capsys):
        """Test a generated dense gate verifies."""
        assert main(["random", "--kind", "gate", "-n", "2", "--seed", "4", "--emit", "matrix"]) == EXIT_OK
        path = tmp_path / "gate.json"
        path.write_text(capsys.readouterr().out)

        assert main(["verify", str(path)]) == EXIT_OK

    def test_invalid_emit(self):
        """Test emitting a gate as a triple is invalid input."""
        assert main(["random", "--kind", "gate", "-n", "2", "--seed", "0", "--emit", "triple"]) == EXIT_INVALID_INPUT


@pytest.mark.integration
class TestBenchCommand:
    """Test `stabtool bench`."""

    def test_csv(self, capsys):
        """Test CSV output has a header and one line per n."""
        code = main(["bench", "--task", "check_to_state", "--n", "1..3", "--repeats", "1", "--format", "csv"])
        lines = capsys.readouterr().out.strip().splitlines()

        assert code == EXIT_OK
        assert lines[0] == "n,fast_median_s,brute_median_s,speedup,doubling_ratio"
        assert len(lines) == 4

    def test_invalid_range(self):
        """Test a malformed range is invalid input."""
        assert main(["bench", "--task", "verify_gate", "--n", "3..1"]) == EXIT_INVALID_INPUT


@pytest.mark.integration
class TestGlobalOptions:
    """Test options shared by every subcommand."""

    def test_metrics_file(self, write_document, sample_amplitudes_document, tmp_path):
        """Test metrics are written on exit."""
        metrics_path = tmp_path / "stabtool.prom"

        main(["--metrics-file", str(metrics_path), "convert", "--to", "triple", write_document(sample_amplitudes_document)])

        assert 'stabtool_conversions_total{source="amplitudes",target="triple",status="success"}' in metrics_path.read_text()

    def test_metrics_file_written_on_failure(self, write_document, sample_t_matrix_document, tmp_path):
        """Test metrics are written when the command fails."""
        metrics_path = tmp_path / "stabtool.prom"

        main(["--metrics-file", str(metrics_path), "convert", "--to", "tableau", write_document(sample_t_matrix_document)])

        assert "stabtool_conversions_total" in metrics_path.read_text()

    def test_log_level(self, write_document, magic_state, capsys):
        """Test --log-level controls what reaches stderr."""
        main(["--log-level", "error", "verify", write_document(Codec.to_document(magic_state))])
        quiet = capsys.readouterr().err
        main(["--log-level", "warning", "verify", write_document(Codec.to_document(magic_state))])

        assert "Rejected" not in quiet
        assert "Rejected: amplitude_phase_off_grid" in capsys.readouterr().err

    def test_missing_command(self):
        """Test a subcommand is required."""
        with pytest.raises(SystemExit) as info:
            main([])

        assert info.value.code == 2
