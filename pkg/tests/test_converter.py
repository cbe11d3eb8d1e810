import pytest
import numpy as np
from prometheus_client import REGISTRY

from src.cli.schemas import AmplitudesDocument, CheckMatrixDocument, MatrixDocument, TableauDocument
from src.cli.services import Codec, Converter, NoConversionPathError, VerificationRejectedError
from src.cli.services import converter as converter_module
from src.clifford import Tableau
from src.pauli import AmplitudeVector
from tests.helpers import matrix_document


def conversion_count(source: str, target: str, status: str) -> float:
    value = REGISTRY.get_sample_value("stabtool_conversions_total", {"source": source, "target": target, "status": status})
    return value or 0.0


def entries(document) -> np.ndarray:
    array = np.asarray(document.payload, dtype=np.float64)
    return array[..., 0] + 1j * array[..., 1]


@pytest.mark.unit
class TestConversionPath:
    """Test routing through the conversion graph."""

    def test_state_chain(self):
        """Test amplitudes reach check matrices through the triple."""
        assert Converter.conversion_path("amplitudes", "check_matrix") == ["amplitudes", "triple", "check_matrix"]
        assert Converter.conversion_path("check_matrix", "amplitudes") == ["check_matrix", "triple", "amplitudes"]

    def test_gate_edge(self):
        """Test matrices and tableaus are one edge apart."""
        assert Converter.conversion_path("matrix", "tableau") == ["matrix", "tableau"]

    def test_same_kind(self):
        """Test a kind reaches itself with an empty chain."""
        assert Converter.conversion_path("triple", "triple") == ["triple"]

    @pytest.mark.parametrize("source,target", [("amplitudes", "tableau"), ("matrix", "check_matrix"), ("tableau", "triple")])
    def test_unreachable(self, source, target):
        """Test states and gates never convert into each other."""
        with pytest.raises(NoConversionPathError, match=f"No conversion from {source} to {target}"):
            Converter.conversion_path(source, target)


@pytest.mark.unit
class TestConvertStates:
    """Test state document conversions."""

    def test_basis_state_to_check(self, sample_amplitudes_document):
        """Test |00> converts to the rows Z1, Z2."""
        result = Converter.convert(sample_amplitudes_document, "check_matrix")

        assert isinstance(result, CheckMatrixDocument)
        assert result.payload == ["00100", "00010"]
        assert result.metadata.global_factor == (1.0, 0.0)

    def test_bell_check_to_amplitudes(self, sample_bell_check_document):
        """Test {X1X2, Z1Z2} converts to (1, 0, 0, 1)/sqrt(2)."""
        result = Converter.convert(sample_bell_check_document, "amplitudes")

        assert isinstance(result, AmplitudesDocument)
        assert np.abs(entries(result) - np.array([1, 0, 0, 1]) / np.sqrt(2)).max() < 1e-12

    def test_global_factor_restored(self):
        """Test the scalar stripped on the way to a check matrix comes back on the way out."""
        original = Codec.to_document(AmplitudeVector([0, 2j, 0, 0]))
        check = Converter.convert(original, "check_matrix")
        back = Converter.convert(check, "amplitudes")

        assert check.metadata.global_factor == pytest.approx((0.0, 2.0))
        assert np.abs(entries(back) - np.array([0, 2j, 0, 0])).max() < 1e-12
        assert back.metadata.global_factor is None

    def test_triple_is_canonical(self):
        """Test a state with a non-trivial phase converts to a triple and back up to its factor."""
        v = AmplitudeVector(np.array([1, 1j, 1j, 1]) * (-0.5j))
        triple = Converter.convert(Codec.to_document(v), "triple")
        back = Converter.convert(triple, "amplitudes")

        assert triple.kind == "triple"
        assert np.abs(entries(back) - v.entries).max() < 1e-12

    def test_metadata_passed_through(self, sample_bell_check_document):
        """Test provenance fields survive a conversion."""
        document = sample_bell_check_document.model_copy(update={"metadata": sample_bell_check_document.metadata.model_copy(update={"seed": 5})})

        assert Converter.convert(document, "triple").metadata.seed == 5

    def test_identity_conversion(self, sample_amplitudes_document):
        """Test converting to the same kind returns an equal document."""
        assert Converter.convert(sample_amplitudes_document, "amplitudes") == sample_amplitudes_document

    def test_magic_state_rejected(self, magic_state):
        """Test a non-stabiliser vector raises with the diagnosis attached."""
        before = conversion_count("amplitudes", "triple", "rejected")

        with pytest.raises(VerificationRejectedError) as info:
            Converter.convert(Codec.to_document(magic_state), "triple")

        assert info.value.reason == "amplitude_phase_off_grid"
        assert info.value.witness == 1
        assert info.value.kind == "amplitudes"
        assert conversion_count("amplitudes", "triple", "rejected") == before + 1

    @pytest.mark.parametrize("target", ["triple", "check_matrix"])
    def test_zero_vector_rejected(self, target):
        """Test the all-zero vector raises a zero_vector rejection rather than crashing."""
        before = conversion_count("amplitudes", target, "rejected")

        with pytest.raises(VerificationRejectedError) as info:
            Converter.convert(AmplitudesDocument(n=2, payload=[[0.0, 0.0]] * 4), target)

        assert info.value.reason == "zero_vector"
        assert info.value.witness is None
        assert conversion_count("amplitudes", target, "rejected") == before + 1

    def test_unreachable_target(self, sample_amplitudes_document):
        """Test a gate target for a state raises before any work."""
        with pytest.raises(NoConversionPathError):
            Converter.convert(sample_amplitudes_document, "tableau")


@pytest.mark.unit
class TestConvertGates:
    """Test gate document conversions."""

    def test_hadamard_tableau_to_matrix(self, sample_hadamard_tableau_document, dense_gates):
        """Test (U=X, V=Z) synthesises H with a positive first entry."""
        result = Converter.convert(sample_hadamard_tableau_document, "matrix")

        assert isinstance(result, MatrixDocument)
        assert np.abs(entries(result) - dense_gates['H']).max() < 1e-12

    def test_cnot_matrix_to_tableau(self, dense_gates):
        """Test the CNOT matrix converts to its tableau literals."""
        result = Converter.convert(matrix_document(dense_gates['CNOT']), "tableau")

        assert isinstance(result, TableauDocument)
        assert [(row.u, row.v) for row in result.payload.rows] == [("ZI", "XX"), ("ZZ", "IX")]
        assert result.metadata.global_phase == pytest.approx((1.0, 0.0))

    def test_global_phase_restored(self, dense_gates):
        """Test i·H survives matrix → tableau → matrix exactly."""
        tableau = Converter.convert(matrix_document(1j * dense_gates['H']), "tableau")
        back = Converter.convert(tableau, "matrix")

        assert tableau.metadata.global_phase == pytest.approx((0.0, 1.0))
        assert np.abs(entries(back) - 1j * dense_gates['H']).max() < 1e-12
        assert back.metadata.global_phase is None

    def test_t_gate_rejected(self, sample_t_matrix_document):
        """Test T cannot be converted to a tableau."""
        before = conversion_count("matrix", "tableau", "rejected")

        with pytest.raises(VerificationRejectedError) as info:
            Converter.convert(sample_t_matrix_document, "tableau")

        assert info.value.reason == "relative_phase_inconsistent"
        assert conversion_count("matrix", "tableau", "rejected") == before + 1

    def test_dense_emission_limit(self, monkeypatch):
        """Test tableaus beyond the dense limit are refused and counted as errors."""
        monkeypatch.setattr(converter_module.settings, "DENSE_EMIT_MAX_QUBITS", 1)
        before = conversion_count("tableau", "matrix", "error")

        with pytest.raises(ValueError, match="Refusing to emit"):
            Converter.convert(Codec.to_document(Tableau.identity(2)), "matrix")

        assert conversion_count("tableau", "matrix", "error") == before + 1

    def test_success_counted(self, sample_hadamard_tableau_document):
        """Test successful conversions increment the success counter."""
        before = conversion_count("tableau", "matrix", "success")

        Converter.convert(sample_hadamard_tableau_document, "matrix")

        assert conversion_count("tableau", "matrix", "success") == before + 1
