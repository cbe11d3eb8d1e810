import pytest

from src.utils import Settings


@pytest.mark.unit
class TestSettings:
    """Test environment-driven configuration."""

    def test_defaults(self, monkeypatch):
        """Test the default tolerances and oracle limits."""
        for name in ("STABTOOL_PHASE_TOLERANCE", "STABTOOL_ORACLE_MAX_GATE_QUBITS", "STABTOOL_LOG_LEVEL"):
            monkeypatch.delenv(name, raising=False)
        settings = Settings(_env_file=None)

        assert settings.PHASE_TOLERANCE == 1e-8
        assert settings.ORACLE_MAX_STATE_QUBITS == 6
        assert settings.ORACLE_MAX_GATE_QUBITS == 4
        assert settings.LOG_LEVEL == "WARNING"

    def test_environment_override(self, monkeypatch):
        """Test STABTOOL_ variables override the defaults."""
        monkeypatch.setenv("STABTOOL_PHASE_TOLERANCE", "1e-6")
        monkeypatch.setenv("STABTOOL_ORACLE_MAX_GATE_QUBITS", "3")
        monkeypatch.setenv("STABTOOL_LOG_LEVEL", "DEBUG")
        settings = Settings(_env_file=None)

        assert settings.PHASE_TOLERANCE == 1e-6
        assert settings.ORACLE_MAX_GATE_QUBITS == 3
        assert settings.LOG_LEVEL == "DEBUG"

    def test_unprefixed_ignored(self, monkeypatch):
        """Test variables without the prefix are not read."""
        monkeypatch.setenv("ORACLE_MAX_GATE_QUBITS", "1")
        monkeypatch.delenv("STABTOOL_ORACLE_MAX_GATE_QUBITS", raising=False)

        assert Settings(_env_file=None).ORACLE_MAX_GATE_QUBITS == 4

    def test_invalid_value(self, monkeypatch):
        """Test non-numeric overrides are rejected."""
        monkeypatch.setenv("STABTOOL_BENCH_REPEATS", "many")

        with pytest.raises(ValueError):
            Settings(_env_file=None)
