from pydantic_settings import BaseSettings
from pydantic import Field


class Settings(BaseSettings):

    # Numerical tolerances
    ZERO_TOLERANCE: float = Field(default=1e-8, description="Amplitude counts as zero when |a| <= tol * max|entries|")
    PHASE_TOLERANCE: float = Field(default=1e-8, description="Max distance of a normalised ratio from {1, -1, i, -i}")
    ORACLE_TOLERANCE: float = Field(default=1e-9, description="Entrywise tolerance used by the brute-force oracles")

    # Oracle limits (qubits)
    ORACLE_MAX_DENSE_QUBITS: int = Field(default=10, description="Largest n for which a Pauli may be densified")
    ORACLE_MAX_STATE_QUBITS: int = Field(default=6, description="Largest n accepted by the brute-force state oracles")
    ORACLE_MAX_GATE_QUBITS: int = Field(default=4, description="Largest n accepted by the brute-force gate oracles")
    ORACLE_MAX_ENUMERATION_QUBITS: int = Field(default=2, description="Largest n for exhaustive state enumeration")

    # Instance generation
    DENSE_EMIT_MAX_QUBITS: int = Field(default=10, description="Largest n for which a gate may be emitted as a dense matrix")
    RANDOM_DEPTH_PER_QUBIT: int = Field(default=10, description="Default random circuit depth is this times n")

    # Benchmarks
    BENCH_REPEATS: int = Field(default=5, description="Timed repeats per benchmark point (after one warm-up)")
    BENCH_SEED: int = Field(default=1234, description="Seed for benchmark instances")

    LOG_LEVEL: str = Field(default="WARNING", description="Logging level for the command-line tool")

    class Config:
        env_file = ".env"
        env_prefix = "STABTOOL_"
        case_sensitive = True


settings = Settings()
