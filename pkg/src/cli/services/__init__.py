from src.cli.services.bench import BENCH_TASKS, Benchmark, parse_range
from src.cli.services.codec import Codec
from src.cli.services.converter import Converter, NoConversionPathError, VerificationRejectedError
from src.cli.services.generator import InstanceGenerator
from src.cli.services.verifier import Verifier

__all__ = [
    "BENCH_TASKS",
    "Benchmark",
    "parse_range",
    "Codec",
    "Converter",
    "NoConversionPathError",
    "VerificationRejectedError",
    "InstanceGenerator",
    "Verifier",
]
