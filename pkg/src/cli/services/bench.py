import logging
import time
from typing import Any, Callable

import numpy as np
import pandas as pd

from src.clifford import circuit_matrix, circuit_tableau, matrix_to_tableau, random_check_matrix, random_circuit, tableau_to_matrix, verify_clifford_matrix
from src.monitoring import metrics
from src.oracle import brute_check_to_amplitudes, brute_is_clifford, brute_is_stabiliser, brute_stabiliser_group, brute_tableau
from src.stabiliser import amplitudes_to_check, check_to_amplitudes, verify_stabiliser_vector
from src.utils import settings

logger: logging.Logger = logging.getLogger(__name__)

BENCH_COLUMNS: list[str] = ["n", "fast_median_s", "brute_median_s", "speedup", "doubling_ratio"]


def _state_instance(n: int, rng: np.random.Generator) -> Any: return check_to_amplitudes(random_check_matrix(n, rng))


def _check_instance(n: int, rng: np.random.Generator) -> Any: return random_check_matrix(n, rng)


def _matrix_instance(n: int, rng: np.random.Generator) -> Any: return circuit_matrix(n, random_circuit(n, rng))


def _tableau_instance(n: int, rng: np.random.Generator) -> Any: return circuit_tableau(n, random_circuit(n, rng))


class BenchTask:
    """Instance builder, fast path, and optional brute-force baseline with its qubit limit."""

    def __init__(self, build: Callable[[int, np.random.Generator], Any], fast: Callable[[Any], Any], brute: Callable[[Any], Any] | None = None, brute_limit: int = 0):
        self.build = build
        self.fast = fast
        self.brute = brute
        self.brute_limit = brute_limit


BENCH_TASKS: dict[str, BenchTask] = {
    "verify_state": BenchTask(_state_instance, verify_stabiliser_vector, brute_is_stabiliser, settings.ORACLE_MAX_STATE_QUBITS),
    "state_to_check": BenchTask(_state_instance, amplitudes_to_check, brute_stabiliser_group, settings.ORACLE_MAX_STATE_QUBITS),
    "check_to_state": BenchTask(_check_instance, check_to_amplitudes, brute_check_to_amplitudes, settings.ORACLE_MAX_STATE_QUBITS),
    "matrix_to_tableau": BenchTask(_matrix_instance, matrix_to_tableau, brute_tableau, settings.ORACLE_MAX_GATE_QUBITS),
    "verify_gate": BenchTask(_matrix_instance, verify_clifford_matrix, brute_is_clifford, settings.ORACLE_MAX_GATE_QUBITS),
    "tableau_to_matrix": BenchTask(_tableau_instance, tableau_to_matrix),
}


def parse_range(text: str) -> list[int]:
    """ "4..10" -> [4, ..., 10]; a single integer is a one-point range."""
    lo, sep, hi = text.partition("..")
    try:
        start, stop = int(lo), int(hi) if sep else int(lo)
    except ValueError as e:
        raise ValueError(f"Invalid qubit range {text!r}; expected <lo>..<hi>") from e
    if start < 1 or stop < start: raise ValueError(f"Invalid qubit range {text!r}")
    return list(range(start, stop + 1))


class Benchmark:
    """Median wall times of fast paths against brute-force baselines."""

    @staticmethod
    def _median_time(operation: Callable[[Any], Any], instance: Any, repeats: int) -> float:
        operation(instance)  # warm-up
        timings: list[float] = []
        for _ in range(repeats):
            start = time.perf_counter()
            operation(instance)
            timings.append(time.perf_counter() - start)
        return float(np.median(timings))

    @staticmethod
    def run(task: str, n_values: list[int], repeats: int | None = None, seed: int | None = None) -> pd.DataFrame:
        """
        Time one task over a range of qubit counts.

        Args:
            task: Key of BENCH_TASKS
            n_values: Qubit counts to measure
            repeats: Timed runs per point after one warm-up (default settings.BENCH_REPEATS)
            seed: Instance seed (default settings.BENCH_SEED)

        Returns:
            DataFrame with one row per n; brute columns are NaN beyond the oracle limit

        Raises:
            ValueError: For unknown tasks
        """
        if task not in BENCH_TASKS: raise ValueError(f"Unknown benchmark task {task!r}; choose from {', '.join(BENCH_TASKS)}")
        bench_task = BENCH_TASKS[task]
        repeats = repeats or settings.BENCH_REPEATS
        seed = seed if seed is not None else settings.BENCH_SEED

        records: list[dict[str, float]] = []
        for n in n_values:
            instance = bench_task.build(n, np.random.default_rng(seed + n))
            fast = Benchmark._median_time(bench_task.fast, instance, repeats)
            metrics.operation_duration_seconds.labels(operation=f"bench_{task}").observe(fast)

            brute = float("nan")
            if bench_task.brute is not None and n <= bench_task.brute_limit:
                brute = Benchmark._median_time(bench_task.brute, instance, repeats)
            records.append({"n": n, "fast_median_s": fast, "brute_median_s": brute})
            logger.info(f"{task} n={n}: fast {fast:.3e}s, brute {brute:.3e}s")

        table = pd.DataFrame.from_records(records, columns=BENCH_COLUMNS[:3])
        table["speedup"] = table["brute_median_s"] / table["fast_median_s"]
        consecutive = table["n"].diff() == 1
        table["doubling_ratio"] = (table["fast_median_s"] / table["fast_median_s"].shift(1)).where(consecutive)
        return table

    @staticmethod
    def render(table: pd.DataFrame, output_format: str = "text") -> str:
        if output_format == "csv": return table.to_csv(index=False)
        return table.to_string(index=False, float_format=lambda value: f"{value:.3e}", na_rep="-")
