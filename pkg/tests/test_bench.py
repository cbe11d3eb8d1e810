import io
from unittest.mock import patch

import pytest
import numpy as np
import pandas as pd

from src.cli.services import BENCH_TASKS, Benchmark, parse_range


@pytest.mark.unit
class TestParseRange:
    """Test qubit range parsing."""

    def test_range(self):
        """Test lo..hi is inclusive."""
        assert parse_range("4..7") == [4, 5, 6, 7]

    def test_single_value(self):
        """Test a bare integer is a one-point range."""
        assert parse_range("3") == [3]

    @pytest.mark.parametrize("text", ["", "a..3", "5..2", "0..2", "1..x"])
    def test_invalid(self, text):
        """Test malformed or empty ranges raise ValueError."""
        with pytest.raises(ValueError, match="Invalid qubit range"):
            parse_range(text)


@pytest.mark.unit
class TestBenchmark:
    """Test benchmark tables."""

    def test_median_time(self):
        """Test the reported time is the median of the timed repeats as a plain float."""
        clock = iter([0.0, 1.0, 10.0, 13.0, 20.0, 22.0])

        with patch('src.cli.services.bench.time.perf_counter', side_effect=lambda: next(clock)):
            median = Benchmark._median_time(lambda instance: instance, None, 3)

        assert median == 2.0
        assert type(median) is float

    def test_columns(self):
        """Test a run has one row per n and the expected columns."""
        table = Benchmark.run("verify_state", [1, 2], repeats=1)

        assert list(table.columns) == ["n", "fast_median_s", "brute_median_s", "speedup", "doubling_ratio"]
        assert table["n"].tolist() == [1, 2]
        assert (table["fast_median_s"] > 0).all()
        assert np.isnan(table["doubling_ratio"].iloc[0])

    def test_brute_beyond_limit(self):
        """Test brute columns are NaN above the oracle limit."""
        table = Benchmark.run("matrix_to_tableau", [4, 5], repeats=1)

        assert not np.isnan(table["brute_median_s"].iloc[0])
        assert np.isnan(table["brute_median_s"].iloc[1])
        assert np.isnan(table["speedup"].iloc[1])

    def test_no_baseline(self):
        """Test tableau synthesis has no brute-force baseline."""
        table = Benchmark.run("tableau_to_matrix", [1], repeats=1)

        assert table["brute_median_s"].isna().all()

    def test_gap_in_range(self):
        """Test the doubling ratio is only computed between consecutive n."""
        table = Benchmark.run("check_to_state", [2, 4, 5], repeats=1)

        assert np.isnan(table["doubling_ratio"].iloc[1])
        assert not np.isnan(table["doubling_ratio"].iloc[2])

    def test_csv_render(self):
        """Test the CSV rendering reads back as the same table."""
        table = Benchmark.run("state_to_check", [1, 2], repeats=1)
        again = pd.read_csv(io.StringIO(Benchmark.render(table, "csv")))

        assert again["n"].tolist() == [1, 2]
        assert list(again.columns) == list(table.columns)

    def test_text_render(self):
        """Test missing values render as dashes."""
        text = Benchmark.render(Benchmark.run("tableau_to_matrix", [1], repeats=1))

        assert "fast_median_s" in text
        assert "-" in text

    def test_unknown_task(self):
        """Test unknown tasks raise ValueError."""
        with pytest.raises(ValueError, match="Unknown benchmark task"):
            Benchmark.run("factor", [1])

    def test_every_task_runs(self):
        """Test every registered task completes at n = 2."""
        for task in BENCH_TASKS:
            assert len(Benchmark.run(task, [2], repeats=1)) == 1


@pytest.mark.slow
class TestScaling:
    """Test the fast paths beat brute force and scale linearly in 2^n."""

    @pytest.mark.parametrize("task", ["verify_state", "matrix_to_tableau"])
    def test_speedup_at_four_qubits(self, task):
        """Test the fast path is at least 20 times faster than brute force at n = 4."""
        table = Benchmark.run(task, [4], repeats=5)

        assert table["speedup"].iloc[0] >= 20

    def test_state_verification_doubling(self):
        """Test the median doubling ratio of state verification stays below 3 over n = 8..14."""
        table = Benchmark.run("verify_state", list(range(8, 15)), repeats=5)

        assert table["doubling_ratio"].dropna().median() < 3.0
