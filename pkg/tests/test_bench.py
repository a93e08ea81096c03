"""Tests for the benchmark harness, CSV output, and the CLI."""

import math

import numpy as np
import pytest

from dacresample.bench import (
    BenchConfig,
    chi_square_statistic,
    csv_header,
    run_benchmark,
    verify_complexity,
    verify_statistics,
)
from dacresample.cli import main

FULL_HEADER = (
    "Ns,timesdcM1,timesccfM1,timesbM1,"
    "timesdcM100,timesccfM100,timesbM100,"
    "timesdcM1000,timesccfM1000,timesbM1000"
)


class TestBenchConfig:
    def test_n_grid_is_log_spaced(self):
        grid = BenchConfig(n_min=100, n_max=10_000, n_points=5).n_grid()
        assert grid == [100, 316, 1000, 3162, 10000]

    def test_single_point_grid(self):
        assert BenchConfig(n_min=50, n_max=50, n_points=1).n_grid() == [50]

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(n_min=0),
            dict(n_min=100, n_max=10),
            dict(n_points=0),
            dict(trials=0),
            dict(ratios=()),
            dict(ratios=(0,)),
            dict(weight_source="other"),
            dict(warmup=-1),
        ],
    )
    def test_invalid_configs_rejected(self, kwargs):
        with pytest.raises(ValueError):
            BenchConfig(**kwargs)


class TestCsvFormat:
    def test_header_matches_plot_schema(self):
        assert csv_header((1, 100, 1000)) == FULL_HEADER

    def test_header_tracks_configured_ratios(self):
        assert csv_header((7,)) == "Ns,timesdcM7,timesccfM7,timesbM7"

    def test_csv_shape_and_values(self, tmp_path):
        out = tmp_path / "results.csv"
        config = BenchConfig(
            n_min=10, n_max=100, n_points=3, ratios=(1, 10), trials=2,
            seed=1, weight_source="dirichlet", output_path=str(out),
        )
        records = run_benchmark(config)
        assert len(records) == 3 * 2 * 3
        lines = out.read_text().splitlines()
        assert lines[0] == "Ns,timesdcM1,timesccfM1,timesbM1,timesdcM10,timesccfM10,timesbM10"
        assert len(lines) == 1 + 3
        assert out.read_text().endswith("\n")
        for line in lines[1:]:
            cells = line.split(",")
            assert len(cells) == 7
            assert not line.endswith(",")
            values = [float(c) for c in cells[1:]]
            assert all(v >= 0.0 for v in values)

    def test_oversized_cells_skipped_with_warning(self, tmp_path):
        out = tmp_path / "skip.csv"
        config = BenchConfig(
            n_min=10, n_max=10, n_points=1, ratios=(1, 1000), trials=1,
            seed=0, weight_source="dirichlet", output_path=str(out),
            max_elements=100,
        )
        with pytest.warns(UserWarning, match="skipped"):
            records = run_benchmark(config)
        assert {r.ratio for r in records} == {1}
        row = out.read_text().splitlines()[1].split(",")
        assert all(c == "nan" for c in row[4:])
        assert all(c != "nan" for c in row[1:4])

    def test_shape_is_deterministic_for_fixed_config(self, tmp_path):
        config = BenchConfig(
            n_min=10, n_max=20, n_points=2, ratios=(2,), trials=1,
            seed=3, weight_source="geometric",
        )
        a = run_benchmark(config)
        b = run_benchmark(config)
        assert [(r.n, r.ratio, r.sampler) for r in a] == [(r.n, r.ratio, r.sampler) for r in b]


class TestChiSquareStatistic:
    def test_exact_counts_give_zero(self):
        assert chi_square_statistic([25, 25, 25, 25], [25.0] * 4) == 0.0

    def test_known_value(self):
        assert chi_square_statistic([30, 20, 25, 25], [25.0] * 4) == pytest.approx(2.0)


class TestVerifyStatistics:
    def test_reports_cover_all_samplers_and_pass(self):
        reports = verify_statistics(BenchConfig(seed=5), n_draws=200_000)
        assert sorted(r.sampler for r in reports) == ["binary", "ccf", "dac"]
        for r in reports:
            assert r.m == 16 and r.dof == 15 and r.n == 200_000
            assert r.chi_square >= 0.0
            assert r.passed


class TestVerifyComplexity:
    def test_all_budgets_hold_on_reduced_grid(self):
        cells = verify_complexity(
            BenchConfig(seed=2), ns=(64, 256), ratios=(1, 16), trials=5
        )
        assert len(cells) == 4
        for cell in cells:
            assert cell.ok, cell.violations
            assert cell.ccf_max_comparisons <= cell.ccf_budget
            assert cell.dac_max_depth <= cell.depth_budget
            assert cell.dac_mean_probes <= cell.dac_mean_budget

    def test_instrumented_counts_are_seed_deterministic(self):
        a = verify_complexity(BenchConfig(seed=4), ns=(64,), ratios=(4,), trials=3)
        b = verify_complexity(BenchConfig(seed=4), ns=(64,), ratios=(4,), trials=3)
        assert a[0].dac_mean_probes == b[0].dac_mean_probes
        assert a[0].ccf_max_comparisons == b[0].ccf_max_comparisons
        assert a[0].binary_max_probes == b[0].binary_max_probes


class TestCli:
    def test_sample_from_file(self, tmp_path, capsys):
        path = tmp_path / "weights.txt"
        path.write_text("2 1\n1\n")
        assert main(["sample", str(path), "--n", "6", "--seed", "4"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert len(out) == 6
        assert all(0 <= int(tok) < 3 for tok in out)

    def test_sample_from_stdin(self, monkeypatch, capsys):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("1 1 1 1"))
        assert main(["sample", "--n", "3", "--seed", "0", "--sampler", "binary"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert len(out) == 3

    def test_sample_default_n_is_weight_count(self, tmp_path, capsys):
        path = tmp_path / "weights.txt"
        path.write_text("1 2 3 4 5")
        assert main(["sample", str(path)]) == 0
        assert len(capsys.readouterr().out.splitlines()) == 5

    def test_sample_empty_input_fails(self, monkeypatch, capsys):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(""))
        assert main(["sample"]) == 2

    def test_sample_reproducible_for_fixed_seed(self, tmp_path, capsys):
        path = tmp_path / "weights.txt"
        path.write_text("3 1 2")
        main(["sample", str(path), "--n", "10", "--seed", "11"])
        first = capsys.readouterr().out
        main(["sample", str(path), "--n", "10", "--seed", "11"])
        assert capsys.readouterr().out == first

    def test_bench_writes_csv(self, tmp_path, capsys):
        out = tmp_path / "bench.csv"
        code = main([
            "bench", "--n-min", "10", "--n-max", "40", "--n-points", "2",
            "--ratios", "1,4", "--trials", "2", "--seed", "1",
            "--weights", "dirichlet", "--out", str(out), "--warmup", "1",
        ])
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "Ns,timesdcM1,timesccfM1,timesbM1,timesdcM4,timesccfM4,timesbM4"
        assert len(lines) == 3

    def test_verify_exits_zero_on_success(self, capsys):
        assert main(["verify", "--trials", "2", "--seed", "6"]) == 0
        out = capsys.readouterr().out
        assert "verification passed" in out

    def test_unknown_subcommand_rejected(self):
        with pytest.raises(SystemExit):
            main(["frobnicate"])
