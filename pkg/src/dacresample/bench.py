"""Timing sweeps and statistical/complexity verification for the samplers.

The timing sweep reproduces the classic comparison: N log-spaced sample
counts crossed with M/N ratios, mean wall seconds per sampler per cell,
written as a plot-ready CSV. Weight generation and table construction
are never timed; each timed region is one full sampler call (uniform
generation included). Verification runs are separate and instrumented:
operation counts are checked against hard bounds, and empirical index
frequencies against a chi-square threshold, so timing noise never enters
a correctness claim.
"""

from __future__ import annotations

import gc
import math
import time
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import chi2

from .cdf import build_weight_table
from .randkit import RngStream
from .samplers import OpStats, binary_sampler, ccf_sampler, dac_sampler, warm_kernels
from .weightgen import ScenarioParams, dirichlet_uniform, engmf_weights, geometric_decay

__all__ = [
    "BenchConfig",
    "TimingRecord",
    "GofReport",
    "ComplexityCell",
    "run_benchmark",
    "verify_statistics",
    "verify_complexity",
    "chi_square_statistic",
    "csv_header",
]

SAMPLER_ORDER = ("dac", "ccf", "binary")
_CSV_TAG = {"dac": "dc", "ccf": "ccf", "binary": "b"}
_SAMPLERS = {"dac": dac_sampler, "ccf": ccf_sampler, "binary": binary_sampler}
_GEOMETRIC_RHO = 0.999  # fixed decay for the geometric benchmark shape


@dataclass(frozen=True)
class BenchConfig:
    """Sweep specification for timing and verification runs."""

    n_min: int = 100
    n_max: int = 10_000
    n_points: int = 10
    ratios: tuple[int, ...] = (1, 100, 1000)
    trials: int = 1000
    seed: int = 0
    weight_source: str = "engmf"
    output_path: str | None = None
    warmup: int = 0
    max_elements: int = 200_000_000  # skip cells whose weight field exceeds this
    collect_trials: bool = False  # keep per-trial durations on each record

    def __post_init__(self):
        if self.n_min < 1 or self.n_max < self.n_min:
            raise ValueError("need 1 <= n_min <= n_max")
        if self.n_points < 1 or self.trials < 1 or self.warmup < 0:
            raise ValueError("n_points and trials must be >= 1, warmup >= 0")
        if not self.ratios or any(int(r) != r or r < 1 for r in self.ratios):
            raise ValueError("ratios must be positive integers")
        if self.weight_source not in ("dirichlet", "geometric", "engmf"):
            raise ValueError(f"unknown weight source {self.weight_source!r}")

    def n_grid(self) -> list[int]:
        """Logarithmically spaced sample counts, one CSV row each."""
        pts = np.geomspace(self.n_min, self.n_max, self.n_points)
        return [int(round(p)) for p in pts]


@dataclass
class TimingRecord:
    """Mean wall seconds for one (N, ratio, sampler) cell."""

    n: int
    ratio: int
    sampler: str
    mean_seconds: float
    probe_mean: float | None = None
    trial_seconds: np.ndarray | None = None  # per-trial durations, opt-in


@dataclass
class GofReport:
    """Chi-square goodness-of-fit result for one sampler."""

    sampler: str
    m: int
    n: int
    chi_square: float
    dof: int
    passed: bool


@dataclass
class ComplexityCell:
    """Instrumented operation counts for one (N, ratio) cell vs their budgets."""

    n: int
    ratio: int
    m: int
    trials: int
    ccf_max_comparisons: int
    ccf_budget: int
    binary_max_probes: int
    dac_max_probes: int
    probe_budget: int
    dac_max_depth: int
    depth_budget: int
    dac_mean_probes: float
    dac_mean_budget: float
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _make_weights(source: str, n: int, ratio: int, stream: RngStream) -> np.ndarray:
    m = n * ratio
    if source == "dirichlet":
        return dirichlet_uniform(m, stream)
    if source == "geometric":
        return geometric_decay(m, _GEOMETRIC_RHO)
    return engmf_weights(ScenarioParams(n_particles=n, n_likelihood=ratio), stream)


def csv_header(ratios) -> str:
    cols = ["Ns"]
    for r in ratios:
        for name in SAMPLER_ORDER:
            cols.append(f"times{_CSV_TAG[name]}M{r}")
    return ",".join(cols)


def write_csv(path: str, config: BenchConfig, records: list[TimingRecord]) -> None:
    """One row per N; missing (skipped) cells are written as nan."""
    means = {(rec.n, rec.ratio, rec.sampler): rec.mean_seconds for rec in records}
    lines = [csv_header(config.ratios)]
    for n in config.n_grid():
        row = [str(n)]
        for ratio in config.ratios:
            for name in SAMPLER_ORDER:
                row.append(f"{means.get((n, ratio, name), math.nan):.6e}")
        lines.append(",".join(row))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def run_benchmark(config: BenchConfig) -> list[TimingRecord]:
    """Time every (N, ratio, sampler) cell; optionally write the CSV.

    Per trial: generate a fresh weight field and table (untimed), then
    time each sampler's full call on a monotonic clock. The timed region
    allocates nothing per sample beyond the output index array. The first
    ``config.warmup`` trials are discarded from the means. Two standard
    hygiene measures keep microsecond cells honest: the cyclic garbage
    collector is paused for the sweep so collection pauses never land
    inside a timed call, and the sampler order rotates per trial so any
    cost trailing the untimed weight generation is shared evenly.
    """
    warm_kernels()
    records: list[TimingRecord] = []
    root = RngStream(config.seed)
    cell = 0
    gc_was_enabled = gc.isenabled()
    gc.collect()
    gc.disable()
    try:
        for n in config.n_grid():
            for ratio in config.ratios:
                cell += 1
                m = n * ratio
                if m > config.max_elements:
                    warnings.warn(
                        f"cell N={n} ratio={ratio}: M={m} exceeds the element budget; skipped"
                    )
                    continue
                weight_stream = root.substream(cell).substream(0)
                sampler_streams = {
                    name: root.substream(cell).substream(1 + k)
                    for k, name in enumerate(SAMPLER_ORDER)
                }
                durations = {name: [] for name in SAMPLER_ORDER}
                for trial in range(config.warmup + config.trials):
                    table = build_weight_table(
                        _make_weights(config.weight_source, n, ratio, weight_stream)
                    )
                    shift = trial % len(SAMPLER_ORDER)
                    order = SAMPLER_ORDER[shift:] + SAMPLER_ORDER[:shift]
                    for name in order:
                        fn = _SAMPLERS[name]
                        stream = sampler_streams[name]
                        t0 = time.perf_counter()
                        fn(table, n, stream)
                        dt = time.perf_counter() - t0
                        if trial >= config.warmup:
                            durations[name].append(dt)
                for name in SAMPLER_ORDER:
                    trial_times = np.array(durations[name])
                    records.append(TimingRecord(
                        n, ratio, name, float(trial_times.mean()),
                        trial_seconds=trial_times if config.collect_trials else None,
                    ))
    finally:
        if gc_was_enabled:
            gc.enable()
    if config.output_path:
        write_csv(config.output_path, config, records)
    return records


def chi_square_statistic(counts, expected) -> float:
    """Pearson statistic sum((observed - expected)^2 / expected)."""
    counts = np.asarray(counts, dtype=np.float64)
    expected = np.asarray(expected, dtype=np.float64)
    return float(((counts - expected) ** 2 / expected).sum())


def verify_statistics(config: BenchConfig, m: int = 16, n_draws: int = 1_000_000,
                      alpha: float = 1e-3) -> list[GofReport]:
    """Goodness of fit: n_draws from a fixed m-component table per sampler.

    The table is a Dirichlet draw from the config seed; each sampler gets
    its own substream. Pass means the Pearson statistic stays below the
    upper alpha tail quantile of chi-square with m - 1 dof.
    """
    root = RngStream(config.seed)
    table = build_weight_table(dirichlet_uniform(m, root.substream(0)))
    expected = n_draws * table.weights()
    critical = float(chi2.isf(alpha, m - 1))
    reports = []
    for k, name in enumerate(SAMPLER_ORDER):
        indices = _SAMPLERS[name](table, n_draws, root.substream(1 + k))
        counts = np.bincount(indices, minlength=m)
        stat = chi_square_statistic(counts, expected)
        reports.append(GofReport(name, m, n_draws, stat, m - 1, stat < critical))
    return reports


def verify_complexity(config: BenchConfig,
                      ns: tuple[int, ...] = (100, 1000),
                      ratios: tuple[int, ...] = (1, 100, 1000),
                      trials: int = 50) -> list[ComplexityCell]:
    """Instrumented runs on equal-weight tables against the count budgets.

    Hard budgets per run: CCF comparisons <= N + M - 1; binary and
    divide-and-conquer probes <= N * (ceil(log2 M) + 1); scope nesting
    <= ceil(log2 N) + 1. Statistical budget per cell: mean
    divide-and-conquer probes <= 4N * (1 + log2(M/N + 1)).
    """
    root = RngStream(config.seed)
    cells = []
    cell_key = 0
    for n in ns:
        for ratio in ratios:
            cell_key += 1
            m = n * ratio
            table = build_weight_table(np.full(m, 1.0 / m))
            streams = {
                name: root.substream(cell_key).substream(k)
                for k, name in enumerate(SAMPLER_ORDER)
            }
            probe_budget = n * (math.ceil(math.log2(m)) + 1) if m > 1 else n
            ccf_budget = n + m - 1
            depth_budget = math.ceil(math.log2(n)) + 1 if n > 1 else 1
            dac_mean_budget = 4.0 * n * (1.0 + math.log2(m / n + 1.0))
            ccf_max = bin_max = dac_max = depth_max = 0
            dac_probes = []
            violations = []
            for _ in range(trials):
                s = OpStats()
                ccf_sampler(table, n, streams["ccf"], stats=s)
                ccf_max = max(ccf_max, s.comparisons)
                if s.comparisons > ccf_budget:
                    violations.append(f"ccf comparisons {s.comparisons} > {ccf_budget}")
                s = OpStats()
                binary_sampler(table, n, streams["binary"], stats=s)
                bin_max = max(bin_max, s.probes)
                if s.probes > probe_budget:
                    violations.append(f"binary probes {s.probes} > {probe_budget}")
                s = OpStats()
                dac_sampler(table, n, streams["dac"], stats=s)
                dac_max = max(dac_max, s.probes)
                depth_max = max(depth_max, s.max_depth)
                dac_probes.append(s.probes)
                if s.probes > probe_budget:
                    violations.append(f"dac probes {s.probes} > {probe_budget}")
                if s.max_depth > depth_budget:
                    violations.append(f"dac depth {s.max_depth} > {depth_budget}")
            dac_mean = float(np.mean(dac_probes))
            if dac_mean > dac_mean_budget:
                violations.append(f"dac mean probes {dac_mean:.1f} > {dac_mean_budget:.1f}")
            cells.append(ComplexityCell(
                n=n, ratio=ratio, m=m, trials=trials,
                ccf_max_comparisons=ccf_max, ccf_budget=ccf_budget,
                binary_max_probes=bin_max, dac_max_probes=dac_max,
                probe_budget=probe_budget, dac_max_depth=depth_max,
                depth_budget=depth_budget, dac_mean_probes=dac_mean,
                dac_mean_budget=dac_mean_budget, violations=violations,
            ))
    return cells
