"""Command-line harness: timing sweeps, verification, and one-shot sampling.

Subcommands:

* ``bench``  -- run the (N, M/N) timing sweep and write the CSV.
* ``verify`` -- chi-square goodness of fit plus instrumented complexity
  bounds; exits nonzero if any check fails.
* ``sample`` -- read whitespace-separated weights from a file or stdin
  and emit sampled indices (0-based), one per line.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .bench import BenchConfig, run_benchmark, verify_complexity, verify_statistics
from .cdf import build_weight_table
from .randkit import RngStream
from .samplers import binary_sampler, ccf_sampler, dac_sampler

_SAMPLERS = {"dac": dac_sampler, "ccf": ccf_sampler, "binary": binary_sampler}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dacresample",
        description="Multinomial resampling benchmarks and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    bench = sub.add_parser("bench", help="timing sweep over (N, M/N) cells -> CSV")
    bench.add_argument("--n-min", type=int, default=100)
    bench.add_argument("--n-max", type=int, default=10_000)
    bench.add_argument("--n-points", type=int, default=10)
    bench.add_argument("--ratios", default="1,100,1000",
                       help="comma-separated M/N multipliers")
    bench.add_argument("--trials", type=int, default=1000)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--weights", choices=("dirichlet", "geometric", "engmf"),
                       default="engmf")
    bench.add_argument("--out", default="testresults.csv")
    bench.add_argument("--quick", action="store_true",
                       help="CI preset: trials 20, 5 N points")
    bench.add_argument("--warmup", type=int, default=0,
                       help="discard this many initial trials per cell")

    verify = sub.add_parser("verify", help="statistical + complexity checks")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--trials", type=int, default=50,
                        help="instrumented trials per complexity cell")

    sample = sub.add_parser("sample", help="sample 0-based indices from a weight file")
    sample.add_argument("weights_file", nargs="?", default="-",
                        help="whitespace-separated weights; '-' or omitted reads stdin")
    sample.add_argument("--sampler", choices=sorted(_SAMPLERS), default="dac")
    sample.add_argument("--n", type=int, default=None,
                        help="number of samples (default: number of weights)")
    sample.add_argument("--seed", type=int, default=0)
    return parser


def _cmd_bench(args) -> int:
    trials = 20 if args.quick else args.trials
    n_points = 5 if args.quick else args.n_points
    ratios = tuple(int(r) for r in args.ratios.split(","))
    config = BenchConfig(
        n_min=args.n_min, n_max=args.n_max, n_points=n_points, ratios=ratios,
        trials=trials, seed=args.seed, weight_source=args.weights,
        output_path=args.out, warmup=args.warmup,
    )
    records = run_benchmark(config)
    print(f"wrote {args.out}: {len(config.n_grid())} rows, "
          f"{len(records)} timed cells, {trials} trials each")
    return 0


def _cmd_verify(args) -> int:
    config = BenchConfig(trials=max(args.trials, 1), seed=args.seed)
    failed = False

    print("goodness of fit (1e6 draws from a 16-component table):")
    for rep in verify_statistics(config):
        status = "pass" if rep.passed else "FAIL"
        print(f"  {rep.sampler:7s} chi2={rep.chi_square:8.3f} dof={rep.dof} {status}")
        failed |= not rep.passed

    print("operation-count budgets (equal weights, instrumented):")
    for cell in verify_complexity(config, trials=config.trials):
        status = "pass" if cell.ok else "FAIL"
        print(
            f"  N={cell.n:5d} M={cell.m:8d} "
            f"ccf<={cell.ccf_budget} got {cell.ccf_max_comparisons}; "
            f"probes<={cell.probe_budget} got bin {cell.binary_max_probes} "
            f"dac {cell.dac_max_probes}; depth<={cell.depth_budget} got {cell.dac_max_depth}; "
            f"dac mean {cell.dac_mean_probes:.1f}<={cell.dac_mean_budget:.1f} {status}"
        )
        for v in cell.violations:
            print(f"    violation: {v}")
        failed |= not cell.ok

    print("verification", "FAILED" if failed else "passed")
    return 1 if failed else 0


def _cmd_sample(args) -> int:
    if args.weights_file == "-":
        text = sys.stdin.read()
    else:
        with open(args.weights_file) as fh:
            text = fh.read()
    tokens = text.split()
    if not tokens:
        print("error: empty distribution", file=sys.stderr)
        return 2
    table = build_weight_table(np.array(tokens, dtype=np.float64))
    n = table.size if args.n is None else args.n
    if n < 0:
        print("error: --n must be >= 0", file=sys.stderr)
        return 2
    indices = _SAMPLERS[args.sampler](table, n, RngStream(args.seed))
    sys.stdout.write("\n".join(str(int(i)) for i in indices))
    if n:
        sys.stdout.write("\n")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "bench":
        return _cmd_bench(args)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_sample(args)


if __name__ == "__main__":
    sys.exit(main())
