"""Operation counts versus distribution size, independent of the clock.

Instrumented runs tally weight-vs-uniform comparisons (linear scans) and
bisection probes. Watching the counts while M/N grows shows each
sampler's complexity directly: the cursor merge is linear in M, the
binary sampler pays log2(M) per draw, and the divide-and-conquer sampler
pays only about log2(M/N + 1) per draw.
"""

import math

import numpy as np

from dacresample import OpStats, RngStream, binary_sampler, build_weight_table, ccf_sampler, dac_sampler

n = 500
print(f"drawing N = {n} samples from M components (equal weights)\n")
print(f"{'M':>9} {'ccf cmp':>9} {'bin probes':>11} {'dac probes':>11} "
      f"{'dac/draw':>9} {'log2(M/N+1)':>12}")
for ratio in (1, 4, 16, 64, 256, 1024):
    m = n * ratio
    table = build_weight_table(np.full(m, 1.0 / m))
    counts = {}
    for name, fn in (("ccf", ccf_sampler), ("binary", binary_sampler), ("dac", dac_sampler)):
        stats = OpStats()
        fn(table, n, RngStream(ratio), stats=stats)
        counts[name] = stats
    print(f"{m:>9} {counts['ccf'].comparisons:>9} {counts['binary'].probes:>11} "
          f"{counts['dac'].probes:>11} {counts['dac'].probes / n:>9.2f} "
          f"{math.log2(m / n + 1):>12.2f}")

print("\nhard bounds: ccf comparisons <= N + M - 1, probes <= N(ceil(log2 M) + 1),")
print("divide-and-conquer nesting <= ceil(log2 N) + 1")
stats = OpStats()
table = build_weight_table(np.full(n * 1024, 1.0 / (n * 1024)))
dac_sampler(table, n, RngStream(1), stats=stats)
print(f"observed nesting at N={n}: {stats.max_depth} <= {math.ceil(math.log2(n)) + 1}")
