"""Shared test utilities: replayable streams and independent oracles."""

from __future__ import annotations

import numpy as np


class ReplayStream:
    """Duck-typed stand-in for RngStream that serves a fixed sequence."""

    def __init__(self, values):
        self._values = list(float(v) for v in values)
        self.draws = 0

    def uniform(self):
        self.draws += 1
        return self._values.pop(0)

    def uniforms(self, k):
        k = int(k)
        self.draws += k
        out = np.array(self._values[:k], dtype=np.float64)
        if out.shape[0] != k:
            raise RuntimeError("replay stream exhausted")
        del self._values[:k]
        return out


def ks_statistic(values) -> float:
    """Kolmogorov-Smirnov distance between a sample and the uniform(0,1) CDF."""
    x = np.sort(np.asarray(values, dtype=np.float64))
    n = x.shape[0]
    grid = np.arange(1.0, n + 1.0)
    d_plus = np.max(grid / n - x)
    d_minus = np.max(x - (grid - 1.0) / n)
    return float(max(d_plus, d_minus))


def linear_scan_bulk(table, us) -> np.ndarray:
    """First index with cum >= u for each u, by an explicit linear scan.

    The mask-then-argmax form walks the whole cumulative array per query,
    so it shares no logic with any bisection or cursor strategy under test.
    """
    cum = table.cum
    us = np.asarray(us, dtype=np.float64)
    out = np.empty(us.shape[0], dtype=np.int64)
    for i in range(us.shape[0]):
        out[i] = np.argmax(cum >= us[i])
    return out


def enumerate_weight_tables(max_size, grid=(0.0, 1.0, 2.0)):
    """All weight vectors over the grid with at least one positive entry."""
    from itertools import product

    for m in range(1, max_size + 1):
        for combo in product(grid, repeat=m):
            if any(w > 0.0 for w in combo):
                yield np.array(combo, dtype=np.float64)


def boundary_query_set(table):
    """Strictly increasing probe values hitting every bucket and boundary."""
    cum = table.cum
    candidates = set()
    prev = 0.0
    for value in cum:
        if value > 0.0:
            candidates.add(value)           # exact boundary
        if value > prev:
            candidates.add((prev + value) / 2.0)  # interior of the bucket
        prev = value
    candidates.add(1e-12)
    candidates.add(1.0)
    return np.array(sorted(c for c in candidates if 0.0 < c <= 1.0))
