"""Cumulative weight tables and range-restricted upper-bound search.

A weight table stores the running sums W_j of a normalized discrete
distribution. Selecting the smallest j with W_j >= u for uniform u is
inverse-transform sampling; every sampler in this package reduces to
some strategy for that search.
"""

from __future__ import annotations

import numpy as np

__all__ = ["WeightTable", "build_weight_table", "upper_bound_search"]

# permitted |cum[-1] - 1| drift after normalization, before the top entry
# is forced to exactly 1; larger drift signals pathological magnitudes
_SUM_TOL = 1e-9


class WeightTable:
    """Immutable cumulative weights of a normalized discrete distribution.

    ``cum[j]`` is the total mass at indices <= j (0-based) and ``cum[-1]``
    is exactly 1.0, so every u <= 1 lands in range and the last bucket is
    a catch-all. Instances are read-only and freely shareable across
    threads; all searches are reentrant.
    """

    __slots__ = ("cum",)

    def __init__(self, cum):
        cum = np.ascontiguousarray(cum, dtype=np.float64)
        if cum.ndim != 1 or cum.size == 0:
            raise ValueError("empty distribution")
        if not np.isfinite(cum).all():
            raise ValueError("invalid weight")
        if cum[0] < 0.0 or (cum.size > 1 and np.any(np.diff(cum) < 0.0)):
            raise ValueError("cumulative weights must be non-decreasing from >= 0")
        if cum[-1] != 1.0:
            raise ValueError("cumulative weights must end at exactly 1")
        cum.flags.writeable = False
        self.cum = cum

    @property
    def size(self) -> int:
        return self.cum.shape[0]

    def __len__(self) -> int:
        return self.cum.shape[0]

    def weights(self) -> np.ndarray:
        """Per-index probabilities recovered from the cumulative sums."""
        return np.diff(self.cum, prepend=0.0)

    def __repr__(self):
        return f"WeightTable(size={self.size})"


def build_weight_table(raw_weights) -> WeightTable:
    """Normalize nonnegative weights into a :class:`WeightTable`.

    Single pass: cumulative sum, divide by the total, then force the top
    entry to exactly 1.0.

    Raises ``ValueError`` with message "empty distribution" for empty
    input, "invalid weight" for any negative/NaN/infinite entry,
    "degenerate distribution" when all weights are zero, and
    "accumulation overflow" when the normalized sum drifts further than
    1e-9 from 1.
    """
    raw = np.asarray(raw_weights, dtype=np.float64)
    if raw.ndim != 1 or raw.size == 0:
        raise ValueError("empty distribution")
    if not np.isfinite(raw).all() or np.any(raw < 0.0):
        raise ValueError("invalid weight")
    with np.errstate(over="ignore", invalid="ignore"):  # inf/inf drift is caught below
        total = raw.sum()
        if total == 0.0:
            raise ValueError("degenerate distribution")
        cum = np.cumsum(raw)
        cum /= total
    # negated <= so NaN (overflowed accumulation) also lands here
    if not abs(cum[-1] - 1.0) <= _SUM_TOL:
        raise ValueError("accumulation overflow")
    # rounding can push entries an ulp past 1 (e.g. trailing zero weights);
    # clip before pinning the top so the table stays non-decreasing
    np.minimum(cum, 1.0, out=cum)
    cum[-1] = 1.0
    return WeightTable(cum)


def upper_bound_search(table: WeightTable, lo: int, hi: int, x: float, stats=None) -> int:
    """Smallest index j in [lo, hi] with cum[j] >= x (hi if none qualifies).

    Classic bisection on the half-open invariant: the answer is always in
    [a, b], and each probe halves that span, so the probe count is at most
    ceil(log2(hi - lo + 1)) + 1. Callers must guarantee x <= cum[hi] for
    the "smallest qualifying index" reading; otherwise the loop clamps to
    hi. Pass an OpStats-like object as ``stats`` to count probes.
    """
    lo = int(lo)
    hi = int(hi)
    if lo > hi:
        raise ValueError("empty range")
    cum = table.cum
    if lo < 0 or hi >= cum.shape[0]:
        raise IndexError("search range outside table")
    a, b = lo, hi
    if stats is None:
        while a != b:
            m = (a + b) // 2
            if cum[m] < x:
                a = m + 1
            else:
                b = m
    else:
        probes = 0
        while a != b:
            m = (a + b) // 2
            probes += 1
            if cum[m] < x:
                a = m + 1
            else:
                b = m
        stats.probes += probes
    return a
