"""Multinomial samplers over a shared cumulative weight table.

Three strategies for matching N uniforms against M cumulative weights:

* binary sampler: one full-range bisection per draw, O(N log2 M);
* CCF (Carpenter-Clifford-Fearnhead): sorted uniforms merged against the
  table with a persistent cursor, O(M + N);
* divide-and-conquer: recursively match the median sorted uniform by a
  range-restricted bisection, then split both arrays, O(N log2(M/N + 1)).

Each sorted-input strategy is exposed both as a *matcher* (uniforms in,
indices out; deterministic, directly comparable against the linear-scan
reference) and as a *sampler* (RNG stream in). Hot paths are compiled
with numba; passing an :class:`OpStats` accumulator switches to a pure
Python twin that counts comparisons, probes, and recursion depth without
polluting timing runs. Indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .cdf import WeightTable, upper_bound_search
from .randkit import RngStream, sorted_uniforms

__all__ = [
    "OpStats",
    "linear_oracle",
    "binary_sampler",
    "ccf_match",
    "ccf_sampler",
    "dac_match",
    "dac_sampler",
]


@dataclass
class OpStats:
    """Operation tallies for verifying complexity claims without a clock."""

    comparisons: int = 0  # weight-vs-uniform comparisons in linear scans
    probes: int = 0       # bisection midpoint evaluations
    max_depth: int = 0    # deepest divide-and-conquer scope nesting


def linear_oracle(table: WeightTable, u: float, stats=None) -> int:
    """Reference inverse CDF: first j with cum[j] >= u by linear scan from 0.

    Ground truth for all equivalence tests; intentionally the dumbest
    possible implementation.
    """
    u = float(u)
    if not 0.0 < u <= 1.0:
        raise ValueError("u must lie in (0, 1]")
    cum = table.cum
    j = 0
    c = 1
    while cum[j] < u:  # cum[-1] == 1.0 >= u bounds the scan
        j += 1
        c += 1
    if stats is not None:
        stats.comparisons += c
    return j


def _check_sorted_open(u: np.ndarray) -> None:
    if u.shape[0] == 0:
        return
    if u[0] <= 0.0 or u[-1] > 1.0:
        raise ValueError("uniforms must lie in (0, 1]")
    if u.shape[0] > 1 and not np.all(np.diff(u) > 0.0):
        raise ValueError("input not sorted")


# ---------------------------------------------------------------------------
# compiled kernels (fast path, no instrumentation)

@njit(cache=True)
def _upper_bound_nb(cum, lo, hi, x):
    a, b = lo, hi
    while a != b:
        m = (a + b) // 2
        if cum[m] < x:
            a = m + 1
        else:
            b = m
    return a


@njit(cache=True)
def _binary_kernel(cum, us, out):
    hi = cum.shape[0] - 1
    for i in range(us.shape[0]):
        out[i] = _upper_bound_nb(cum, 0, hi, us[i])


@njit(cache=True)
def _ccf_kernel(cum, us, out):
    j = 0
    for i in range(us.shape[0]):
        x = us[i]
        while cum[j] < x:
            j += 1
        out[i] = j


@njit(cache=True)
def _dac_kernel(cum, us, out):
    n = us.shape[0]
    # explicit worklist; depth <= ceil(log2 n) + 1 keeps the stack tiny
    stack = np.empty((128, 4), dtype=np.int64)
    stack[0, 0] = 0
    stack[0, 1] = n - 1
    stack[0, 2] = 0
    stack[0, 3] = cum.shape[0] - 1
    top = 1
    while top > 0:
        top -= 1
        a_u = stack[top, 0]
        b_u = stack[top, 1]
        a_w = stack[top, 2]
        b_w = stack[top, 3]
        if a_u == b_u:
            out[a_u] = _upper_bound_nb(cum, a_w, b_w, us[a_u])
        elif a_w == b_w:
            for i in range(a_u, b_u + 1):
                out[i] = a_w
        else:
            m_u = (a_u + b_u) // 2
            m_w = _upper_bound_nb(cum, a_w, b_w, us[m_u])
            out[m_u] = m_w
            if m_u < b_u:
                stack[top, 0] = m_u + 1
                stack[top, 1] = b_u
                stack[top, 2] = m_w
                stack[top, 3] = b_w
                top += 1
            if m_u > a_u:
                stack[top, 0] = a_u
                stack[top, 1] = m_u - 1
                stack[top, 2] = a_w
                stack[top, 3] = m_w
                top += 1


def warm_kernels() -> None:
    """Trigger JIT compilation so first-call cost never lands in a timing."""
    cum = np.array([0.5, 1.0])
    us = np.array([0.25, 0.75])
    out = np.empty(2, dtype=np.int64)
    _binary_kernel(cum, us, out)
    _ccf_kernel(cum, us, out)
    _dac_kernel(cum, us, out)


# ---------------------------------------------------------------------------
# matchers

def ccf_match(u, table: WeightTable, stats: OpStats | None = None, check: bool = True) -> np.ndarray:
    """Match sorted uniforms against the table with a forward cursor.

    Single pass: the cursor j only ever advances, so the total number of
    weight-vs-uniform comparisons is at most N + M - 1.
    """
    u = np.ascontiguousarray(u, dtype=np.float64)
    if check:
        _check_sorted_open(u)
    n = u.shape[0]
    out = np.empty(n, dtype=np.int64)
    if n == 0:
        return out
    if stats is None:
        _ccf_kernel(table.cum, u, out)
        return out
    cum = table.cum.tolist()
    c = 0
    j = 0
    for i, x in enumerate(u.tolist()):
        while cum[j] < x:
            j += 1
            c += 1
        c += 1  # the closing comparison that stopped the scan
        out[i] = j
    stats.comparisons += c
    return out


def dac_match(u, table: WeightTable, stats: OpStats | None = None, check: bool = True) -> np.ndarray:
    """Match sorted uniforms by recursive halving of both arrays.

    The median uniform is located with a bisection restricted to the
    current weight scope; the match splits uniforms and weights into two
    subproblems sharing the boundary weight index. Scope nesting is at
    most ceil(log2 N) + 1 regardless of the weight layout.
    """
    u = np.ascontiguousarray(u, dtype=np.float64)
    if check:
        _check_sorted_open(u)
    n = u.shape[0]
    out = np.empty(n, dtype=np.int64)
    if n == 0:
        return out
    if stats is None:
        _dac_kernel(table.cum, u, out)
    else:
        _dac_instrumented(u, table, out, stats)
    return out


def _dac_instrumented(u, table, out, stats):
    n = u.shape[0]
    work = [(0, n - 1, 0, table.size - 1, 1)]
    while work:
        a_u, b_u, a_w, b_w, depth = work.pop()
        if depth > stats.max_depth:
            stats.max_depth = depth
        if a_u == b_u:
            out[a_u] = upper_bound_search(table, a_w, b_w, u[a_u], stats=stats)
        elif a_w == b_w:
            out[a_u:b_u + 1] = a_w
        else:
            m_u = (a_u + b_u) // 2
            m_w = upper_bound_search(table, a_w, b_w, u[m_u], stats=stats)
            out[m_u] = m_w
            # push right first so the left scope is processed first
            if m_u < b_u:
                work.append((m_u + 1, b_u, m_w, b_w, depth + 1))
            if m_u > a_u:
                work.append((a_u, m_u - 1, a_w, m_w, depth + 1))


# ---------------------------------------------------------------------------
# samplers

def binary_sampler(table: WeightTable, n: int, stream: RngStream,
                   stats: OpStats | None = None) -> np.ndarray:
    """n independent draws, each by a full-range bisection; draw order kept."""
    n = int(n)
    out = np.empty(n, dtype=np.int64)
    if n == 0:
        return out
    us = stream.uniforms(n)
    if stats is None:
        _binary_kernel(table.cum, us, out)
        return out
    hi = table.size - 1
    for i in range(n):
        out[i] = upper_bound_search(table, 0, hi, us[i], stats=stats)
    return out


def ccf_sampler(table: WeightTable, n: int, stream: RngStream,
                stats: OpStats | None = None) -> np.ndarray:
    """Sorted uniforms + cursor merge: multinomial(w, n) in O(M + N)."""
    u = sorted_uniforms(stream, n)
    return ccf_match(u, table, stats=stats, check=False)


def dac_sampler(table: WeightTable, n: int, stream: RngStream,
                stats: OpStats | None = None) -> np.ndarray:
    """Sorted uniforms + divide-and-conquer: multinomial(w, n) in O(N log2(M/N + 1))."""
    u = sorted_uniforms(stream, n)
    return dac_match(u, table, stats=stats, check=False)
