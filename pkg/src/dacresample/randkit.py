"""Seeded random streams and sorted-uniform generation.

The sorted-uniform generator produces the order statistics of n iid
uniform(0,1) draws directly, in O(n), by normalizing cumulative sums of
exponential spacings. No sort is involved, which is what makes the
merge-style samplers in :mod:`dacresample.samplers` linear-time friendly.
"""

from __future__ import annotations

import numpy as np

__all__ = ["RngStream", "uniform_open", "sorted_uniforms"]


class RngStream:
    """Deterministic uniform/normal source with independent substreams.

    A fixed seed reproduces the exact same sequence across runs and
    platforms (PCG64 under a SeedSequence). Streams are single-owner:
    hand one to at most one consumer at a time; parallel work should use
    :meth:`substream` children, which are statistically independent for
    distinct keys.
    """

    __slots__ = ("seed", "draws", "_spawn_key", "_gen")

    def __init__(self, seed: int, _spawn_key: tuple[int, ...] = ()):
        self.seed = int(seed)
        self._spawn_key = tuple(int(k) for k in _spawn_key)
        seq = np.random.SeedSequence(self.seed, spawn_key=self._spawn_key)
        self._gen = np.random.Generator(np.random.PCG64(seq))
        self.draws = 0  # uniform variates served so far

    def substream(self, key: int) -> "RngStream":
        """Independent stream derived from this one; distinct keys never overlap."""
        return RngStream(self.seed, self._spawn_key + (int(key),))

    def uniform(self) -> float:
        """One double strictly inside (0, 1), advancing the stream."""
        self.draws += 1
        u = self._gen.random()
        while u == 0.0:  # random() covers [0, 1); exclude the single 0 point
            u = self._gen.random()
        return u

    def uniforms(self, k: int) -> np.ndarray:
        """k doubles strictly inside (0, 1) as a float64 array."""
        k = int(k)
        self.draws += k
        out = self._gen.random(k)
        while k and out.min() == 0.0:  # probability 2**-53 per draw
            zero = out == 0.0
            out[zero] = self._gen.random(int(zero.sum()))
        return out

    def normals(self, shape) -> np.ndarray:
        """Standard-normal draws (not counted in ``draws``)."""
        return self._gen.standard_normal(shape)

    def __repr__(self):
        return f"RngStream(seed={self.seed}, substream={self._spawn_key})"


def uniform_open(stream: RngStream) -> float:
    """Single uniform draw in the open interval (0, 1)."""
    return stream.uniform()


def sorted_uniforms(stream: RngStream, n: int) -> np.ndarray:
    """n strictly increasing uniform(0,1) order statistics in O(n).

    Draws exactly n + 1 uniforms, maps them to exponential spacings
    z = -log(u), and returns the normalized partial sums Z_i / Z_{n+1}
    for i = 1..n. The output always satisfies 0 < u[0] < ... < u[-1] < 1;
    the one-in-1e16 float ties this construction can produce are repaired
    by single-ulp nudges.
    """
    n = int(n)
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return np.empty(0, dtype=np.float64)
    z = stream.uniforms(n + 1)
    np.log(z, out=z)
    np.negative(z, out=z)
    z_min = z.min()
    np.cumsum(z, out=z)
    total = z[-1]
    u = z[:-1]
    u /= total
    # every spacing above ~45 ulp of the total provably survives the
    # cumsum-and-divide rounding with strict order and open bounds intact;
    # only near-collapses (probability ~n^2 * 1e-14) need the exact check
    if not z_min > 1e-14 * total:
        bad = u[0] <= 0.0 or u[-1] >= 1.0
        if not bad and n > 1:
            bad = not np.all(np.diff(u) > 0.0)
        if bad:
            _repair_open_strict(u)
    return u


def _repair_open_strict(u: np.ndarray) -> None:
    """Restore strict order inside (0, 1) after float rounding collapses it."""
    n = u.shape[0]
    lo = 0.0
    for i in range(n):
        if u[i] <= lo:
            u[i] = np.nextafter(lo, 1.0)
        lo = u[i]
    hi = 1.0
    for i in range(n - 1, -1, -1):
        if u[i] >= hi:
            u[i] = np.nextafter(hi, 0.0)
        hi = u[i]
