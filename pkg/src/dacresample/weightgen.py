"""Weight-field generators for tests and benchmarks.

Besides two synthetic shapes (flat Dirichlet, geometric decay), this
module builds the posterior weight field of an ensemble Gaussian-mixture
measurement update: N prior particles crossed with N_Y likelihood kernel
centers give M = N * N_Y component weights, the realistic "many more
weights than samples" regime the divide-and-conquer sampler targets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .randkit import RngStream

__all__ = [
    "ScenarioParams",
    "dirichlet_uniform",
    "geometric_decay",
    "engmf_weights",
    "prior_particles",
    "laplace_measurements",
]

_OFFSET_COORD = 19  # the one prior-mean coordinate displaced to -3.5


@dataclass(frozen=True)
class ScenarioParams:
    """Range-measurement update scenario sized N particles x N_Y centers."""

    n_particles: int
    n_likelihood: int
    state_dim: int = 40
    measurement: float = 1.0
    meas_variance: float = 1e-2

    def __post_init__(self):
        if self.n_particles < 1 or self.n_likelihood < 1:
            raise ValueError("particle and likelihood counts must be >= 1")
        if self.state_dim <= _OFFSET_COORD:
            raise ValueError("state dimension must cover the offset coordinate")
        if self.meas_variance <= 0.0:
            raise ValueError("measurement variance must be positive")

    @property
    def n_weights(self) -> int:
        return self.n_particles * self.n_likelihood


def dirichlet_uniform(m: int, stream: RngStream) -> np.ndarray:
    """m iid standard exponentials: unnormalized flat Dirichlet weights."""
    m = int(m)
    if m < 1:
        raise ValueError("m must be >= 1")
    return -np.log(stream.uniforms(m))


def geometric_decay(m: int, rho: float) -> np.ndarray:
    """Weights rho**j for j = 0..m-1; small rho piles mass on low indices.

    A stress shape: the cursor-based sampler almost never advances, while
    search-based samplers still pay their full logarithmic cost.
    """
    m = int(m)
    if m < 1:
        raise ValueError("m must be >= 1")
    rho = float(rho)
    if not 0.0 < rho < 1.0:
        raise ValueError("rho must lie in (0, 1)")
    return rho ** np.arange(m, dtype=np.float64)


def _prior_mean(d: int) -> np.ndarray:
    mu = np.zeros(d)
    mu[_OFFSET_COORD] = -3.5
    return mu


def _prior_cov(d: int) -> np.ndarray:
    cov = np.eye(d)
    off = 0.5 * np.ones(d - 1)
    cov += np.diag(off, 1) + np.diag(off, -1)
    return cov


def prior_particles(params: ScenarioParams, stream: RngStream) -> np.ndarray:
    """(N, d) Gaussian prior draws via a Cholesky factor of the tridiagonal covariance."""
    d = params.state_dim
    chol = np.linalg.cholesky(_prior_cov(d))
    z = stream.normals((params.n_particles, d))
    return _prior_mean(d) + z @ chol.T


def laplace_measurements(params: ScenarioParams, stream: RngStream, k: int | None = None) -> np.ndarray:
    """k inverse-CDF draws from the Laplace likelihood around the measurement.

    Scale sqrt(R/2) makes the variance exactly R.
    """
    k = params.n_likelihood if k is None else int(k)
    v = stream.uniforms(k) - 0.5  # open (-1/2, 1/2), so log1p never sees -1
    scale = math.sqrt(params.meas_variance / 2.0)
    return params.measurement - scale * np.sign(v) * np.log1p(-2.0 * np.abs(v))


def engmf_weights(params: ScenarioParams, stream: RngStream) -> np.ndarray:
    """Unnormalized posterior weights of the Gaussian-sum update, length N * N_Y.

    Each (particle i, center j) pair is scored by a Gaussian in the
    predicted range h(x_i) = ||x_i||: the variance blends the likelihood
    kernel bandwidth (1-d Silverman factor on the center spread) with the
    prior kernel covariance pushed through the range gradient x_i/||x_i||
    (d-dimensional Silverman factor on the particle sample covariance).
    Rows vary the particle, columns the center; flattened C-order. The
    field is scaled so its largest entry is 1, which keeps every exp in
    range; normalization is left to the weight table.
    """
    n = params.n_particles
    n_y = params.n_likelihood
    d = params.state_dim

    x = prior_particles(params, stream)
    h = np.linalg.norm(x, axis=1)

    ys = laplace_measurements(params, stream)
    if n_y == 1:
        r_tilde = params.meas_variance
    else:
        r_tilde = float(np.var(ys, ddof=1))

    beta_y_sq = (4.0 / (3.0 * n_y)) ** 0.4
    beta_x_sq = (4.0 / ((d + 2.0) * n)) ** (2.0 / (d + 4.0))
    if n > 1:
        kernel_cov = beta_x_sq * np.cov(x, rowvar=False)
        q = np.einsum("ij,ij->i", x @ kernel_cov, x)
        h_sq = h * h
        q = np.divide(q, h_sq, out=np.zeros_like(q), where=h_sq > 0.0)
        q = np.maximum(q, 0.0)  # clip sample-covariance roundoff
    else:
        q = np.zeros(1)

    var = beta_y_sq * r_tilde + q
    if not np.isfinite(var).all() or np.any(var <= 0.0):
        raise ValueError("scenario degenerate")

    logw = ys[None, :] - h[:, None]
    np.square(logw, out=logw)
    logw *= -0.5 / var[:, None]
    logw -= 0.5 * np.log(2.0 * np.pi * var)[:, None]
    logw -= logw.max()
    np.exp(logw, out=logw)
    w = logw.ravel()
    if not np.isfinite(w).all():
        raise ValueError("scenario degenerate")
    return w
