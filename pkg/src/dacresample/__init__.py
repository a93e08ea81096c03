"""Multinomial resampling from large discrete distributions.

Draws N indices from an M-component weighted distribution by inverse
transform over the cumulative weights. Ships three interchangeable
samplers (binary search, Carpenter-Clifford-Fearnhead, divide-and-conquer),
sorted-uniform generation in O(N), weight-field generators, and a timing
and verification harness. All samplers agree exactly, index for index,
with a linear-scan reference; they differ only in search strategy and
therefore cost.
"""

from .cdf import WeightTable, build_weight_table, upper_bound_search
from .randkit import RngStream, sorted_uniforms, uniform_open
from .samplers import (
    OpStats,
    binary_sampler,
    ccf_match,
    ccf_sampler,
    dac_match,
    dac_sampler,
    linear_oracle,
)
from .weightgen import (
    ScenarioParams,
    dirichlet_uniform,
    engmf_weights,
    geometric_decay,
    laplace_measurements,
    prior_particles,
)

__all__ = [
    "RngStream",
    "uniform_open",
    "sorted_uniforms",
    "WeightTable",
    "build_weight_table",
    "upper_bound_search",
    "OpStats",
    "linear_oracle",
    "binary_sampler",
    "ccf_match",
    "ccf_sampler",
    "dac_match",
    "dac_sampler",
    "ScenarioParams",
    "dirichlet_uniform",
    "geometric_decay",
    "engmf_weights",
    "prior_particles",
    "laplace_measurements",
]

__version__ = "0.1.0"
