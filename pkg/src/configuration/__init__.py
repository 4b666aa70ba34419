"""Configuration model sampling, fiber sizes and Monte Carlo estimators."""

from .model import (
    asymptotic_labeled_graph_count,
    fiber_size_class,
    fiber_size_labeled,
    iter_pairings,
    labeled_class_size,
    make_rng,
    matching_count,
    poisson_mean,
    sample_pairing,
)
from .statistics import (
    SampleStats,
    UniformityResult,
    estimate_automorphism_fraction,
    estimate_circuit_stats,
    estimate_subgraph_copy_mean,
    exact_circuit_means,
    labeled_graph_count,
    uniformity_chi_square,
)

__all__ = [
    'matching_count', 'sample_pairing', 'iter_pairings', 'make_rng', 'fiber_size_labeled',
    'fiber_size_class', 'labeled_class_size', 'poisson_mean', 'asymptotic_labeled_graph_count',
    'SampleStats', 'UniformityResult', 'estimate_circuit_stats', 'estimate_automorphism_fraction',
    'estimate_subgraph_copy_mean', 'uniformity_chi_square', 'exact_circuit_means',
    'labeled_graph_count',
]
