"""Monte Carlo estimators for circuit counts, automorphisms and subgraph copies.

Samples are drawn in fixed-size chunks. Chunk i uses its own generator
derived from (seed, i), so the merged result is the same whichever worker
count runs the chunks.
"""

import math
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Tuple

import networkx as nx
from scipy import stats

from ..halfedge import (
    CubicMultigraph,
    automorphism_count,
    build_from_pairing,
    count_circuits,
    count_subgraph_copies,
)
from ..utils import check_cap, config, get_logger
from ..utils.parallel import parallel_map
from ..utils.errors import DomainError
from .model import (
    iter_pairings,
    make_rng,
    matching_count,
    poisson_mean,
    sample_pairing,
)

logger = get_logger(__name__)


@dataclass
class SampleStats:
    """Accumulated statistics of X_{N,1..k_max} over a batch of samples."""
    n_vertices: int
    k_max: int
    seed: int
    n_samples: int = 0
    one_puncture: bool = False
    circuit_histograms: Dict[int, Counter] = field(default_factory=dict)
    cross_sums: Dict[Tuple[int, int], int] = field(default_factory=dict)
    automorphism_hits: int = 0
    automorphism_checked: int = 0
    subgraph_pattern: Optional[str] = None
    subgraph_total: int = 0
    attempts: int = 0

    def __post_init__(self):
        for k in range(1, self.k_max + 1):
            self.circuit_histograms.setdefault(k, Counter())
        for i in range(1, self.k_max + 1):
            for j in range(i + 1, self.k_max + 1):
                self.cross_sums.setdefault((i, j), 0)

    def record(self, graph: CubicMultigraph, pattern: Optional[nx.Graph] = None,
               track_automorphisms: bool = False) -> None:
        counts = {k: count_circuits(graph, k) for k in range(1, self.k_max + 1)}
        for k, value in counts.items():
            self.circuit_histograms[k][value] += 1
        for i, j in self.cross_sums:
            self.cross_sums[(i, j)] += counts[i] * counts[j]
        if track_automorphisms:
            self.automorphism_checked += 1
            if automorphism_count(graph) > 1:
                self.automorphism_hits += 1
        if pattern is not None:
            self.subgraph_total += count_subgraph_copies(graph, pattern)
        self.n_samples += 1

    def merge(self, other: "SampleStats") -> "SampleStats":
        """Combine two partial results for the same experiment."""
        if (self.n_vertices, self.k_max) != (other.n_vertices, other.k_max):
            raise DomainError("cannot merge statistics of different experiments")
        merged = SampleStats(
            n_vertices=self.n_vertices,
            k_max=self.k_max,
            seed=self.seed,
            n_samples=self.n_samples + other.n_samples,
            one_puncture=self.one_puncture,
            subgraph_pattern=self.subgraph_pattern or other.subgraph_pattern,
            automorphism_hits=self.automorphism_hits + other.automorphism_hits,
            automorphism_checked=self.automorphism_checked + other.automorphism_checked,
            subgraph_total=self.subgraph_total + other.subgraph_total,
            attempts=self.attempts + other.attempts,
        )
        for k in merged.circuit_histograms:
            merged.circuit_histograms[k] = self.circuit_histograms[k] + other.circuit_histograms[k]
        for key in merged.cross_sums:
            merged.cross_sums[key] = self.cross_sums[key] + other.cross_sums[key]
        return merged

    def _moment(self, k: int, power: int) -> float:
        histogram = self.circuit_histograms[k]
        return sum(value ** power * count for value, count in histogram.items()) / self.n_samples

    @property
    def circuit_means(self) -> Dict[int, float]:
        return {k: self._moment(k, 1) for k in self.circuit_histograms}

    @property
    def circuit_variances(self) -> Dict[int, float]:
        return {k: self._moment(k, 2) - self._moment(k, 1) ** 2 for k in self.circuit_histograms}

    @property
    def poisson_means(self) -> Dict[int, float]:
        return {k: float(poisson_mean(k)) for k in self.circuit_histograms}

    @property
    def z_scores(self) -> Dict[int, float]:
        """(mean - lambda_k) / sqrt(lambda_k / n), the Poisson standard score."""
        scores = {}
        for k, mean in self.circuit_means.items():
            reference = float(poisson_mean(k))
            scores[k] = (mean - reference) / math.sqrt(reference / self.n_samples)
        return scores

    @property
    def p_values(self) -> Dict[int, float]:
        return {k: float(2 * stats.norm.sf(abs(z))) for k, z in self.z_scores.items()}

    def correlation(self, i: int, j: int) -> float:
        """Empirical Pearson correlation of X_i and X_j; nan when either is constant."""
        i, j = min(i, j), max(i, j)
        means, variances = self.circuit_means, self.circuit_variances
        covariance = self.cross_sums[(i, j)] / self.n_samples - means[i] * means[j]
        scale = math.sqrt(variances[i] * variances[j])
        return covariance / scale if scale > 0 else math.nan

    @property
    def automorphism_fraction(self) -> Optional[float]:
        if not self.automorphism_checked:
            return None
        return self.automorphism_hits / self.automorphism_checked

    @property
    def subgraph_copy_mean(self) -> Optional[float]:
        if self.subgraph_pattern is None or not self.n_samples:
            return None
        return self.subgraph_total / self.n_samples

    @property
    def acceptance_rate(self) -> Optional[float]:
        """Share of uniform pairings with one puncture, seen by the rejection sampler."""
        if not self.one_puncture or not self.attempts:
            return None
        return self.n_samples / self.attempts


@dataclass(frozen=True)
class UniformityResult:
    n_vertices: int
    n_samples: int
    categories: int
    statistic: float
    p_value: float


@dataclass(frozen=True)
class _ChunkTask:
    n_vertices: int
    k_max: int
    seed: int
    chunk: int
    count: int
    one_puncture: bool = False
    pattern: Optional[nx.Graph] = None
    pattern_name: Optional[str] = None
    track_automorphisms: bool = False
    max_attempts: int = 1_000_000


def _chunk_plan(n_samples: int, chunk_size: int) -> List[Tuple[int, int]]:
    plan, start, chunk = [], 0, 0
    while start < n_samples:
        count = min(chunk_size, n_samples - start)
        plan.append((chunk, count))
        start += count
        chunk += 1
    return plan


def _sample_chunk(task: _ChunkTask) -> SampleStats:
    rng = make_rng(task.seed, task.chunk)
    partial = SampleStats(task.n_vertices, task.k_max, task.seed,
                          one_puncture=task.one_puncture, subgraph_pattern=task.pattern_name)
    if task.one_puncture:
        # the surface package depends on this one
        from ..surface.sampling import rejection_sample

    for _ in range(task.count):
        if task.one_puncture:
            surface_map, attempts = rejection_sample(task.n_vertices, rng, task.max_attempts)
            partial.attempts += attempts
            graph = surface_map.underlying_multigraph()
        else:
            graph = build_from_pairing(sample_pairing(task.n_vertices, rng=rng))
        partial.record(graph, task.pattern, task.track_automorphisms)
    return partial


def estimate_circuit_stats(n: int, k_max: int, n_samples: int, seed: Optional[int] = None,
                           one_puncture: bool = False, pattern: Optional[nx.Graph] = None,
                           pattern_name: Optional[str] = None, track_automorphisms: bool = False,
                           workers: Optional[int] = None,
                           max_attempts: Optional[int] = None) -> SampleStats:
    """Empirical law of the circuit counts X_{N,1..k_max} over n_samples graphs.

    With one_puncture the graphs are the duals of rejection-sampled
    one-puncture maps instead of plain configuration-model graphs.
    """
    matching_count(n)
    if k_max < 1:
        raise DomainError(f"k_max must be positive, got {k_max}")
    if n_samples < 1:
        raise DomainError(f"need at least one sample, got {n_samples}")
    check_cap("max_circuit_length", config.get_cap("max_circuit_length"), k_max)
    if one_puncture and n % 4 != 2:
        raise DomainError(f"N = {n} is not 2 mod 4; no one-puncture surface exists")

    sampling = config.get_sampling_config()
    seed = int(sampling["default_seed"] if seed is None else seed)
    workers = int(config.get_performance_config()["max_workers"] if workers is None else workers)
    max_attempts = int(sampling["max_attempts"] if max_attempts is None else max_attempts)
    if pattern is not None and pattern_name is None:
        pattern_name = "pattern"

    tasks = [
        _ChunkTask(n, k_max, seed, chunk, count, one_puncture, pattern, pattern_name,
                   track_automorphisms, max_attempts)
        for chunk, count in _chunk_plan(n_samples, int(sampling["chunk_size"]))
    ]
    started = time.perf_counter()
    partials = parallel_map(_sample_chunk, tasks, workers)

    result = partials[0]
    for partial in partials[1:]:
        result = result.merge(partial)
    logger.log_sampling(n, n_samples, time.perf_counter() - started,
                        seed=seed, chunks=len(tasks), workers=workers, one_puncture=one_puncture)
    return result


def estimate_automorphism_fraction(n: int, n_samples: int, seed: Optional[int] = None,
                                   workers: Optional[int] = None) -> float:
    """Fraction of sampled graphs with a nontrivial vertex automorphism."""
    result = estimate_circuit_stats(n, 1, n_samples, seed, track_automorphisms=True, workers=workers)
    return result.automorphism_fraction


def estimate_subgraph_copy_mean(n: int, pattern: nx.Graph, n_samples: int,
                                seed: Optional[int] = None, workers: Optional[int] = None) -> float:
    """Mean number of copies of pattern in a sampled graph."""
    result = estimate_circuit_stats(n, 1, n_samples, seed, pattern=pattern,
                                    pattern_name=getattr(pattern, "name", None) or "pattern",
                                    workers=workers)
    return result.subgraph_copy_mean


def uniformity_chi_square(n: int, n_samples: int, seed: Optional[int] = None) -> UniformityResult:
    """Chi-square goodness of fit of sampled pairings against the uniform law on Omega_N."""
    check_cap("max_literal_vertices", config.get_cap("max_literal_vertices"), n)
    index = {pairing.pairs: i for i, pairing in enumerate(iter_pairings(n))}
    seed = int(config.get_sampling_config()["default_seed"] if seed is None else seed)
    chunk_size = int(config.get_sampling_config()["chunk_size"])

    observed = [0] * len(index)
    for chunk, count in _chunk_plan(n_samples, chunk_size):
        rng = make_rng(seed, chunk)
        for _ in range(count):
            observed[index[sample_pairing(n, rng=rng).pairs]] += 1

    statistic, p_value = stats.chisquare(observed)
    return UniformityResult(n, n_samples, len(index), float(statistic), float(p_value))


def exact_circuit_means(n: int, k_max: int) -> Dict[int, Fraction]:
    """Exact means of X_{N,k} over all of Omega_N, from brute-force class masses."""
    from ..enumeration.brute import brute_force_classes

    result = brute_force_classes(n, oriented=False)
    total = matching_count(n)
    means = {}
    for k in range(1, k_max + 1):
        weighted = sum(
            mass * count_circuits(graph, k)
            for graph, mass in zip(result.representatives, result.class_masses)
        )
        means[k] = Fraction(weighted, total)
    return means


def labeled_graph_count(n: int) -> int:
    """|G_N|: vertex-labeled cubic multigraphs on N vertices, sum of N!/|Aut| over classes."""
    from ..enumeration.orderly import enumerate_cubic_multigraphs

    result = enumerate_cubic_multigraphs(n, "all")
    return sum(factorial(n) // automorphism_count(graph) for graph in result.representatives)
