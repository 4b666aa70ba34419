"""The configuration model: uniform pairings and exact fiber sizes."""

from fractions import Fraction
from math import factorial, prod
from typing import Iterator, List, Optional

import numpy as np

from ..halfedge import CubicMultigraph, Pairing, automorphism_count
from ..utils.errors import DomainError


def _require_even(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 2 or n % 2:
        raise DomainError(f"N must be even and at least 2, got {n}")


def matching_count(n: int) -> int:
    """|Omega_N| = (3N-1)!!."""
    _require_even(n)
    return prod(range(1, 3 * n, 2))


def make_rng(seed: int, *spawn_key: int) -> np.random.Generator:
    """Counter-based generator for a seed, split by spawn key."""
    sequence = np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in spawn_key))
    return np.random.Generator(np.random.Philox(sequence))


def sample_pairing(n: int, seed: Optional[int] = None,
                   rng: Optional[np.random.Generator] = None) -> Pairing:
    """Uniform pairing: shuffle all half-edges and pair consecutive entries."""
    _require_even(n)
    if rng is None:
        rng = make_rng(0 if seed is None else seed)
    shuffled = rng.permutation(3 * n).reshape(-1, 2)
    return Pairing(n, tuple((int(a), int(b)) for a, b in shuffled))


def iter_pairings(n: int) -> Iterator[Pairing]:
    """Every pairing of Omega_N, one at a time."""
    _require_even(n)
    total = 3 * n
    mates: List[int] = [-1] * total

    def extend(first: int) -> Iterator[Pairing]:
        while first < total and mates[first] != -1:
            first += 1
        if first == total:
            yield Pairing.from_partners(mates)
            return
        for other in range(first + 1, total):
            if mates[other] != -1:
                continue
            mates[first], mates[other] = other, first
            yield from extend(first + 1)
            mates[first] = mates[other] = -1

    yield from extend(0)


def fiber_size_labeled(graph: CubicMultigraph) -> int:
    """Pairings that yield exactly this vertex-labeled graph.

    6^N over the product of m! for every multi-edge and loops! * 2^loops per
    vertex; a triple edge contributes 3!, not 2 * 2.
    """
    denominator = 1
    for _, _, m in graph.edges:
        denominator *= factorial(m)
    for loops in graph.loops:
        denominator *= factorial(loops) * 2 ** loops
    return 6 ** graph.n_vertices // denominator


def labeled_class_size(graph: CubicMultigraph) -> int:
    """Number of vertex-labeled graphs isomorphic to graph: N!/|Aut|."""
    return factorial(graph.n_vertices) // automorphism_count(graph)


def fiber_size_class(graph: CubicMultigraph) -> int:
    """Pairings whose graph is isomorphic to graph."""
    return labeled_class_size(graph) * fiber_size_labeled(graph)


def poisson_mean(k: int) -> Fraction:
    """Limit mean of the k-circuit count: 2^k / 2k."""
    if k < 1:
        raise DomainError(f"circuit length must be positive, got {k}")
    return Fraction(2 ** k, 2 * k)


def asymptotic_labeled_graph_count(n: int) -> float:
    """e^2 (3N-1)!! / 6^N, the leading-order size of the labeled graph set."""
    return float(np.exp(2.0)) * matching_count(n) / 6 ** n
