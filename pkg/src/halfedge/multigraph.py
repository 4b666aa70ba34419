"""Cubic multigraphs built from half-edge pairings."""

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple

import networkx as nx

from ..utils.errors import StructuralInputError
from .canonical import CanonicalForm, canonical_form, connected_components
from .pairing import Pairing, vertex_of

Edge = Tuple[int, int, int]


@dataclass(frozen=True)
class CubicMultigraph:
    """Vertex-labeled cubic multigraph.

    edges holds (u, v, m) with u < v and multiplicity m in 1..3; loops[v] is
    0 or 1. Every vertex satisfies sum of multiplicities + 2 * loops = 3.
    """
    n_vertices: int
    edges: Tuple[Edge, ...]
    loops: Tuple[int, ...]

    def __post_init__(self):
        n = self.n_vertices
        if n < 1:
            raise StructuralInputError("a cubic multigraph needs at least one vertex")
        if len(self.loops) != n:
            raise StructuralInputError(f"expected {n} loop counts, got {len(self.loops)}")

        edges = tuple(sorted((int(u), int(v), int(m)) for u, v, m in self.edges))
        degree = [2 * loops for loops in self.loops]
        seen = set()
        for u, v, m in edges:
            if not (0 <= u < v < n):
                raise StructuralInputError(f"edge ({u}, {v}) must satisfy 0 <= u < v < {n}")
            if (u, v) in seen:
                raise StructuralInputError(f"edge ({u}, {v}) listed twice")
            if not 1 <= m <= 3:
                raise StructuralInputError(f"multiplicity {m} of ({u}, {v}) outside 1..3")
            seen.add((u, v))
            degree[u] += m
            degree[v] += m

        for v, loops in enumerate(self.loops):
            if loops not in (0, 1):
                raise StructuralInputError(f"vertex {v} has {loops} loops; a cubic vertex admits at most one")
            if degree[v] != 3:
                raise StructuralInputError(f"vertex {v} has degree {degree[v]}, expected 3")

        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "loops", tuple(int(x) for x in self.loops))

    @classmethod
    def from_pairing(cls, pairing: Pairing) -> "CubicMultigraph":
        return build_from_pairing(pairing)

    @classmethod
    def from_edges(cls, n_vertices: int, endpoints: Iterable[Sequence[int]]) -> "CubicMultigraph":
        """Build from a list of endpoint pairs; repeats add multiplicity, (v, v) is a loop."""
        counts: Counter = Counter()
        loops = [0] * n_vertices
        for u, v in endpoints:
            if u == v:
                loops[u] += 1
            else:
                counts[(min(u, v), max(u, v))] += 1
        return cls(n_vertices, tuple((u, v, m) for (u, v), m in counts.items()), tuple(loops))

    @cached_property
    def multiplicity_map(self) -> Dict[Tuple[int, int], int]:
        return {(u, v): m for u, v, m in self.edges}

    def multiplicity(self, u: int, v: int) -> int:
        """Number of parallel edges between u and v (loops when u == v)."""
        if u == v:
            return self.loops[u]
        return self.multiplicity_map.get((min(u, v), max(u, v)), 0)

    @cached_property
    def neighbors(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        adjacency: List[List[Tuple[int, int]]] = [[] for _ in range(self.n_vertices)]
        for u, v, m in self.edges:
            adjacency[u].append((v, m))
            adjacency[v].append((u, m))
        return tuple(tuple(sorted(row)) for row in adjacency)

    @property
    def n_edges(self) -> int:
        """Edge count with multiplicity, loops included."""
        return sum(m for _, _, m in self.edges) + sum(self.loops)

    @property
    def loop_count(self) -> int:
        return sum(self.loops)

    @property
    def non_loop_edge_count(self) -> int:
        return sum(m for _, _, m in self.edges)

    @cached_property
    def canonical(self) -> CanonicalForm:
        # cached_property writes once per instance; concurrent first reads compute the same value
        return canonical_form(self.n_vertices, self.neighbors, self.loops)

    @property
    def canonical_code(self) -> bytes:
        return self.canonical.code

    def components(self) -> List[List[int]]:
        return connected_components(self.n_vertices, self.neighbors)

    def to_pairing(self) -> Pairing:
        """Deterministic pairing realizing this labeled graph."""
        next_slot = [3 * v for v in range(self.n_vertices)]
        pairs = []

        def take(v: int) -> int:
            slot = next_slot[v]
            next_slot[v] += 1
            return slot

        for v, loops in enumerate(self.loops):
            for _ in range(loops):
                pairs.append((take(v), take(v)))
        for u, v, m in self.edges:
            for _ in range(m):
                pairs.append((take(u), take(v)))
        return Pairing(self.n_vertices, tuple(pairs))

    def relabel(self, images: Sequence[int]) -> "CubicMultigraph":
        """Graph with vertex v renamed images[v]."""
        endpoints = []
        for u, v, m in self.edges:
            endpoints.extend([(images[u], images[v])] * m)
        for v, loops in enumerate(self.loops):
            endpoints.extend([(images[v], images[v])] * loops)
        return CubicMultigraph.from_edges(self.n_vertices, endpoints)

    def to_networkx(self, simple: bool = False) -> nx.Graph:
        """networkx view; simple=True drops loops and collapses parallel edges."""
        graph = nx.Graph() if simple else nx.MultiGraph()
        graph.add_nodes_from(range(self.n_vertices))
        for u, v, m in self.edges:
            if simple:
                graph.add_edge(u, v)
            else:
                for _ in range(m):
                    graph.add_edge(u, v)
        if not simple:
            for v, loops in enumerate(self.loops):
                for _ in range(loops):
                    graph.add_edge(v, v)
        return graph


def build_from_pairing(pairing: Pairing) -> CubicMultigraph:
    """Glue half-edge pairs into edges; a pair inside one vertex is a loop."""
    counts: Counter = Counter()
    loops = [0] * pairing.n_vertices
    for a, b in pairing.pairs:
        u, v = vertex_of(a), vertex_of(b)
        if u == v:
            loops[u] += 1
        else:
            counts[(min(u, v), max(u, v))] += 1
    return CubicMultigraph(
        pairing.n_vertices,
        tuple((u, v, m) for (u, v), m in counts.items()),
        tuple(loops),
    )


def canonical_code(graph: CubicMultigraph) -> bytes:
    return graph.canonical_code


def automorphism_count(graph: CubicMultigraph) -> int:
    """Order of the group of vertex permutations preserving multiplicities and loops."""
    return graph.canonical.automorphisms


def is_connected(graph: CubicMultigraph) -> bool:
    return nx.is_connected(graph.to_networkx(simple=True))


def is_simple(graph: CubicMultigraph) -> bool:
    return graph.loop_count == 0 and all(m == 1 for _, _, m in graph.edges)
