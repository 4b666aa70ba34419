"""Modular curve, pants and flip graphs of surfaces at small genus."""

import time
from collections import Counter
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Callable, Dict, List, Optional, Set, Tuple

import networkx as nx

from ..enumeration import enumerate_cubic_multigraphs, enumerate_one_vertex_triangulations
from ..halfedge import CubicMultigraph
from ..moves import flip_neighbors, pants_move_neighbors
from ..surface import sample_one_puncture
from ..utils import check_cap, config, get_logger, parallel_map
from ..utils.errors import DomainError, InvariantViolation

logger = get_logger(__name__)

CodePair = Tuple[bytes, bytes]


class ModularKind(str, Enum):
    CURVE = "curve"
    PANTS = "pants"
    FLIP = "flip"


@dataclass
class ModularGraph:
    """Finite quotient graph whose vertices are canonical codes.

    directed_counts[(a, b)] is the number of moves from a landing in class b
    (a != b); the multiplicity of the edge {a, b} is the larger of the two
    directions. Moves from a back into a are loops. move_degrees[a] counts
    every move out of a.
    """
    kind: ModularKind
    genus_param: int
    vertices: List[bytes]
    representatives: Dict[bytes, object]
    labels: Dict[bytes, str]
    directed_counts: Dict[CodePair, int]
    loop_counts: Dict[bytes, int]
    move_degrees: Dict[bytes, int]
    extra_loops: Dict[bytes, int] = field(default_factory=dict)

    def __post_init__(self):
        known = set(self.vertices)
        for a, b in self.directed_counts:
            if a not in known or b not in known:
                raise InvariantViolation("edge endpoint is not a listed vertex")

    @property
    def edge_multiplicities(self) -> Dict[CodePair, int]:
        multiplicities: Dict[CodePair, int] = {}
        for (a, b), count in self.directed_counts.items():
            key = (a, b) if a < b else (b, a)
            multiplicities[key] = max(multiplicities.get(key, 0), count)
        return dict(sorted(multiplicities.items()))

    @property
    def simple_edges(self) -> Set[CodePair]:
        return {pair for pair, m in self.edge_multiplicities.items() if m > 0}

    @property
    def total_loops(self) -> Dict[bytes, int]:
        return {v: self.loop_counts.get(v, 0) + self.extra_loops.get(v, 0) for v in self.vertices}

    def neighbors(self, code: bytes) -> List[bytes]:
        found = {b for a, b in self.directed_counts if a == code}
        found |= {a for a, b in self.directed_counts if b == code}
        return sorted(found)

    def check_symmetry(self) -> bool:
        """Every move A -> B has a move B -> A."""
        return all(self.directed_counts.get((b, a), 0) > 0 for a, b in self.directed_counts)

    def to_networkx(self, simple: bool = True) -> nx.Graph:
        """Simple view, or a MultiGraph carrying multiplicities and loops."""
        graph = nx.Graph() if simple else nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for (a, b), m in self.edge_multiplicities.items():
            for _ in range(1 if simple else m):
                graph.add_edge(a, b)
        if not simple:
            for v, loops in self.total_loops.items():
                for _ in range(loops):
                    graph.add_edge(v, v)
        graph.name = f"{self.kind.value}_g{self.genus_param}"
        return graph

    def with_loops(self, code: bytes, extra: int) -> "ModularGraph":
        """Copy with extra loops at one vertex."""
        if code not in self.labels:
            raise DomainError("unknown vertex code")
        extra_loops = dict(self.extra_loops)
        extra_loops[code] = extra_loops.get(code, 0) + extra
        return replace(self, extra_loops=extra_loops)


def curve_code(k: int) -> bytes:
    """Class code of a curve: 0 nonseparating, k for a k | g-k separating curve."""
    return b"nonsep" if k == 0 else b"sep:%04d" % k


def build_modular_curve_graph(g: int) -> ModularGraph:
    """Complete graph on floor(g/2) + 1 curve types, with loops.

    Every vertex has a loop except, for even g, the curve cutting the surface
    into two halves of genus g/2.
    """
    if g < 2:
        raise DomainError(f"surface genus must be at least 2, got {g}")
    types = list(range(g // 2 + 1))
    labels = {curve_code(k): "nonseparating" if k == 0 else f"separating:{k}|{g - k}" for k in types}
    vertices = sorted(labels)
    directed = {(a, b): 1 for a in vertices for b in vertices if a != b}
    loops = {curve_code(k): 0 if (g % 2 == 0 and k == g // 2) else 1 for k in types}
    degrees = {v: len(vertices) - 1 + loops[v] for v in vertices}
    return ModularGraph(ModularKind.CURVE, g, vertices, dict(labels), labels, directed, loops, degrees)


def necklace_graph(n: int) -> CubicMultigraph:
    """Ring of n/2 double edges joined by single edges; n = 2 gives the triple edge."""
    if n < 2 or n % 2:
        raise DomainError(f"N must be even and at least 2, got {n}")
    endpoints = []
    for i in range(n // 2):
        endpoints.extend([(2 * i, 2 * i + 1)] * 2)
        endpoints.append((2 * i + 1, (2 * i + 2) % n))
    return CubicMultigraph.from_edges(n, endpoints)


def _pants_moves(graph: CubicMultigraph) -> List[Tuple[bytes, CubicMultigraph]]:
    return [(o.result.canonical_code, o.result) for o in pants_move_neighbors(graph)]


def _flip_moves(surface_map) -> List[Tuple[bytes, object]]:
    return [(o.result.canonical_code, o.result) for o in flip_neighbors(surface_map)]


def _breadth_first(kind: ModularKind, g: int, start, expand: Callable,
                   workers: int) -> ModularGraph:
    """Explore classes level by level; the frontier is sorted by code, so the result is order-free."""
    start_code = start.canonical_code
    representatives = {start_code: start}
    directed: Counter = Counter()
    loops: Counter = Counter()
    degrees: Dict[bytes, int] = {}
    frontier = [start_code]
    while frontier:
        results = parallel_map(expand, [representatives[code] for code in frontier], workers)
        discovered = {}
        for code, outcomes in zip(frontier, results):
            degrees[code] = len(outcomes)
            for target, item in outcomes:
                if target == code:
                    loops[code] += 1
                    continue
                directed[(code, target)] += 1
                if target not in representatives and target not in discovered:
                    discovered[target] = item
        representatives.update(discovered)
        frontier = sorted(discovered)

    vertices = sorted(representatives)
    labels = {code: code.hex()[:16] for code in vertices}
    return ModularGraph(kind, g, vertices, representatives, labels, dict(directed),
                        {v: loops.get(v, 0) for v in vertices}, degrees)


def _verify_closure(graph: ModularGraph, expected: List[bytes]) -> None:
    if graph.vertices != sorted(expected):
        raise InvariantViolation(
            f"{graph.kind.value} graph of genus {graph.genus_param} reached {len(graph.vertices)} "
            f"classes, enumeration gives {len(expected)}"
        )


def build_modular_pants_graph(g: int, workers: Optional[int] = None,
                              verify: bool = True) -> ModularGraph:
    """Elementary-move graph on connected cubic multigraphs with 2g - 2 vertices."""
    if g < 2:
        raise DomainError(f"surface genus must be at least 2, got {g}")
    n = 2 * g - 2
    check_cap("max_pants_vertices", config.get_cap("max_pants_vertices"), n)
    workers = int(config.get_performance_config()["max_workers"] if workers is None else workers)

    started = time.perf_counter()
    graph = _breadth_first(ModularKind.PANTS, g, necklace_graph(n), _pants_moves, workers)
    if verify:
        _verify_closure(graph, enumerate_cubic_multigraphs(n, "connected").class_codes)
    logger.info("Modular pants graph built", genus=g, vertices=len(graph.vertices),
                edges=len(graph.simple_edges), elapsed_seconds=time.perf_counter() - started)
    return graph


def build_modular_flip_graph(g: int, seed: Optional[int] = None, workers: Optional[int] = None,
                             verify: bool = True, max_attempts: Optional[int] = None) -> ModularGraph:
    """Flip graph on one-vertex triangulations of the once-punctured genus-g surface."""
    if g < 1:
        raise DomainError(f"surface genus must be at least 1, got {g}")
    n = 4 * g - 2
    check_cap("max_flip_triangles", config.get_cap("max_flip_triangles"), n)
    workers = int(config.get_performance_config()["max_workers"] if workers is None else workers)

    started = time.perf_counter()
    start = sample_one_puncture(n, seed, max_attempts)
    graph = _breadth_first(ModularKind.FLIP, g, start, _flip_moves, workers)
    if verify:
        _verify_closure(graph, enumerate_one_vertex_triangulations(g).class_codes)
    logger.info("Modular flip graph built", genus=g, vertices=len(graph.vertices),
                edges=len(graph.simple_edges), elapsed_seconds=time.perf_counter() - started)
    return graph
