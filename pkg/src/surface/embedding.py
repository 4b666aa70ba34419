"""Orientable embeddings of simple graphs given by rotation systems.

A rotation system fixes a cyclic order of the darts leaving every vertex.
Faces are traced by leaving a vertex along a dart, crossing to its reverse
and turning to the next dart in the rotation there. For a connected graph
with p vertices, q edges and F faces the embedding genus is
(2 - p + q - F) / 2, so the graph genus is reached by maximizing F.
"""

import math
import re
import time
from dataclasses import dataclass
from itertools import permutations, product
from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..halfedge.circuits import simple_girth
from ..utils import check_cap, config, get_logger, parallel_map
from ..utils.errors import DomainError, StructuralInputError

logger = get_logger(__name__)

Rotation = Tuple[int, ...]


@dataclass(frozen=True)
class _DartTables:
    """Integer dart layout of a simple graph.

    Dart 2i runs from u to v along edge i = (u, v) and dart 2i + 1 back.
    options[v] lists the (deg - 1)! cyclic orders of the darts out of v.
    """
    n_darts: int
    options: Tuple[Tuple[Rotation, ...], ...]


def simple_view(graph: nx.Graph) -> nx.Graph:
    """Simple graph on the same vertices: loops dropped, parallel edges merged."""
    simple = nx.Graph(graph)
    simple.remove_edges_from(list(nx.selfloop_edges(simple)))
    return simple


def rotation_system_count(graph: nx.Graph) -> int:
    return math.prod(math.factorial(max(degree - 1, 0)) for _, degree in graph.degree())


def _dart_tables(graph: nx.Graph, mirror_first: Optional[int] = None) -> _DartTables:
    index = {node: i for i, node in enumerate(graph.nodes)}
    out_darts: List[List[Tuple[int, int]]] = [[] for _ in index]
    for i, (a, b) in enumerate(graph.edges()):
        u, v = index[a], index[b]
        out_darts[u].append((v, 2 * i))
        out_darts[v].append((u, 2 * i + 1))

    options = []
    for v, darts in enumerate(out_darts):
        darts = [dart for _, dart in sorted(darts)]
        if not darts:
            options.append(((),))
            continue
        head, rest = darts[0], darts[1:]
        rotations = [(head,) + tail for tail in permutations(rest)]
        if v == mirror_first and len(darts) >= 3:
            # reversing every rotation preserves the face count
            rotations = [rotation for rotation in rotations if rotation[1] < rotation[-1]]
        options.append(tuple(rotations))
    return _DartTables(2 * graph.number_of_edges(), tuple(options))


def _face_count(n_darts: int, rotations: Sequence[Rotation]) -> int:
    successor = [0] * n_darts
    for rotation in rotations:
        for i, dart in enumerate(rotation):
            successor[dart] = rotation[(i + 1) % len(rotation)]
    seen = [False] * n_darts
    faces = 0
    for start in range(n_darts):
        if seen[start]:
            continue
        faces += 1
        dart = start
        while not seen[dart]:
            seen[dart] = True
            dart = successor[dart ^ 1]
    return faces


def _face_ceiling(p: int, q: int, girth: float) -> int:
    """Largest face count allowed by the girth and by parity of the Euler identity."""
    ceiling = q if math.isinf(girth) else min(q, (2 * q) // int(girth))
    ceiling = max(ceiling, 1)
    if (2 - p + q - ceiling) % 2:
        ceiling -= 1
    return ceiling


def _local_search(tables: _DartTables, target: int, restarts: int, seed: int) -> int:
    """Best face count found by randomized coordinate ascent over vertex rotations."""
    rng = np.random.default_rng(seed)
    n_vertices = len(tables.options)
    best = 0
    for _ in range(restarts):
        choice = [int(rng.integers(len(options))) for options in tables.options]
        current = _face_count(tables.n_darts, [tables.options[v][c] for v, c in enumerate(choice)])
        stale = 0
        while stale < 3 and current < target:
            improved = False
            for v in rng.permutation(n_vertices):
                scores = []
                for c in range(len(tables.options[v])):
                    choice[v] = c
                    scores.append(_face_count(
                        tables.n_darts, [tables.options[w][choice[w]] for w in range(n_vertices)]
                    ))
                top = max(scores)
                ties = [c for c, score in enumerate(scores) if score == top]
                choice[v] = int(ties[rng.integers(len(ties))])
                if top > current:
                    current, improved = top, True
            stale = 0 if improved else stale + 1
        best = max(best, current)
        if best >= target:
            break
    return best


@dataclass(frozen=True)
class _Branch:
    tables: _DartTables
    first: int
    first_choice: int
    target: int


def _exhaustive_branch(branch: _Branch) -> int:
    """Maximum face count over all rotation systems with one vertex fixed."""
    tables = branch.tables
    pools = list(tables.options)
    pools[branch.first] = (tables.options[branch.first][branch.first_choice],)
    best = 0
    for rotations in product(*pools):
        faces = _face_count(tables.n_darts, rotations)
        if faces > best:
            best = faces
            if best >= branch.target:
                break
    return best


def exact_graph_genus(graph: nx.Graph, dart_budget: Optional[int] = None,
                      workers: Optional[int] = None, seed: int = 0) -> int:
    """Minimum orientable genus of a connected graph over all rotation systems.

    Planar graphs return at once. Otherwise a seeded local search looks for
    an embedding meeting the girth bound on faces; only when it falls short
    are all rotation systems enumerated, one branch per rotation of the
    highest-degree vertex.
    """
    simple = simple_view(graph)
    if simple.number_of_nodes() == 0:
        return 0
    if not nx.is_connected(simple):
        raise DomainError("graph genus search needs a connected graph")

    budget = int(config.get_cap("max_rotation_systems") if dart_budget is None else dart_budget)
    requested = rotation_system_count(simple)
    check_cap("max_rotation_systems", budget, requested, "rotation systems to search")

    if nx.check_planarity(simple)[0]:
        return 0

    p, q = simple.number_of_nodes(), simple.number_of_edges()
    started = time.perf_counter()
    degrees = [degree for _, degree in simple.degree()]
    first = max(range(p), key=lambda i: (degrees[i], -i))
    tables = _dart_tables(simple, mirror_first=first)
    target = _face_ceiling(p, q, simple_girth(simple))

    search = config.get_search_config()
    faces = _local_search(tables, target, int(search["heuristic_restarts"]), seed)
    method = "local_search"
    if faces < target:
        workers = int(config.get_performance_config()["max_workers"] if workers is None else workers)
        branches = [_Branch(tables, first, c, target) for c in range(len(tables.options[first]))]
        faces = max(faces, max(parallel_map(_exhaustive_branch, branches, workers)))
        method = "exhaustive"

    genus = (2 - p + q - faces) // 2
    logger.debug("Graph genus computed", vertices=p, edges=q, genus=genus, method=method,
                 rotation_systems=requested, elapsed_seconds=time.perf_counter() - started)
    return genus


def embedding_genus(graph: nx.Graph, rotation: Mapping[Hashable, Sequence[Hashable]]) -> int:
    """Genus of the embedding given by rotation[v], the cyclic order of v's neighbors."""
    simple = simple_view(graph)
    index = {node: i for i, node in enumerate(simple.nodes)}
    dart_of: Dict[Tuple[int, int], int] = {}
    for i, (a, b) in enumerate(simple.edges()):
        dart_of[(index[a], index[b])] = 2 * i
        dart_of[(index[b], index[a])] = 2 * i + 1

    rotations = []
    for node in simple.nodes:
        order = list(rotation.get(node, ()))
        neighbors = set(simple.neighbors(node))
        if len(order) != len(neighbors) or set(order) != neighbors:
            raise StructuralInputError(f"rotation at {node!r} is not an ordering of its neighbors")
        rotations.append(tuple(dart_of[(index[node], index[w])] for w in order))

    faces = _face_count(2 * simple.number_of_edges(), rotations)
    components = nx.number_connected_components(simple)
    doubled = 2 * components - simple.number_of_nodes() + simple.number_of_edges() - faces
    return doubled // 2


_COMPLETE = re.compile(r"^K(\d)$")
_BIPARTITE = re.compile(r"^K(\d+),(\d+)$|^K(\d)(\d)$")


def builtin_graph(name: str) -> nx.Graph:
    """Named test graphs: Kn, Km,n (or Kmn), prism, petersen and diamond."""
    key = name.strip()
    complete = _COMPLETE.match(key)
    bipartite = _BIPARTITE.match(key)
    if complete:
        graph = nx.complete_graph(int(complete.group(1)))
    elif bipartite:
        m, n = (int(x) for x in bipartite.groups() if x is not None)
        graph = nx.complete_bipartite_graph(m, n)
    elif key.lower() == "prism":
        graph = nx.circular_ladder_graph(3)
    elif key.lower() == "petersen":
        graph = nx.petersen_graph()
    elif key.lower() == "diamond":
        graph = nx.diamond_graph()
    else:
        raise StructuralInputError(f"unknown builtin graph '{name}'")
    graph.name = key
    return graph
