"""Circuit counts, girth and subgraph copy counts."""

import math
from collections import Counter, deque
from math import comb
from typing import Dict, List, Sequence, Tuple, Union

import networkx as nx

from ..utils.config import config
from ..utils.errors import DomainError, check_cap
from .multigraph import CubicMultigraph

Pattern = Union[CubicMultigraph, nx.Graph]


def count_circuits(graph: CubicMultigraph, k: int) -> int:
    """Number of k-circuits, counted as unlabeled edge subsets.

    A 1-circuit is a loop and a 2-circuit a pair of parallel edges. For k >= 3
    every simple k-cycle of the underlying graph contributes the product of
    the multiplicities along it.
    """
    if k < 1:
        raise DomainError(f"circuit length must be positive, got {k}")
    if k == 1:
        return graph.loop_count
    if k == 2:
        return sum(comb(m, 2) for _, _, m in graph.edges)
    if k > graph.n_vertices:
        return 0

    neighbors = graph.neighbors
    total = 0
    for start in range(graph.n_vertices):
        # cycles are rooted at their smallest vertex, found once per direction
        stack = [(start, 1, 1, (start,))]
        while stack:
            current, length, weight, path = stack.pop()
            for w, m in neighbors[current]:
                if w == start and length == k:
                    total += weight * m
                elif w > start and w not in path and length < k:
                    stack.append((w, length + 1, weight * m, path + (w,)))
    return total // 2


def girth(graph: CubicMultigraph) -> Union[int, float]:
    """Shortest circuit length; math.inf for forests."""
    if graph.loop_count:
        return 1
    if any(m > 1 for _, _, m in graph.edges):
        return 2
    return simple_girth(graph.to_networkx(simple=True))


def simple_girth(graph: nx.Graph) -> Union[int, float]:
    """Girth of a simple graph by breadth-first search from every vertex."""
    best = math.inf
    for root in graph.nodes:
        depth = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * depth[v] + 1 >= best:
                break
            for w in graph.neighbors(v):
                if w == v:
                    continue
                if w not in depth:
                    depth[w] = depth[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, depth[v] + depth[w] + 1)
    return best


def _pattern_structure(pattern: Pattern) -> Tuple[int, Dict[Tuple[int, int], int], List[int]]:
    """Vertex count, multiplicities and loops of a pattern, relabeled 0..n-1."""
    if isinstance(pattern, CubicMultigraph):
        return pattern.n_vertices, dict(pattern.multiplicity_map), list(pattern.loops)

    nodes = sorted(pattern.nodes)
    index = {node: i for i, node in enumerate(nodes)}
    multiplicities: Counter = Counter()
    loops = [0] * len(nodes)
    for a, b in pattern.edges():
        u, v = index[a], index[b]
        if u == v:
            loops[u] += 1
        else:
            multiplicities[(min(u, v), max(u, v))] += 1
    return len(nodes), dict(multiplicities), loops


def _embedding_order(n: int, multiplicities: Dict[Tuple[int, int], int]) -> List[int]:
    """Pattern vertices ordered so each one, where possible, follows a neighbor."""
    adjacency = {v: set() for v in range(n)}
    for u, v in multiplicities:
        adjacency[u].add(v)
        adjacency[v].add(u)
    order, placed = [], set()
    for root in range(n):
        if root in placed:
            continue
        queue = deque([root])
        placed.add(root)
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(adjacency[v]):
                if w not in placed:
                    placed.add(w)
                    queue.append(w)
    return order


def _count_embeddings(host_n: int, host_mult, host_loops: Sequence[int], host_adjacency,
                      pat_n: int, pat_mult: Dict[Tuple[int, int], int], pat_loops: Sequence[int]) -> int:
    """Injective vertex maps weighted by the number of edge subsets they select."""
    order = _embedding_order(pat_n, pat_mult)
    position = {v: i for i, v in enumerate(order)}
    # constraints on each pattern vertex from earlier-placed vertices
    earlier: List[List[Tuple[int, int]]] = [[] for _ in order]
    for (u, v), m in pat_mult.items():
        later, first = (u, v) if position[u] > position[v] else (v, u)
        earlier[position[later]].append((first, m))

    image = {}
    used = set()

    def extend(i: int) -> int:
        if i == len(order):
            return 1
        p = order[i]
        constraints = earlier[i]
        if constraints:
            anchor = image[constraints[0][0]]
            candidates = host_adjacency[anchor]
        else:
            candidates = range(host_n)
        total = 0
        for x in candidates:
            if x in used or host_loops[x] < pat_loops[p]:
                continue
            weight = comb(host_loops[x], pat_loops[p])
            for q, m in constraints:
                available = host_mult(x, image[q])
                if available < m:
                    weight = 0
                    break
                weight *= comb(available, m)
            if not weight:
                continue
            image[p] = x
            used.add(x)
            total += weight * extend(i + 1)
            used.discard(x)
            del image[p]
        return total

    return extend(0)


def count_subgraph_copies(graph: CubicMultigraph, pattern: Pattern) -> int:
    """Number of sub-multigraphs of graph isomorphic to pattern."""
    pat_n, pat_mult, pat_loops = _pattern_structure(pattern)
    check_cap("max_pattern_vertices", config.get_cap("max_pattern_vertices"), pat_n)
    if pat_n > graph.n_vertices:
        return 0

    host_adjacency = [tuple(w for w, _ in row) for row in graph.neighbors]
    embeddings = _count_embeddings(
        graph.n_vertices, graph.multiplicity, graph.loops, host_adjacency,
        pat_n, pat_mult, pat_loops,
    )
    if not embeddings:
        return 0

    def pattern_mult(u: int, v: int) -> int:
        if u == v:
            return pat_loops[u]
        return pat_mult.get((min(u, v), max(u, v)), 0)

    pattern_adjacency = [[] for _ in range(pat_n)]
    for u, v in pat_mult:
        pattern_adjacency[u].append(v)
        pattern_adjacency[v].append(u)
    automorphisms = _count_embeddings(
        pat_n, pattern_mult, pat_loops, pattern_adjacency,
        pat_n, pat_mult, pat_loops,
    )
    return embeddings // automorphisms
