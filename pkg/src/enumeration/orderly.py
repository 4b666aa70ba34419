"""Isomorph-free generation of cubic multigraphs by canonical augmentation.

Connected classes on N + 2 vertices grow from connected classes on N
vertices by one insertion:

    EDGE     subdivide two edges (or two copies of one edge), join the new vertices
    DIGON    subdivide one edge twice, double the edge between the new vertices
    PENDANT  subdivide one edge, hang a new looped vertex on the new vertex

Each insertion is undone by a reduction of the child: deleting the new
edge and smoothing its ends, or removing the pendant with its support.
Graphs with a loop are reduced at a pendant, the others at a non-bridge
edge of highest multiplicity. A child is kept only when the inserted
reduction lies in the automorphism orbit of its canonical reduction, so
every class has exactly one parent class. Disconnected classes are
multisets of connected ones.
"""

import time
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from ..configuration.model import fiber_size_class, matching_count
from ..halfedge import CubicMultigraph, canonical_form, is_simple
from ..halfedge.canonical import vertex_invariants
from ..utils import check_cap, config, get_logger, parallel_map
from ..utils.errors import DomainError
from .result import EnumerationResult

logger = get_logger(__name__)

FILTERS = ("all", "connected", "simple")

Slot = Tuple[int, int]

SEEDS = (
    CubicMultigraph(2, ((0, 1, 3),), (0, 0)),
    CubicMultigraph(2, ((0, 1, 1),), (1, 1)),
)


class Insertion(str, Enum):
    DIGON = "digon"
    EDGE = "edge"
    PENDANT = "pendant"


class Reduction(str, Enum):
    EDGE = "edge"
    PENDANT = "pendant"


Candidate = Tuple[Insertion, Tuple[Slot, ...]]
Site = Tuple[Reduction, Tuple[int, ...]]


def _slot(u: int, v: int) -> Slot:
    return (u, v) if u <= v else (v, u)


def _endpoints(graph: CubicMultigraph) -> List[Slot]:
    """One (u, v) entry per edge copy; a loop is (v, v)."""
    endpoints = [(u, v) for u, v, m in graph.edges for _ in range(m)]
    endpoints.extend((v, v) for v, loops in enumerate(graph.loops) for _ in range(loops))
    return endpoints


def _slots(graph: CubicMultigraph) -> List[Tuple[Slot, int]]:
    slots = [((u, v), m) for u, v, m in graph.edges]
    slots.extend(((v, v), 1) for v, loops in enumerate(graph.loops) if loops)
    return sorted(slots)


def _candidates(graph: CubicMultigraph) -> List[Candidate]:
    slots = _slots(graph)
    candidates: List[Candidate] = []
    for i, (slot, multiplicity) in enumerate(slots):
        candidates.append((Insertion.DIGON, (slot,)))
        candidates.append((Insertion.PENDANT, (slot,)))
        if multiplicity >= 2:
            candidates.append((Insertion.EDGE, (slot, slot)))
        for other, _ in slots[i + 1:]:
            candidates.append((Insertion.EDGE, (slot, other)))
    return candidates


def _image(candidate: Candidate, images: Sequence[int]) -> Candidate:
    kind, slots = candidate
    return kind, tuple(sorted(_slot(images[u], images[v]) for u, v in slots))


def _orbit_representatives(graph: CubicMultigraph, maps: Sequence[Sequence[int]]) -> List[Candidate]:
    """One candidate per automorphism orbit: the least of its images."""
    candidates = _candidates(graph)
    if len(maps) <= 1:
        return candidates
    return [c for c in candidates if all(c <= _image(c, images) for images in maps)]


def insert(graph: CubicMultigraph, candidate: Candidate) -> Tuple[CubicMultigraph, Site]:
    """Child graph on n + 2 vertices and the reduction that undoes the insertion."""
    kind, slots = candidate
    n = graph.n_vertices
    x, y = n, n + 1
    endpoints = _endpoints(graph)
    for slot in slots:
        endpoints.remove(slot)
    if kind is Insertion.EDGE:
        (a, b), (c, d) = slots
        endpoints += [(a, x), (x, b), (c, y), (y, d), (x, y)]
        site: Site = (Reduction.EDGE, (x, y))
    elif kind is Insertion.DIGON:
        (a, b), = slots
        endpoints += [(a, x), (x, y), (x, y), (y, b)]
        site = (Reduction.EDGE, (x, y))
    else:
        (a, b), = slots
        endpoints += [(a, x), (x, b), (x, y), (y, y)]
        site = (Reduction.PENDANT, (y,))
    return CubicMultigraph.from_edges(n + 2, endpoints), site


def _preferred_sites(graph: CubicMultigraph) -> List[Site]:
    """Reductions of the preferred kind: pendants, else edges of the top multiplicity."""
    looped = [v for v, loops in enumerate(graph.loops) if loops]
    if looped:
        return [(Reduction.PENDANT, (v,)) for v in looped]
    doubled = [(Reduction.EDGE, (u, v)) for u, v, m in graph.edges if m == 2]
    if doubled:
        return doubled
    bridges = {_slot(u, v) for u, v in nx.bridges(graph.to_networkx(simple=True))}
    return [(Reduction.EDGE, (u, v)) for u, v, _ in graph.edges if (u, v) not in bridges]


def _site_invariant(graph: CubicMultigraph, site: Site, invariants: List[tuple]) -> tuple:
    kind, vertices = site
    if kind is Reduction.PENDANT:
        (support, _), = graph.neighbors[vertices[0]]
        return (invariants[support],)
    u, v = vertices
    return tuple(sorted((invariants[u], invariants[v]), reverse=True))


def _site_position(site: Site, position: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sorted((position[v] for v in site[1]), reverse=True))


def _map_site(site: Site, images: Sequence[int]) -> Site:
    kind, vertices = site
    return kind, tuple(sorted(images[v] for v in vertices))


def _accepts(child: CubicMultigraph, site: Site) -> Optional[bytes]:
    """Canonical code of child when site is its canonical reduction up to automorphism."""
    sites = _preferred_sites(child)
    if site not in sites:
        return None

    invariants = vertex_invariants(child.n_vertices, child.neighbors, child.loops, [0] * child.n_vertices)
    keyed = {s: _site_invariant(child, s, invariants) for s in sites}
    best_invariant = max(keyed.values())
    if keyed[site] != best_invariant:
        return None
    finalists = [s for s in sites if keyed[s] == best_invariant]

    form = canonical_form(child.n_vertices, child.neighbors, child.loops, invariants=invariants)
    # set the cached form so later code lookups on the child reuse it
    child.__dict__["canonical"] = form
    if len(finalists) > 1:
        position = form.position()
        chosen = max(finalists, key=lambda s: _site_position(s, position))
        if chosen != site and all(_map_site(site, images) != chosen for images in form.automorphism_maps):
            return None
    return form.code


def expand(parent: CubicMultigraph) -> List[CubicMultigraph]:
    """Accepted, pairwise non-isomorphic children of one connected parent, sorted by code."""
    maps = parent.canonical.automorphism_maps
    children: Dict[bytes, CubicMultigraph] = {}
    for candidate in _orbit_representatives(parent, maps):
        child, site = insert(parent, candidate)
        code = _accepts(child, site)
        if code is not None and code not in children:
            children[code] = child
    return [children[code] for code in sorted(children)]


@dataclass(frozen=True)
class _Level:
    n_vertices: int
    classes: Tuple[CubicMultigraph, ...]


def connected_levels(n: int, workers: int = 1) -> Iterator[_Level]:
    """Connected classes on 2, 4, ..., n vertices, one level at a time."""
    level = sorted(SEEDS, key=lambda graph: graph.canonical_code)
    yield _Level(2, tuple(level))
    for size in range(4, n + 1, 2):
        started = time.perf_counter()
        expanded = parallel_map(expand, level, workers)
        merged = {child.canonical_code: child for children in expanded for child in children}
        level = [merged[code] for code in sorted(merged)]
        logger.debug("Augmentation level done", n_vertices=size, classes=len(level),
                     parents=len(expanded), elapsed_seconds=time.perf_counter() - started)
        yield _Level(size, tuple(level))


def disjoint_union(graphs: Sequence[CubicMultigraph]) -> CubicMultigraph:
    endpoints: List[Slot] = []
    offset = 0
    for graph in graphs:
        endpoints.extend((u + offset, v + offset) for u, v in _endpoints(graph))
        offset += graph.n_vertices
    return CubicMultigraph.from_edges(offset, endpoints)


def _multisets(pool: Sequence[CubicMultigraph], n: int) -> Iterator[Tuple[CubicMultigraph, ...]]:
    """Multisets of pool members whose sizes add up to n; pool is sorted by size."""
    chosen: List[CubicMultigraph] = []

    def extend(start: int, remaining: int) -> Iterator[Tuple[CubicMultigraph, ...]]:
        if remaining == 0:
            yield tuple(chosen)
            return
        for i in range(start, len(pool)):
            if pool[i].n_vertices > remaining:
                break
            chosen.append(pool[i])
            yield from extend(i, remaining - pool[i].n_vertices)
            chosen.pop()

    yield from extend(0, n)


def enumerate_cubic_multigraphs(n: int, filter: str = "all", allow_loops: bool = True,
                                workers: Optional[int] = None) -> EnumerationResult:
    """One representative per isomorphism class of cubic multigraphs on n vertices.

    filter is one of all, connected or simple; allow_loops=False restricts
    to loopless graphs.
    """
    matching_count(n)
    if filter not in FILTERS:
        raise DomainError(f"unknown filter '{filter}', expected one of {', '.join(FILTERS)}")
    check_cap("max_enumeration_vertices", config.get_cap("max_enumeration_vertices"), n)
    workers = int(config.get_performance_config()["max_workers"] if workers is None else workers)

    def keep(graph: CubicMultigraph) -> bool:
        if filter == "simple" and not is_simple(graph):
            return False
        return allow_loops or graph.loop_count == 0

    started = time.perf_counter()
    pool: List[CubicMultigraph] = []
    for level in connected_levels(n, workers):
        pool.extend(graph for graph in level.classes if keep(graph))

    if filter == "connected":
        graphs = [graph for graph in pool if graph.n_vertices == n]
    else:
        graphs = [parts[0] if len(parts) == 1 else disjoint_union(parts) for parts in _multisets(pool, n)]

    classes = {graph.canonical_code: (graph, fiber_size_class(graph)) for graph in graphs}
    result = EnumerationResult.from_classes(n, "orderly", False, classes, filter)
    logger.log_enumeration("orderly", n, result.n_classes, time.perf_counter() - started,
                           filter=filter, allow_loops=allow_loops)
    return result
