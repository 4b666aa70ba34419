"""Triangulations of the once-punctured surface of genus g with a single vertex."""

import time
from math import factorial
from typing import Dict, Tuple

from ..surface import CombinatorialMap, map_from_pairing, reverse_rotations
from ..utils import check_cap, config, get_logger
from ..utils.errors import DomainError
from .orderly import enumerate_cubic_multigraphs
from .result import EnumerationResult

logger = get_logger(__name__)


def oriented_class_mass(surface_map: CombinatorialMap) -> int:
    """Pairings giving a map isomorphic to this one: N! 3^N / |Aut|."""
    n = surface_map.n_triangles
    return factorial(n) * 3 ** n // surface_map.automorphism_count


def enumerate_one_vertex_triangulations(g: int) -> EnumerationResult:
    """Map classes on 4g - 2 triangles with exactly one boundary walk.

    The dual graph of such a map is connected and loopless, so every
    loopless connected class is tried under all 2^N choices of rotation.
    """
    if g < 1:
        raise DomainError(f"genus must be at least 1, got {g}")
    n = 4 * g - 2
    check_cap("max_flip_triangles", config.get_cap("max_flip_triangles"), n)

    started = time.perf_counter()
    graphs = enumerate_cubic_multigraphs(n, "connected", allow_loops=False)
    classes: Dict[bytes, Tuple[CombinatorialMap, int]] = {}
    for graph in graphs.representatives:
        pairing = graph.to_pairing()
        for mask in range(2 ** n):
            reversed_vertices = [v for v in range(n) if mask >> v & 1]
            surface_map = map_from_pairing(reverse_rotations(pairing, reversed_vertices))
            if surface_map.n_punctures != 1:
                continue
            code = surface_map.canonical_code
            if code not in classes:
                classes[code] = (surface_map, oriented_class_mass(surface_map))

    result = EnumerationResult.from_classes(n, "orderly", True, classes, "one_puncture")
    logger.log_enumeration("one_vertex_triangulations", n, result.n_classes,
                           time.perf_counter() - started, genus=g, graph_classes=graphs.n_classes)
    return result
