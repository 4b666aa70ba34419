"""Brute-force class oracle over all pairings of Omega_N.

The weighted walk pairs the smallest free half-edge h, at vertex u, with a
partner. Partners related by a relabeling that fixes the partial pairing lead
to the same multiset of classes, so only one of them is followed and the
branch carries their number as a weight:

* untouched vertices other than u are interchangeable, and so are their
  three half-edges (by rotation, which also preserves maps);
* unoriented only: free half-edges at one touched vertex are
  interchangeable, as are the two other half-edges of an untouched u.

Every leaf is a complete pairing standing for `weight` pairings, and the
weights add up to (3N-1)!!.
"""

import time
from typing import Dict, Iterator, List, Tuple

from ..configuration.model import iter_pairings, matching_count
from ..halfedge import Pairing, build_from_pairing
from ..surface import map_from_pairing
from ..utils import check_cap, config, get_logger
from ..utils.errors import InvariantViolation
from .result import EnumerationResult, Representative

logger = get_logger(__name__)


def weighted_pairings(n: int, oriented: bool) -> Iterator[Tuple[Pairing, int]]:
    """Representative pairings with the number of pairings each stands for."""
    total = 3 * n
    mates = [-1] * total
    free_at = [3] * n

    def partners(h: int) -> List[Tuple[int, int]]:
        u = h // 3
        choices: List[Tuple[int, int]] = []
        fresh = [w for w in range(n) if w != u and free_at[w] == 3]
        if fresh:
            choices.append((3 * fresh[0], 3 * len(fresh)))
        for w in range(n):
            if w == u or free_at[w] in (0, 3):
                continue
            free = [x for x in range(3 * w, 3 * w + 3) if mates[x] == -1]
            if oriented:
                choices.extend((x, 1) for x in free)
            else:
                choices.append((free[0], len(free)))
        same = [x for x in range(3 * u, 3 * u + 3) if x != h and mates[x] == -1]
        if same:
            if oriented or free_at[u] != 3:
                choices.extend((x, 1) for x in same)
            else:
                choices.append((same[0], 2))
        return choices

    def extend(first: int, weight: int) -> Iterator[Tuple[Pairing, int]]:
        while first < total and mates[first] != -1:
            first += 1
        if first == total:
            yield Pairing.from_partners(mates), weight
            return
        for other, multiplicity in partners(first):
            mates[first], mates[other] = other, first
            free_at[first // 3] -= 1
            free_at[other // 3] -= 1
            yield from extend(first + 1, weight * multiplicity)
            free_at[first // 3] += 1
            free_at[other // 3] += 1
            mates[first] = mates[other] = -1

    yield from extend(0, 1)


def brute_force_classes(n: int, oriented: bool = False, literal: bool = False) -> EnumerationResult:
    """Classes of cubic multigraphs (or of maps, when oriented) reached from Omega_N.

    literal=True visits every pairing once instead of the weighted walk.
    """
    expected = matching_count(n)
    check_cap("max_brute_vertices", config.get_cap("max_brute_vertices"), n)
    if literal:
        check_cap("max_literal_vertices", config.get_cap("max_literal_vertices"), n)
        source = ((pairing, 1) for pairing in iter_pairings(n))
    else:
        source = weighted_pairings(n, oriented)

    started = time.perf_counter()
    classes: Dict[bytes, List] = {}
    code_cache: Dict[tuple, bytes] = {}
    covered = 0
    for pairing, weight in source:
        covered += weight
        if oriented:
            item: Representative = map_from_pairing(pairing)
            code = item.canonical_code
        else:
            item = build_from_pairing(pairing)
            key = (item.edges, item.loops)
            code = code_cache.get(key)
            if code is None:
                code = code_cache[key] = item.canonical_code
        if code in classes:
            classes[code][1] += weight
        else:
            classes[code] = [item, weight]

    if covered != expected:
        raise InvariantViolation(f"walk covered {covered} pairings, expected {expected}")

    result = EnumerationResult.from_classes(
        n, "brute", oriented, {code: (rep, mass) for code, (rep, mass) in classes.items()}
    )
    logger.log_enumeration("brute", n, result.n_classes, time.perf_counter() - started,
                           oriented=oriented, literal=literal)
    return result
