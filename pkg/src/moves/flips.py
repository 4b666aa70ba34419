"""Flips of arcs in triangulated surfaces."""

import time
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..configuration.model import make_rng
from ..surface import CombinatorialMap, SurfaceInvariants, surface_invariants
from ..utils import config, get_logger
from ..utils.errors import DomainError, StructuralInputError, UnflippableArcError
from .elementary import MoveKind, MoveOutcome

logger = get_logger(__name__)


def flip(surface_map: CombinatorialMap, arc: Tuple[int, int]) -> CombinatorialMap:
    """Replace an arc by the other diagonal of the quadrilateral around it.

    With triangles (e, p, q) and (e', r, s) in sigma order the result has
    triangles (e, s, p) and (e', q, r); alpha is untouched, so {e, e'} is the
    new arc and every other gluing stays.
    """
    e, e_prime = arc
    sigma, alpha = surface_map.sigma, surface_map.alpha
    if not (0 <= e < surface_map.n_darts and alpha[e] == e_prime):
        raise StructuralInputError(f"({e}, {e_prime}) is not an arc of the map")
    if e_prime in (sigma[e], sigma[sigma[e]]):
        raise UnflippableArcError(f"arc ({e}, {e_prime}) has both sides in one triangle")

    p = sigma[e]
    q = sigma[p]
    r = sigma[e_prime]
    s = sigma[r]
    rotated = list(sigma)
    rotated[e], rotated[s], rotated[p] = s, p, e
    rotated[e_prime], rotated[q], rotated[r] = q, r, e_prime
    return CombinatorialMap(tuple(rotated), alpha)


def flip_neighbors(surface_map: CombinatorialMap, annotate: bool = False) -> List[MoveOutcome]:
    """One flip per arc."""
    outcomes = [
        MoveOutcome(flip(surface_map, arc), arc, MoveKind.FLIP)
        for arc in surface_map.arcs()
    ]
    if annotate:
        code = surface_map.canonical_code
        outcomes = [
            MoveOutcome(o.result, o.site, o.kind, o.result.canonical_code == code)
            for o in outcomes
        ]
    return outcomes


@dataclass(frozen=True)
class FlipWalkReport:
    n_triangles: int
    steps: int
    seed: int
    invariants: SurfaceInvariants
    distinct_classes: int
    invariant_failures: int
    double_flip_failures: int

    @property
    def passed(self) -> bool:
        return self.invariant_failures == 0 and self.double_flip_failures == 0


def random_flip_walk(surface_map: CombinatorialMap, steps: int,
                     seed: Optional[int] = None) -> FlipWalkReport:
    """Flip uniformly chosen arcs, checking invariants and the double-flip identity each step."""
    if steps < 0:
        raise DomainError(f"step count must be non-negative, got {steps}")
    seed = int(config.get_sampling_config()["default_seed"] if seed is None else seed)
    rng = make_rng(seed)
    started = time.perf_counter()

    reference = surface_invariants(surface_map)
    current = surface_map
    visited = {current.canonical_code}
    invariant_failures = double_flip_failures = 0
    for _ in range(steps):
        arcs = current.arcs()
        arc = arcs[int(rng.integers(len(arcs)))]
        flipped = flip(current, arc)
        if surface_invariants(flipped) != reference:
            invariant_failures += 1
        if flip(flipped, arc).canonical_code != current.canonical_code:
            double_flip_failures += 1
        current = flipped
        visited.add(current.canonical_code)

    report = FlipWalkReport(surface_map.n_triangles, steps, seed, reference, len(visited),
                            invariant_failures, double_flip_failures)
    logger.info("Flip walk finished", n_triangles=report.n_triangles, steps=steps, seed=seed,
                distinct_classes=report.distinct_classes,
                invariant_failures=invariant_failures, double_flip_failures=double_flip_failures,
                elapsed_seconds=time.perf_counter() - started)
    return report
