"""Elementary moves on dual graphs of pants decompositions."""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple, Union

from ..halfedge import CubicMultigraph, build_from_pairing, is_connected, vertex_of
from ..surface import CombinatorialMap
from ..utils.errors import DomainError


class MoveKind(str, Enum):
    REWIRE_A = "rewire-A"
    REWIRE_B = "rewire-B"
    LOOP_MOVE = "loop-move"
    FLIP = "flip"


@dataclass(frozen=True)
class MoveOutcome:
    """One neighbor produced by a move at a site (a half-edge pair or an arc)."""
    result: Union[CubicMultigraph, CombinatorialMap]
    site: Tuple[int, int]
    kind: MoveKind
    is_self: Optional[bool] = None


def _other_slots(half_edge: int) -> Tuple[int, int]:
    base = 3 * vertex_of(half_edge)
    a, b = (h for h in range(base, base + 3) if h != half_edge)
    return a, b


def pants_move_neighbors(graph: CubicMultigraph, annotate: bool = False) -> List[MoveOutcome]:
    """All elementary moves of a connected cubic multigraph.

    Half-edges follow graph.to_pairing(). At a non-loop edge (hu, hv) let
    a < b be the other slots at u and c < d those at v. Variant A hands b to
    v and c to u; variant B hands b to v and d to u. A loop gives a loop-move
    that leaves the graph unchanged.
    """
    if not is_connected(graph):
        raise DomainError("elementary moves need a connected graph")

    pairing = graph.to_pairing()
    outcomes: List[MoveOutcome] = []
    for hu, hv in pairing.pairs:
        if vertex_of(hu) == vertex_of(hv):
            outcomes.append(MoveOutcome(graph, (hu, hv), MoveKind.LOOP_MOVE))
            continue
        _, b = _other_slots(hu)
        c, d = _other_slots(hv)
        for kind, partner in ((MoveKind.REWIRE_A, c), (MoveKind.REWIRE_B, d)):
            images = list(range(pairing.n_half_edges))
            images[b], images[partner] = partner, b
            rewired = build_from_pairing(pairing.relabel(images))
            outcomes.append(MoveOutcome(rewired, (hu, hv), kind))

    if annotate:
        code = graph.canonical_code
        outcomes = [
            MoveOutcome(o.result, o.site, o.kind, o.result.canonical_code == code)
            for o in outcomes
        ]
    return outcomes
