"""Half-edge structures: pairings, cubic multigraphs and their invariants."""

from .canonical import CanonicalForm, canonical_form
from .circuits import count_circuits, count_subgraph_copies, girth, simple_girth
from .defect import VertexPermutation, edge_defect, find_small_defect_maps, is_automorphism
from .multigraph import (
    CubicMultigraph,
    automorphism_count,
    build_from_pairing,
    canonical_code,
    is_connected,
    is_simple,
)
from .pairing import Pairing, vertex_of

__all__ = [
    'Pairing', 'vertex_of', 'CubicMultigraph', 'build_from_pairing', 'canonical_code',
    'automorphism_count', 'is_connected', 'is_simple', 'CanonicalForm', 'canonical_form',
    'count_circuits', 'count_subgraph_copies', 'girth', 'simple_girth',
    'VertexPermutation', 'edge_defect', 'find_small_defect_maps', 'is_automorphism',
]
