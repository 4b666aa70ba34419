"""Ribbon surfaces: combinatorial maps, one-puncture sampling and graph embeddings."""

from .embedding import builtin_graph, embedding_genus, exact_graph_genus, simple_view
from .maps import (
    CombinatorialMap,
    SurfaceInvariants,
    map_from_pairing,
    reverse_rotations,
    surface_invariants,
    tetrahedron_map,
    torus_map,
)
from .sampling import rejection_sample, require_one_puncture_size, sample_one_puncture

__all__ = [
    'CombinatorialMap', 'SurfaceInvariants', 'map_from_pairing', 'surface_invariants',
    'torus_map', 'tetrahedron_map', 'reverse_rotations', 'sample_one_puncture',
    'rejection_sample', 'require_one_puncture_size', 'exact_graph_genus', 'embedding_genus',
    'builtin_graph', 'simple_view',
]
