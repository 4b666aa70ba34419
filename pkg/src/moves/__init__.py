"""Elementary moves on cubic multigraphs and flips on triangulated surfaces."""

from .elementary import MoveKind, MoveOutcome, pants_move_neighbors
from .flips import FlipWalkReport, flip, flip_neighbors, random_flip_walk

__all__ = [
    'MoveKind', 'MoveOutcome', 'pants_move_neighbors', 'flip', 'flip_neighbors',
    'random_flip_walk', 'FlipWalkReport',
]
