"""Isomorph-free enumeration of cubic multigraphs and one-vertex triangulations."""

from .brute import brute_force_classes, weighted_pairings
from .orderly import FILTERS, enumerate_cubic_multigraphs
from .result import EnumerationResult
from .triangulations import enumerate_one_vertex_triangulations, oriented_class_mass

__all__ = [
    'EnumerationResult', 'brute_force_classes', 'weighted_pairings',
    'enumerate_cubic_multigraphs', 'enumerate_one_vertex_triangulations',
    'oriented_class_mass', 'FILTERS',
]
