"""Modular curve, pants and flip graphs."""

from .graphs import (
    ModularGraph,
    ModularKind,
    build_modular_curve_graph,
    build_modular_flip_graph,
    build_modular_pants_graph,
    curve_code,
    necklace_graph,
)
from .summary import GraphSummary, ModularGenusReport, degree_bound, graph_summary, modular_genus_report, to_dot

__all__ = [
    'ModularKind', 'ModularGraph', 'build_modular_curve_graph', 'build_modular_pants_graph',
    'build_modular_flip_graph', 'curve_code', 'necklace_graph', 'GraphSummary', 'graph_summary',
    'degree_bound', 'ModularGenusReport', 'modular_genus_report', 'to_dot',
]
