"""Closed-form genus values, genus bounds and asymptotic envelopes."""

from .bounds import (
    GenusReport,
    asymptotic_genus_window,
    betti_genus_bounds,
    genus_bipartite,
    genus_complete,
    genus_modular_curve,
    genus_report_for_graph,
    simple_graph_parameters,
)
from .envelopes import (
    EnvelopeConstants,
    EnvelopeKind,
    EnvelopeValue,
    envelope,
    envelope_table,
)

__all__ = [
    'GenusReport', 'betti_genus_bounds', 'genus_complete', 'genus_bipartite',
    'genus_modular_curve', 'simple_graph_parameters', 'genus_report_for_graph',
    'asymptotic_genus_window', 'EnvelopeKind', 'EnvelopeConstants', 'EnvelopeValue',
    'envelope', 'envelope_table',
]
