"""Summary statistics, genus reports and DOT export for modular graphs."""

from dataclasses import asdict, dataclass
from statistics import mean
from typing import Any, Dict, Optional, Union

from ..genus import (
    EnvelopeKind,
    EnvelopeValue,
    GenusReport,
    envelope,
    genus_modular_curve,
    genus_report_for_graph,
)
from ..halfedge.circuits import simple_girth
from ..utils import get_logger
from .graphs import ModularGraph, ModularKind

logger = get_logger(__name__)


@dataclass(frozen=True)
class GraphSummary:
    kind: str
    genus_param: int
    p: int
    q_simple: int
    q_multi: int
    loop_total: int
    girth_simple: Union[int, float]
    multi_degree_min: int
    multi_degree_max: int
    multi_degree_mean: float
    simple_degree_min: int
    simple_degree_max: int
    simple_degree_mean: float
    degree_bound: Optional[int]
    near_max_fraction: float

    def to_dict(self) -> Dict[str, Any]:
        record = asdict(self)
        if isinstance(self.girth_simple, float):
            record["girth_simple"] = None
        return record


def degree_bound(graph: ModularGraph) -> Optional[int]:
    """Move count of a vertex with no degenerate moves: 6g-6 for pants, 6g-3 for flips."""
    if graph.kind is ModularKind.PANTS:
        return 6 * graph.genus_param - 6
    if graph.kind is ModularKind.FLIP:
        return 6 * graph.genus_param - 3
    return None


def graph_summary(graph: ModularGraph) -> GraphSummary:
    simple = graph.to_networkx(simple=True)
    multi_degrees = [graph.move_degrees[v] for v in graph.vertices]
    simple_degrees = [simple.degree(v) for v in graph.vertices]
    bound = degree_bound(graph)
    ceiling = bound if bound is not None else max(multi_degrees)
    near_max = sum(1 for d in multi_degrees if d >= ceiling - 1) / len(multi_degrees)

    return GraphSummary(
        kind=graph.kind.value,
        genus_param=graph.genus_param,
        p=simple.number_of_nodes(),
        q_simple=simple.number_of_edges(),
        q_multi=sum(graph.edge_multiplicities.values()),
        loop_total=sum(graph.total_loops.values()),
        girth_simple=simple_girth(simple),
        multi_degree_min=min(multi_degrees),
        multi_degree_max=max(multi_degrees),
        multi_degree_mean=mean(multi_degrees),
        simple_degree_min=min(simple_degrees),
        simple_degree_max=max(simple_degrees),
        simple_degree_mean=mean(simple_degrees),
        degree_bound=bound,
        near_max_fraction=near_max,
    )


@dataclass(frozen=True)
class ModularGenusReport:
    report: GenusReport
    closed_form: Optional[int] = None
    envelope: Optional[EnvelopeValue] = None

    @property
    def upper_to_envelope(self) -> Optional[float]:
        if self.envelope is None or self.envelope.value in (0.0, float("inf")):
            return None
        return float(self.report.upper) / self.envelope.value


_ENVELOPES = {ModularKind.PANTS: EnvelopeKind.PANTS, ModularKind.FLIP: EnvelopeKind.FLIP}


def modular_genus_report(graph: ModularGraph, exact: bool = False,
                         dart_budget: Optional[int] = None) -> ModularGenusReport:
    """Genus bounds of the simple graph, with the closed form or growth envelope."""
    name = f"{graph.kind.value}_g{graph.genus_param}"
    report = genus_report_for_graph(graph.to_networkx(simple=True), exact, dart_budget, name)
    if graph.kind is ModularKind.CURVE:
        return ModularGenusReport(report, closed_form=genus_modular_curve(graph.genus_param))

    kind = _ENVELOPES[graph.kind]
    return ModularGenusReport(report, envelope=envelope(kind, graph.genus_param))


def to_dot(graph: ModularGraph) -> str:
    """Undirected DOT text; multiplicities and loop counts become labels."""
    lines = [f'graph "{graph.kind.value}_g{graph.genus_param}" {{']
    loops = graph.total_loops
    for code in graph.vertices:
        label = graph.labels[code]
        if loops[code]:
            label += f"\\nloops={loops[code]}"
        lines.append(f'  "{code.hex()}" [label="{label}"];')
    for (a, b), multiplicity in graph.edge_multiplicities.items():
        attributes = f' [label="{multiplicity}"]' if multiplicity > 1 else ""
        lines.append(f'  "{a.hex()}" -- "{b.hex()}"{attributes};')
    lines.append("}")
    return "\n".join(lines) + "\n"
