"""Genus bounds from vertex, edge and girth counts, and closed-form genus values."""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

import networkx as nx

from ..halfedge.circuits import simple_girth
from ..surface.embedding import exact_graph_genus, rotation_system_count, simple_view
from ..utils import config, get_logger
from ..utils.errors import CapabilityError, DomainError, InvariantViolation

logger = get_logger(__name__)

Girth = Union[int, float]


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class GenusReport:
    """Raw rational bounds, their integer tightening and an optional exact value."""
    lower: Fraction
    upper: Fraction
    exact: Optional[int] = None
    method_notes: str = ""
    p: Optional[int] = None
    q: Optional[int] = None
    h: Optional[Girth] = None
    graph: str = ""

    def __post_init__(self):
        if self.lower > self.upper:
            raise InvariantViolation(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        if self.exact is not None and not self.lower_int <= self.exact <= self.upper_int:
            raise InvariantViolation(
                f"exact genus {self.exact} outside [{self.lower_int}, {self.upper_int}]"
            )

    @property
    def lower_int(self) -> int:
        return max(0, math.ceil(self.lower))

    @property
    def upper_int(self) -> int:
        return math.floor(self.upper)


def betti_genus_bounds(p: int, q: int, h: Optional[Girth]) -> GenusReport:
    """1 + (1 - 2/h) q/2 - p/2 <= genus <= 1/2 + q/2 - p/2 for a connected graph.

    h is the girth; None or math.inf marks an acyclic graph, whose bounds
    are (0, 0).
    """
    if p < 1 or q < 0:
        raise DomainError(f"need p >= 1 and q >= 0, got p={p}, q={q}")
    if q < p - 1:
        raise DomainError(f"q = {q} < p - 1 = {p - 1}: the graph is disconnected")

    acyclic = h is None or (isinstance(h, float) and math.isinf(h))
    if acyclic:
        if q != p - 1:
            raise DomainError(f"an acyclic connected graph on {p} vertices has {p - 1} edges, got {q}")
        return GenusReport(Fraction(0), Fraction(0), None, "acyclic: bounds (0, 0)", p, q, math.inf)
    if int(h) < 3:
        raise DomainError(f"girth of a simple graph is at least 3, got {h}")

    lower = 1 + (1 - Fraction(2, int(h))) * q / 2 - Fraction(p, 2)
    upper = Fraction(1, 2) + Fraction(q, 2) - Fraction(p, 2)
    return GenusReport(lower, upper, None, "betti bounds", p, q, int(h))


def genus_complete(n: int) -> int:
    """Genus of K_n: ceil((n - 3)(n - 4) / 12)."""
    if n < 3:
        raise DomainError(f"complete graph formula needs n >= 3, got {n}")
    return _ceil_div((n - 3) * (n - 4), 12)


def genus_bipartite(m: int, n: int) -> int:
    """Genus of K_{m,n}: ceil((m - 2)(n - 2) / 4)."""
    if m < 2 or n < 2:
        raise DomainError(f"complete bipartite formula needs m, n >= 2, got {m}, {n}")
    return _ceil_div((m - 2) * (n - 2), 4)


def genus_modular_curve(g: int) -> int:
    """Genus of the modular curve graph, the complete graph on floor(g/2) + 1 vertices.

    For g in {2, 3} that graph is K_2, which is planar.
    """
    if g < 2:
        raise DomainError(f"surface genus must be at least 2, got {g}")
    vertices = g // 2 + 1
    if vertices < 3:
        return 0
    return genus_complete(vertices)


def simple_graph_parameters(graph: nx.Graph) -> Tuple[int, int, Girth]:
    """(p, q, h) of the simple graph underlying graph."""
    simple = simple_view(graph)
    return simple.number_of_nodes(), simple.number_of_edges(), simple_girth(simple)


def genus_report_for_graph(graph: nx.Graph, exact: bool = False,
                           dart_budget: Optional[int] = None, name: str = "") -> GenusReport:
    """Bounds for a connected graph, plus the exact genus when asked and within budget."""
    simple = simple_view(graph)
    if simple.number_of_nodes() == 0 or not nx.is_connected(simple):
        raise DomainError("genus bounds need a non-empty connected graph")
    p, q, h = simple_graph_parameters(simple)
    bounds = betti_genus_bounds(p, q, h)
    notes = [bounds.method_notes]
    value = None
    if exact:
        budget = int(config.get_cap("max_rotation_systems") if dart_budget is None else dart_budget)
        try:
            value = exact_graph_genus(simple, budget)
            notes.append("exact by rotation-system search")
        except CapabilityError as exc:
            logger.log_cap_exceeded(exc.cap, exc.limit, rotation_system_count(simple))
            notes.append(f"exact skipped: {exc}")
    return GenusReport(bounds.lower, bounds.upper, value, "; ".join(notes), p, q, h,
                       name or str(getattr(graph, "name", "") or ""))


def asymptotic_genus_window(q: int, h: Girth) -> Tuple[Fraction, Fraction]:
    """Leading-order window ((1/2 - 1/h) q, q/2) of the bounds when q dominates p."""
    if isinstance(h, float) and math.isinf(h):
        return Fraction(q, 2), Fraction(q, 2)
    return (Fraction(1, 2) - Fraction(1, int(h))) * q, Fraction(q, 2)
