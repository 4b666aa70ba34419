"""Unit tests for genus bounds, closed forms and growth envelopes."""

import math
from fractions import Fraction

import networkx as nx
import pytest

from src.genus import (
    EnvelopeKind,
    GenusReport,
    asymptotic_genus_window,
    betti_genus_bounds,
    envelope,
    envelope_table,
    genus_bipartite,
    genus_complete,
    genus_modular_curve,
    genus_report_for_graph,
    simple_graph_parameters,
)
from src.surface import builtin_graph
from src.utils.errors import DomainError, InvariantViolation


class TestBettiBounds:
    """Test bounds from p, q and the girth."""

    def test_k4(self):
        """Test (0, 3/2) for K4."""
        report = betti_genus_bounds(4, 6, 3)
        assert (report.lower, report.upper) == (Fraction(0), Fraction(3, 2))
        assert (report.lower_int, report.upper_int) == (0, 1)

    def test_k33(self):
        """Test (1/4, 2) for K33 and the integer tightening."""
        report = betti_genus_bounds(6, 9, 4)
        assert (report.lower, report.upper) == (Fraction(1, 4), Fraction(2))
        assert (report.lower_int, report.upper_int) == (1, 2)

    @pytest.mark.parametrize("h", [None, math.inf])
    def test_acyclic(self, h):
        """Test that trees get (0, 0)."""
        report = betti_genus_bounds(5, 4, h)
        assert (report.lower, report.upper) == (0, 0)

    def test_negative_raw_lower_is_clamped(self):
        """Test a sparse graph whose raw lower bound is negative."""
        report = betti_genus_bounds(10, 10, 3)
        assert report.lower < 0
        assert report.lower_int == 0

    @pytest.mark.parametrize("p, q, h", [
        (0, 0, 3),
        (5, 3, 3),
        (5, 5, None),
        (4, 6, 2),
    ])
    def test_domain_errors(self, p, q, h):
        """Test empty, disconnected, inconsistent acyclic and girth below 3."""
        with pytest.raises(DomainError):
            betti_genus_bounds(p, q, h)

    def test_report_consistency(self):
        """Test that crossed bounds are an invariant violation."""
        with pytest.raises(InvariantViolation):
            GenusReport(Fraction(2), Fraction(1))
        with pytest.raises(InvariantViolation):
            GenusReport(Fraction(0), Fraction(1), exact=2)

    def test_asymptotic_window(self):
        """Test ((1/2 - 1/h) q, q/2)."""
        assert asymptotic_genus_window(30, 3) == (Fraction(10), Fraction(15))
        assert asymptotic_genus_window(4, math.inf) == (Fraction(2), Fraction(2))


class TestClosedForms:
    """Test the closed-form genus values."""

    @pytest.mark.parametrize("n, genus", [(3, 0), (4, 0), (5, 1), (7, 1), (8, 2), (12, 6)])
    def test_complete(self, n, genus):
        """Test ceil((n-3)(n-4)/12)."""
        assert genus_complete(n) == genus

    @pytest.mark.parametrize("m, n, genus", [(2, 7, 0), (3, 3, 1), (4, 4, 1), (5, 5, 3)])
    def test_bipartite(self, m, n, genus):
        """Test ceil((m-2)(n-2)/4)."""
        assert genus_bipartite(m, n) == genus

    @pytest.mark.parametrize("g, genus", [(2, 0), (3, 0), (4, 0), (9, 1), (10, 1), (14, 2)])
    def test_modular_curve(self, g, genus):
        """Test the genus of the modular curve graph."""
        assert genus_modular_curve(g) == genus

    def test_domain_errors(self):
        """Test argument ranges."""
        with pytest.raises(DomainError):
            genus_complete(2)
        with pytest.raises(DomainError):
            genus_bipartite(1, 4)
        with pytest.raises(DomainError):
            genus_modular_curve(1)


class TestGraphReports:
    """Test reports computed from networkx graphs."""

    def test_parameters(self):
        """Test (p, q, h) on the simple view."""
        assert simple_graph_parameters(builtin_graph("K33")) == (6, 9, 4)
        assert simple_graph_parameters(nx.path_graph(4)) == (4, 3, math.inf)

    def test_exact_inside_bounds(self):
        """Test K5 with the exact search."""
        report = genus_report_for_graph(builtin_graph("K5"), exact=True)
        assert report.exact == 1
        assert report.lower_int <= 1 <= report.upper_int
        assert report.graph == "K5"

    def test_exact_skipped_over_budget(self):
        """Test that a small rotation budget leaves only the bounds."""
        report = genus_report_for_graph(builtin_graph("K5"), exact=True, dart_budget=10)
        assert report.exact is None
        assert "exact skipped" in report.method_notes

    def test_multigraph_input(self):
        """Test that loops and parallel edges are ignored."""
        graph = nx.MultiGraph(nx.complete_graph(4))
        graph.add_edges_from([(0, 1), (2, 2)])
        report = genus_report_for_graph(graph)
        assert (report.p, report.q, report.h) == (4, 6, 3)

    def test_disconnected_rejected(self):
        """Test the connectivity requirement."""
        with pytest.raises(DomainError):
            genus_report_for_graph(nx.empty_graph(3))


class TestEnvelopes:
    """Test asymptotic envelopes."""

    def test_constants(self):
        """Test the constant windows of the pants and flip envelopes."""
        pants = envelope(EnvelopeKind.PANTS, 3).constants
        assert pants.c1 == pytest.approx(1 / (3 * math.e * math.sqrt(math.pi)))
        assert pants.c2 == pytest.approx(math.e ** 3 / math.sqrt(math.pi))
        flip = envelope("flip", 3).constants
        assert flip.c1 == pytest.approx(math.e / (18 * math.sqrt(math.pi)))
        assert flip.c2 == pytest.approx(math.e / (6 * math.sqrt(math.pi)))
        assert envelope("simple_count", 10).constants is None

    @pytest.mark.parametrize("kind, start", [("pants", 2), ("flip", 1), ("multigraph_count", 4),
                                             ("triangulation_count", 1)])
    def test_monotone(self, kind, start):
        """Test growth over a range of arguments."""
        logs = [envelope(kind, x).log_value for x in range(start, start + 8)]
        assert logs == sorted(logs)

    def test_pants_value(self):
        """Test the pants envelope at g = 3: (4)^(-1/2) * (12/(4e))^3."""
        expected = 4 ** -0.5 * (12 / (4 * math.e)) ** 3
        assert envelope("pants", 3).value == pytest.approx(expected)

    def test_overflow_is_infinite(self):
        """Test that huge values saturate."""
        result = envelope("flip", 200)
        assert math.isfinite(result.log_value)
        assert result.value == math.inf

    def test_simple_below_multigraph(self):
        """Test the e^-4 ratio of the simple and multigraph counts."""
        ratio = envelope("simple_count", 20).log_value - envelope("multigraph_count", 20).log_value
        assert ratio == pytest.approx(-4.0)

    def test_table(self):
        """Test envelope table columns and missing constants."""
        table = envelope_table("pants", [2, 3, 4])
        assert list(table.columns) == ["argument", "log_value", "value", "c1", "c2"]
        assert table["argument"].tolist() == [2, 3, 4]
        assert table["c1"].nunique() == 1
        assert envelope_table("simple_count", [4])["c1"].isna().all()

    def test_domain_errors(self):
        """Test unknown kinds and small arguments."""
        with pytest.raises(DomainError, match="unknown envelope kind"):
            envelope("bogus", 3)
        with pytest.raises(DomainError):
            envelope("pants", 1)
