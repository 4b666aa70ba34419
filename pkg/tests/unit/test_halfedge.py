"""Unit tests for pairings, cubic multigraphs and their invariants."""

from itertools import permutations
from math import factorial

import networkx as nx
import pytest

from src.configuration import iter_pairings
from src.halfedge import (
    CubicMultigraph,
    Pairing,
    VertexPermutation,
    automorphism_count,
    build_from_pairing,
    canonical_code,
    count_circuits,
    count_subgraph_copies,
    edge_defect,
    find_small_defect_maps,
    girth,
    is_automorphism,
    is_connected,
    is_simple,
)
from src.utils.errors import CapabilityError, StructuralInputError


def _isomorphism_class_key(graph: CubicMultigraph) -> tuple:
    """Least (edges, loops) over all relabelings; equal exactly for isomorphic graphs."""
    relabeled = (graph.relabel(images) for images in permutations(range(graph.n_vertices)))
    return min((h.edges, h.loops) for h in relabeled)


class TestPairing:
    """Test pairing construction and validation."""

    def test_pairs_are_normalized(self):
        """Test that pair order does not matter."""
        first = Pairing(2, ((3, 0), (4, 1), (5, 2)))
        second = Pairing(2, ((2, 5), (0, 3), (1, 4)))
        assert first == second
        assert first.pairs == ((0, 3), (1, 4), (2, 5))

    def test_partners_is_an_involution(self):
        """Test the partner array."""
        pairing = Pairing(2, ((0, 1), (2, 3), (4, 5)))
        assert pairing.partners == (1, 0, 3, 2, 5, 4)
        assert Pairing.from_partners(pairing.partners) == pairing

    @pytest.mark.parametrize("n, pairs", [
        (3, ((0, 1), (2, 3), (4, 5), (6, 7))),
        (2, ((0, 1), (1, 2), (3, 4))),
        (2, ((0, 1), (2, 3))),
        (2, ((0, 1), (2, 3), (4, 6))),
        (2, ((0, 0), (2, 3), (4, 5))),
    ])
    def test_malformed_pairings_rejected(self, n, pairs):
        """Test odd N, repeated, missing, out-of-range and self pairs."""
        with pytest.raises(StructuralInputError):
            Pairing(n, pairs)

    def test_internal_pairs_are_loops(self):
        """Test loop detection on half-edges of one vertex."""
        pairing = Pairing(2, ((0, 1), (2, 5), (3, 4)))
        assert pairing.internal_pairs() == [(0, 1), (3, 4)]


class TestCubicMultigraph:
    """Test multigraph construction from pairings and edge lists."""

    def test_build_triple_edge(self, triple_edge):
        """Test the pairing that glues every slot across."""
        graph = build_from_pairing(Pairing(2, ((0, 3), (1, 4), (2, 5))))
        assert graph == triple_edge

    def test_build_dumbbell(self, dumbbell):
        """Test loops at both vertices."""
        graph = build_from_pairing(Pairing(2, ((0, 1), (2, 5), (3, 4))))
        assert graph == dumbbell
        assert graph.loop_count == 2

    def test_degree_identity_for_every_small_pairing(self):
        """Test that every pairing at N=4 builds a cubic graph."""
        for pairing in iter_pairings(4):
            graph = build_from_pairing(pairing)
            for v in range(4):
                degree = 2 * graph.loops[v] + sum(
                    m for u, w, m in graph.edges if v in (u, w)
                )
                assert degree == 3

    def test_non_cubic_rejected(self):
        """Test the degree check."""
        with pytest.raises(StructuralInputError):
            CubicMultigraph(2, ((0, 1, 2),), (0, 0))

    def test_two_loops_rejected(self):
        """Test that a vertex admits at most one loop."""
        with pytest.raises(StructuralInputError):
            CubicMultigraph.from_edges(2, [(0, 0), (0, 0), (1, 1)])

    def test_to_pairing_realizes_graph(self, k4, prism, dumbbell):
        """Test that to_pairing rebuilds the same labeled graph."""
        for graph in (k4, prism, dumbbell):
            assert build_from_pairing(graph.to_pairing()) == graph

    def test_connectivity_and_simplicity(self, k4, triple_edge, disjoint_dumbbells):
        """Test the helper queries."""
        assert is_connected(k4) and is_simple(k4)
        assert is_connected(triple_edge) and not is_simple(triple_edge)
        assert not is_connected(disjoint_dumbbells)
        assert len(disjoint_dumbbells.components()) == 2

    def test_networkx_views(self, triple_edge):
        """Test simple and multigraph views."""
        assert triple_edge.to_networkx(simple=True).number_of_edges() == 1
        assert triple_edge.to_networkx().number_of_edges() == 3


class TestCanonicalForm:
    """Test canonical codes and automorphism counts."""

    def test_relabeling_keeps_code(self, prism):
        """Test invariance under vertex relabeling."""
        relabeled = prism.relabel((5, 3, 1, 0, 2, 4))
        assert canonical_code(relabeled) == canonical_code(prism)

    def test_distinct_classes_differ(self, k33, prism, triple_edge, dumbbell):
        """Test that non-isomorphic graphs get different codes."""
        assert canonical_code(k33) != canonical_code(prism)
        assert canonical_code(triple_edge) != canonical_code(dumbbell)

    @pytest.mark.parametrize("fixture, expected", [
        ("triple_edge", 2),
        ("dumbbell", 2),
        ("k4", 24),
        ("k33", 72),
        ("prism", 12),
        ("disjoint_dumbbells", 8),
    ])
    def test_automorphism_counts(self, request, fixture, expected):
        """Test group orders of the reference graphs."""
        graph = request.getfixturevalue(fixture)
        assert automorphism_count(graph) == expected
        assert factorial(graph.n_vertices) % expected == 0

    @pytest.mark.parametrize("n", [2, 4])
    def test_codes_match_explicit_isomorphism(self, n):
        """Test that codes agree exactly when a vertex bijection exists, over every labeled graph."""
        graphs = {}
        for pairing in iter_pairings(n):
            graph = build_from_pairing(pairing)
            graphs[(graph.edges, graph.loops)] = graph
        codes_by_class = {}
        for graph in graphs.values():
            codes_by_class.setdefault(_isomorphism_class_key(graph), set()).add(canonical_code(graph))
        assert all(len(codes) == 1 for codes in codes_by_class.values())
        assert len(set().union(*codes_by_class.values())) == len(codes_by_class)

    def test_automorphisms_equal_defect_zero_maps(self, prism, k4):
        """Test |Aut| against the unbounded defect-0 search."""
        for graph in (prism, k4):
            maps = find_small_defect_maps(graph, 0, graph.n_vertices)
            assert len(maps) + 1 == automorphism_count(graph)

    @pytest.mark.parametrize("fixture", ["triple_edge", "dumbbell", "k4", "k33", "prism"])
    def test_automorphism_maps_of_connected_graphs(self, request, fixture):
        """Test that the listed maps are the whole group of a connected graph."""
        graph = request.getfixturevalue(fixture)
        maps = graph.canonical.automorphism_maps
        assert len(maps) == len(set(maps)) == automorphism_count(graph)
        assert tuple(range(graph.n_vertices)) in maps
        assert all(is_automorphism(graph, VertexPermutation(images)) for images in maps)

    def test_automorphism_maps_fix_components(self, disjoint_dumbbells):
        """Test that component swaps are counted but not listed."""
        form = disjoint_dumbbells.canonical
        assert form.automorphisms == 8
        assert len(form.automorphism_maps) == 4
        for images in form.automorphism_maps:
            assert {images[0], images[1]} == {0, 1}

    def test_orbits(self, prism, dumbbell, disjoint_dumbbells):
        """Test orbit representatives under the listed maps."""
        assert prism.canonical.orbits() == [0] * 6
        assert dumbbell.canonical.orbits() == [0, 0]
        assert disjoint_dumbbells.canonical.orbits() == [0, 0, 2, 2]


class TestCircuits:
    """Test circuit counts and girth."""

    def test_triple_edge_circuits(self, triple_edge):
        """Test three 2-circuits and no 3-circuit."""
        assert count_circuits(triple_edge, 1) == 0
        assert count_circuits(triple_edge, 2) == 3
        assert count_circuits(triple_edge, 3) == 0

    def test_simple_graph_circuits(self, k4, k33, prism):
        """Test cycle counts of the reference graphs."""
        assert count_circuits(k4, 3) == 4
        assert count_circuits(k4, 4) == 3
        assert count_circuits(k33, 3) == 0
        assert count_circuits(k33, 4) == 9
        assert count_circuits(k33, 6) == 6
        assert count_circuits(prism, 3) == 2
        assert count_circuits(prism, 4) == 3

    def test_girth_is_first_nonzero_circuit(self, k4, k33, prism, triple_edge, dumbbell):
        """Test girth against the circuit counts."""
        for graph in (k4, k33, prism, triple_edge, dumbbell):
            first = next(k for k in range(1, 7) if count_circuits(graph, k) > 0)
            assert girth(graph) == first

    def test_circuits_are_isomorphism_invariant(self, prism):
        """Test equal counts on relabeled copies."""
        relabeled = prism.relabel((2, 0, 1, 5, 3, 4))
        for k in range(1, 7):
            assert count_circuits(prism, k) == count_circuits(relabeled, k)

    def test_subgraph_copies(self, k4, prism):
        """Test K4 and diamond copies."""
        assert count_subgraph_copies(k4, nx.complete_graph(4)) == 1
        assert count_subgraph_copies(k4, nx.diamond_graph()) == 6
        assert count_subgraph_copies(prism, nx.complete_graph(4)) == 0

    def test_pattern_cap(self, k4, mock_config):
        """Test the pattern size cap."""
        mock_config["max_pattern_vertices"] = 3
        with pytest.raises(CapabilityError, match="max_pattern_vertices"):
            count_subgraph_copies(k4, nx.complete_graph(4))


class TestEdgeDefect:
    """Test edge defect and the small-defect search."""

    def test_automorphism_has_zero_defect(self, triple_edge, k4):
        """Test defect 0 exactly on automorphisms."""
        swap = VertexPermutation.transposition(2, 0, 1)
        assert edge_defect(triple_edge, swap) == 0
        assert is_automorphism(k4, VertexPermutation((1, 2, 3, 0)))

    def test_non_automorphism_has_positive_defect(self, prism):
        """Test swaps inside and across the triangles."""
        mirror = VertexPermutation((3, 4, 5, 0, 1, 2))
        assert edge_defect(prism, mirror) == 0
        # swapping 0 and 1 keeps the triangle but moves rungs 0-3 and 1-4
        within = VertexPermutation.transposition(6, 0, 1)
        assert edge_defect(prism, within) == 2
        assert not is_automorphism(prism, within)
        across = VertexPermutation.transposition(6, 0, 4)
        assert edge_defect(prism, across) > 0

    def test_triple_edge_swap_found(self, triple_edge):
        """Test the only non-identity map of the triple edge."""
        found = find_small_defect_maps(triple_edge, 0, 2)
        assert [p.images for p, _ in found] == [(1, 0)]

    def test_k4_all_automorphisms(self, k4):
        """Test the 23 non-identity automorphisms of K4."""
        found = find_small_defect_maps(k4, 0, 4)
        assert len(found) == 23
        assert all(defect == 0 for _, defect in found)

    def test_prism_defect_two_superset(self, prism):
        """Test that defect budget 2 contains the automorphism group."""
        found = {p.images for p, _ in find_small_defect_maps(prism, 2, 6)}
        automorphisms = {p.images for p, _ in find_small_defect_maps(prism, 0, 6)}
        assert len(automorphisms) == 11
        assert automorphisms < found

    def test_support_cap(self, k4, mock_config):
        """Test the support cap."""
        with pytest.raises(CapabilityError, match="max_defect_support"):
            find_small_defect_maps(k4, 0, 13)
