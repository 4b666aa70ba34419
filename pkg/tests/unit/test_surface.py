"""Unit tests for combinatorial maps, one-puncture sampling and graph embeddings."""

import networkx as nx
import pytest

from src.halfedge import Pairing, canonical_code
from src.surface import (
    CombinatorialMap,
    builtin_graph,
    embedding_genus,
    exact_graph_genus,
    map_from_pairing,
    require_one_puncture_size,
    reverse_rotations,
    sample_one_puncture,
    simple_view,
    surface_invariants,
)
from src.utils.errors import CapabilityError, DomainError, RetryBudgetExceeded, StructuralInputError


class TestCombinatorialMap:
    """Test map validation, punctures and the Euler identity."""

    def test_torus(self, torus):
        """Test the two-triangle once-punctured torus."""
        invariants = torus.invariants()
        assert invariants.n_triangles == 2
        assert invariants.n_arcs == 3
        assert invariants.n_punctures == 1
        assert invariants.genus == 1

    def test_tetrahedron(self, tetrahedron):
        """Test the four-puncture sphere."""
        invariants = surface_invariants(tetrahedron)
        assert invariants.n_punctures == 4
        assert invariants.genus == 0
        assert len(tetrahedron.boundary_walks()) == 4

    def test_dual_graphs(self, torus, tetrahedron, triple_edge, k4):
        """Test the underlying cubic multigraphs."""
        assert torus.underlying_multigraph() == triple_edge
        assert canonical_code(tetrahedron.underlying_multigraph()) == canonical_code(k4)

    def test_pairing_round_trip(self, tetrahedron):
        """Test that to_pairing recovers the gluing of a labeled map."""
        assert map_from_pairing(tetrahedron.to_pairing()) == tetrahedron

    @pytest.mark.parametrize("sigma, alpha", [
        ((1, 2, 0, 4, 5), (1, 0, 3, 2, 4)),
        ((1, 0, 2, 4, 5, 3), (3, 4, 5, 0, 1, 2)),
        ((1, 2, 0, 4, 5, 3), (0, 4, 5, 3, 1, 2)),
        ((1, 2, 0, 4, 5, 3), (3, 3, 5, 0, 1, 2)),
    ])
    def test_malformed_maps_rejected(self, sigma, alpha):
        """Test dart count, triangle and involution checks."""
        with pytest.raises(StructuralInputError):
            CombinatorialMap(sigma, alpha)

    def test_reversing_a_rotation_changes_the_surface(self, torus):
        """Test that the dual graph keeps its shape while the surface changes."""
        reversed_map = map_from_pairing(reverse_rotations(torus.to_pairing(), [1]))
        assert reversed_map.underlying_multigraph() == torus.underlying_multigraph()
        assert reversed_map.n_punctures == 3
        assert reversed_map.invariants().genus == 0

    def test_canonical_code_ignores_dart_labels(self, tetrahedron):
        """Test invariance under dart relabeling."""
        images = [(x + 5) % 12 for x in range(12)]
        relabeled = tetrahedron.relabel(images)
        assert relabeled != tetrahedron
        assert relabeled.canonical_code == tetrahedron.canonical_code

    def test_map_automorphisms(self, torus, tetrahedron):
        """Test the rotation groups of two regular maps."""
        assert torus.automorphism_count == 6
        assert tetrahedron.automorphism_count == 12

    def test_disconnected_map(self, torus):
        """Test invariants of two disjoint tori."""
        pairing = Pairing(4, ((0, 3), (1, 4), (2, 5), (6, 9), (7, 10), (8, 11)))
        invariants = map_from_pairing(pairing).invariants()
        assert invariants.n_components == 2
        assert invariants.n_punctures == 2
        assert invariants.genus == 2


class TestOnePunctureSampling:
    """Test rejection sampling of one-puncture maps."""

    @pytest.mark.parametrize("n, genus", [(2, 1), (6, 2), (10, 3), (102, 26)])
    def test_genus_from_size(self, n, genus):
        """Test g = (N + 2) / 4."""
        assert require_one_puncture_size(n) == genus

    @pytest.mark.parametrize("n", [4, 8, 0, 3])
    def test_wrong_size_rejected(self, n):
        """Test the 2 mod 4 requirement."""
        with pytest.raises(DomainError, match="2 mod 4"):
            sample_one_puncture(n)

    def test_sampled_map_has_one_puncture(self):
        """Test the accepted map and its genus."""
        surface_map = sample_one_puncture(10, seed=1)
        invariants = surface_map.invariants()
        assert invariants.n_punctures == 1
        assert invariants.genus == 3

    def test_sampling_is_seeded(self):
        """Test reproducibility."""
        assert sample_one_puncture(6, seed=4) == sample_one_puncture(6, seed=4)

    def test_retry_budget(self):
        """Test that a one-draw budget runs out for some seed."""
        failures = 0
        for seed in range(20):
            try:
                sample_one_puncture(50, seed=seed, max_attempts=1)
            except RetryBudgetExceeded as exc:
                assert exc.cap == "max_attempts"
                failures += 1
        assert failures > 0


class TestGraphGenus:
    """Test exact genus search and explicit embeddings."""

    @pytest.mark.parametrize("name, expected", [
        ("K4", 0), ("K5", 1), ("K33", 1), ("K3,3", 1), ("prism", 0), ("petersen", 1), ("diamond", 0),
    ])
    def test_builtin_genus(self, name, expected):
        """Test known graph genera."""
        assert exact_graph_genus(builtin_graph(name)) == expected

    def test_trees_and_cycles_are_planar(self):
        """Test trivial inputs."""
        assert exact_graph_genus(nx.path_graph(5)) == 0
        assert exact_graph_genus(nx.cycle_graph(7)) == 0
        assert exact_graph_genus(nx.empty_graph(0)) == 0

    def test_disconnected_rejected(self):
        """Test the connectivity requirement."""
        with pytest.raises(DomainError):
            exact_graph_genus(nx.disjoint_union(nx.complete_graph(5), nx.complete_graph(5)))

    def test_rotation_budget(self):
        """Test the rotation-system cap on K5 (6^5 systems)."""
        with pytest.raises(CapabilityError, match="max_rotation_systems"):
            exact_graph_genus(builtin_graph("K5"), dart_budget=1000)

    def test_embedding_genus_of_k4(self):
        """Test the planar rotation and a mixed one."""
        k4 = nx.complete_graph(4)
        planar = {0: [1, 2, 3], 1: [0, 3, 2], 2: [0, 1, 3], 3: [0, 2, 1]}
        mixed = {0: [1, 2, 3], 1: [0, 2, 3], 2: [0, 1, 3], 3: [0, 1, 2]}
        assert embedding_genus(k4, planar) == 0
        assert embedding_genus(k4, mixed) == 1

    def test_bad_rotation_rejected(self):
        """Test that a rotation must list every neighbor."""
        with pytest.raises(StructuralInputError):
            embedding_genus(nx.complete_graph(4), {0: [1, 2], 1: [0, 2, 3], 2: [0, 1, 3], 3: [0, 1, 2]})

    def test_simple_view(self):
        """Test loop and parallel-edge removal."""
        graph = nx.MultiGraph([(0, 1), (0, 1), (1, 1), (1, 2)])
        simple = simple_view(graph)
        assert sorted(simple.edges()) == [(0, 1), (1, 2)]

    def test_unknown_builtin(self):
        """Test the builtin name check."""
        with pytest.raises(StructuralInputError):
            builtin_graph("K")
