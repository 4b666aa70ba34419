"""End-to-end tests of the command-line interface."""

import json

import pytest

from main import main
from src.configuration import (
    estimate_automorphism_fraction,
    estimate_circuit_stats,
    estimate_subgraph_copy_mean,
)
from src.moves import random_flip_walk
from src.surface import builtin_graph, exact_graph_genus, sample_one_puncture


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCommands:
    """Test the documented invocations."""

    def test_enumerate(self, capsys):
        """Test connected classes on four vertices."""
        code, out, _ = _run(capsys, "enumerate", "--n", "4", "--filter", "connected")
        assert code == 0
        assert json.loads(out)["n_classes"] == 5

    def test_enumerate_simple_text(self, capsys):
        """Test that K33 and the prism print as two blocks."""
        code, out, _ = _run(capsys, "enumerate", "--n", "6", "--filter", "simple", "--format", "text")
        assert code == 0
        assert len([block for block in out.split("\n\n") if block.strip()]) == 2

    def test_modular_pants_dot(self, capsys):
        """Test DOT output at genus 3."""
        code, out, _ = _run(capsys, "modular", "pants", "--genus", "3", "--format", "dot")
        assert code == 0
        assert out.startswith('graph "pants_g3" {')
        assert out.count(" -- ") >= 4

    def test_modular_curve_text(self, capsys):
        """Test the closed-form genus of the curve graph at genus 10."""
        code, out, _ = _run(capsys, "modular", "curve", "--genus", "10", "--format", "text")
        assert code == 0
        assert any(line.split() == ["genus_closed_form", "1"] for line in out.splitlines())

    def test_genus_builtin_exact(self, capsys):
        """Test the exact genus of K5."""
        code, out, _ = _run(capsys, "genus", "--builtin", "K5", "--exact")
        assert code == 0
        assert json.loads(out)["exact"] == 1

    def test_genus_file(self, capsys, temp_directory):
        """Test a tree file: bounds (0, 0)."""
        path = temp_directory / "tree.mg"
        path.write_text("3\n0 1 1\n1 2 1\n")
        code, out, _ = _run(capsys, "genus", "--file", str(path))
        assert code == 0
        data = json.loads(out)
        assert (data["lower"], data["upper"]) == ("0", "0")

    def test_asymptotics_csv(self, capsys):
        """Test an envelope table over a range."""
        code, out, _ = _run(capsys, "asymptotics", "flip", "--from", "1", "--to", "3", "--format", "csv")
        assert code == 0
        assert len(out.strip().split("\n")) == 4

    def test_output_file(self, capsys, temp_directory):
        """Test that --output leaves stdout empty."""
        path = temp_directory / "walk.json"
        code, out, _ = _run(capsys, "flip-walk", "--n", "6", "--steps", "30", "--seed", "3",
                            "--output", str(path))
        assert code == 0
        assert out == ""
        assert json.loads(path.read_text())["passed"]

    def test_same_seed_same_bytes(self, capsys):
        """Test byte-identical output for identical flags."""
        argv = ["sample-stats", "--n", "14", "--kmax", "3", "--samples", "50", "--seed", "7"]
        _, first, _ = _run(capsys, *argv)
        _, second, _ = _run(capsys, *argv)
        assert first == second
        _, other, _ = _run(capsys, *argv[:-1], "8")
        assert other != first


class TestExitCodes:
    """Test error reporting."""

    def test_domain_error(self, capsys):
        """Test exit status 2 for an odd vertex count."""
        code, out, err = _run(capsys, "enumerate", "--n", "3")
        assert code == 2
        assert out == ""
        assert "error:" in err

    def test_oriented_without_brute_force(self, capsys):
        """Test exit status 2 when --oriented meets the orderly method."""
        code, out, err = _run(capsys, "enumerate", "--n", "4", "--oriented")
        assert code == 2
        assert out == ""
        assert "--method brute" in err

    def test_one_puncture_domain(self, capsys):
        """Test exit status 2 when N is not 2 mod 4."""
        code, _, err = _run(capsys, "sample-stats", "--n", "8", "--one-puncture", "--samples", "5")
        assert code == 2
        assert "2 mod 4" in err

    def test_structural_error(self, capsys, temp_directory):
        """Test exit status 2 for a malformed graph file."""
        path = temp_directory / "broken.mg"
        path.write_text("3\n0 one 1\n")
        code, _, _ = _run(capsys, "genus", "--file", str(path))
        assert code == 2

    def test_capability_error(self, capsys):
        """Test exit status 3 above the enumeration cap."""
        code, _, err = _run(capsys, "enumerate", "--n", "16")
        assert code == 3
        assert "max_enumeration_vertices" in err

    def test_retry_budget(self, capsys):
        """Test exit status 3 when rejection sampling runs out."""
        codes = {_run(capsys, "flip-walk", "--n", "50", "--steps", "1", "--max-attempts", "1",
                      "--seed", str(seed))[0] for seed in range(10)}
        assert 3 in codes

    def test_bad_format(self, capsys):
        """Test that argparse rejects formats a command does not offer."""
        with pytest.raises(SystemExit) as exc_info:
            main(["genus", "--builtin", "K4", "--format", "dot"])
        assert exc_info.value.code == 2


@pytest.mark.slow
class TestAcceptance:
    """Larger runs checking limit laws and search budgets."""

    def test_poisson_circuit_means(self):
        """Test that circuit means approach 2^k / 2k at N=100."""
        stats = estimate_circuit_stats(100, 3, 2000, seed=7)
        means = stats.circuit_means
        assert means[1] == pytest.approx(1.0, abs=0.12)
        assert means[2] == pytest.approx(1.0, abs=0.12)
        assert means[3] == pytest.approx(4 / 3, abs=0.15)

    def test_poisson_standard_scores(self):
        """Test |z| <= 3 for k = 1..3 over 10^5 graphs at N=100."""
        stats = estimate_circuit_stats(100, 3, 100_000, seed=7)
        assert stats.n_samples == 100_000
        assert all(abs(z) <= 3 for z in stats.z_scores.values()), stats.z_scores

    def test_automorphisms_become_rare(self):
        """Test that symmetric graphs thin out between N=20 and N=200."""
        small = estimate_automorphism_fraction(20, 10_000, seed=1)
        large = estimate_automorphism_fraction(200, 10_000, seed=1)
        assert large < small

    def test_diamond_copies_decay(self):
        """Test that copies of a graph with more edges than vertices vanish."""
        diamond = builtin_graph("diamond")
        small = estimate_subgraph_copy_mean(50, diamond, 10_000, seed=2)
        large = estimate_subgraph_copy_mean(200, diamond, 10_000, seed=2)
        assert large < small

    def test_k6_genus(self):
        """Test the genus of K6 within the default rotation budget."""
        assert exact_graph_genus(builtin_graph("K6")) == 1

    def test_long_flip_walk(self):
        """Test a thousand flips on a genus-two map."""
        report = random_flip_walk(sample_one_puncture(6, seed=3), 1000, seed=3)
        assert report.passed
        assert report.distinct_classes > 1
