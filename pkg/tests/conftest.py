"""Pytest configuration and fixtures for modsurf tests."""

import shutil
import sys
import tempfile
from itertools import combinations
from pathlib import Path
from unittest.mock import patch

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.halfedge import CubicMultigraph
from src.surface import tetrahedron_map, torus_map
from src.utils import config


# Graph fixtures
@pytest.fixture
def triple_edge():
    """Two vertices joined by three parallel edges."""
    return CubicMultigraph(2, ((0, 1, 3),), (0, 0))


@pytest.fixture
def dumbbell():
    """Two looped vertices joined by one edge."""
    return CubicMultigraph(2, ((0, 1, 1),), (1, 1))


@pytest.fixture
def k4():
    """Complete graph on four vertices."""
    return CubicMultigraph.from_edges(4, combinations(range(4), 2))


@pytest.fixture
def k33():
    """Complete bipartite graph K_{3,3}."""
    return CubicMultigraph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)])


@pytest.fixture
def prism():
    """Triangular prism: two triangles joined by three rungs."""
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    return CubicMultigraph.from_edges(6, edges)


@pytest.fixture
def disjoint_dumbbells():
    """Two disjoint copies of the dumbbell."""
    return CubicMultigraph(4, ((0, 1, 1), (2, 3, 1)), (1, 1, 1, 1))


# Map fixtures
@pytest.fixture
def torus():
    """Two triangles glued into a once-punctured torus."""
    return torus_map()


@pytest.fixture
def tetrahedron():
    """Four triangles glued into a sphere with four punctures."""
    return tetrahedron_map()


@pytest.fixture
def temp_directory():
    """Create a temporary directory for test files."""
    temp_dir = tempfile.mkdtemp()
    yield Path(temp_dir)
    shutil.rmtree(temp_dir)


@pytest.fixture
def mock_config():
    """Patch search caps; tests edit the yielded dict."""
    caps = dict(config.get_search_config())
    with patch.object(config, "get_cap", side_effect=lambda name: int(caps[name])):
        yield caps


# Pytest configuration
def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line(
        "markers", "unit: mark test as a unit test"
    )
    config.addinivalue_line(
        "markers", "integration: mark test as an integration test"
    )
    config.addinivalue_line(
        "markers", "slow: mark test as slow running"
    )


def pytest_collection_modifyitems(config, items):
    """Modify test collection to add markers automatically."""
    for item in items:
        # Add unit marker to tests in unit directory
        if "unit" in str(item.fspath):
            item.add_marker(pytest.mark.unit)

        # Add integration marker to tests in integration directory
        if "integration" in str(item.fspath):
            item.add_marker(pytest.mark.integration)
