"""Plain-text formats for pairings, multigraphs, maps and genus input graphs.

Every format starts with a line holding N. Pairing rows are "h1 h2";
multigraph rows are "u v m" for an edge of multiplicity m and "v L" for L
loops at v; map files list N sigma cycles of three darts and then the
3N/2 alpha pairs. Collections separate items with one blank line.
"""

from pathlib import Path
from typing import Callable, List, Sequence, TypeVar, Union

import networkx as nx

from ..halfedge import CubicMultigraph, Pairing
from ..surface import CombinatorialMap
from ..utils import get_logger
from ..utils.errors import StructuralInputError

logger = get_logger(__name__)

T = TypeVar("T")
PathLike = Union[str, Path]


def _rows(text: str, source: str) -> List[List[int]]:
    rows = []
    for number, line in enumerate(text.strip("\n").split("\n"), start=1):
        if not line.strip():
            raise StructuralInputError(f"{source}: blank line {number} inside a record")
        try:
            rows.append([int(token) for token in line.split()])
        except ValueError:
            raise StructuralInputError(f"{source}: line {number} is not a row of integers: {line!r}") from None
    if not rows or len(rows[0]) != 1:
        raise StructuralInputError(f"{source}: first line must hold the vertex count")
    return rows


def _expect(rows: List[List[int]], count: int, width: int, source: str) -> None:
    if len(rows) != count:
        raise StructuralInputError(f"{source}: expected {count} rows, got {len(rows)}")
    for row in rows:
        if len(row) != width:
            raise StructuralInputError(f"{source}: expected {width} numbers per row, got {row}")


def format_pairing(pairing: Pairing) -> str:
    lines = [str(pairing.n_vertices)] + [f"{a} {b}" for a, b in pairing.pairs]
    return "\n".join(lines) + "\n"


def parse_pairing(text: str) -> Pairing:
    rows = _rows(text, "pairing")
    n = rows[0][0]
    _expect(rows[1:], 3 * n // 2, 2, "pairing")
    return Pairing.from_pairs(n, rows[1:])


def format_multigraph(graph: CubicMultigraph) -> str:
    lines = [str(graph.n_vertices)]
    lines += [f"{u} {v} {m}" for u, v, m in graph.edges]
    lines += [f"{v} {loops}" for v, loops in enumerate(graph.loops) if loops]
    return "\n".join(lines) + "\n"


def _multigraph_rows(text: str, source: str):
    rows = _rows(text, source)
    n = rows[0][0]
    edges, loops = [], {}
    for row in rows[1:]:
        if len(row) == 3:
            edges.append(tuple(row))
        elif len(row) == 2:
            v, count = row
            loops[v] = loops.get(v, 0) + count
        else:
            raise StructuralInputError(f"{source}: row {row} is neither 'u v m' nor 'v L'")
    return n, edges, loops


def parse_multigraph(text: str) -> CubicMultigraph:
    n, edges, loops = _multigraph_rows(text, "multigraph")
    if any(not 0 <= v < n for v in loops):
        raise StructuralInputError(f"multigraph: loop vertex outside [0, {n})")
    return CubicMultigraph(n, tuple(edges), tuple(loops.get(v, 0) for v in range(n)))


def format_map(surface_map: CombinatorialMap) -> str:
    lines = [str(surface_map.n_triangles)]
    lines += [" ".join(str(x) for x in triangle) for triangle in surface_map.triangles()]
    lines += [f"{a} {b}" for a, b in surface_map.arcs()]
    return "\n".join(lines) + "\n"


def parse_map(text: str) -> CombinatorialMap:
    rows = _rows(text, "map")
    n = rows[0][0]
    if n < 1:
        raise StructuralInputError(f"map: triangle count must be positive, got {n}")
    cycles, pairs = rows[1:n + 1], rows[n + 1:]
    _expect(cycles, n, 3, "map")
    _expect(pairs, 3 * n // 2, 2, "map")

    size = 3 * n
    sigma, alpha = [-1] * size, [-1] * size
    for a, b, c in cycles:
        for x, y in ((a, b), (b, c), (c, a)):
            if not 0 <= x < size or sigma[x] != -1:
                raise StructuralInputError(f"map: dart {x} missing or repeated in sigma cycles")
            sigma[x] = y
    for a, b in pairs:
        for x, y in ((a, b), (b, a)):
            if not 0 <= x < size or alpha[x] != -1:
                raise StructuralInputError(f"map: dart {x} missing or repeated in alpha pairs")
            alpha[x] = y
    return CombinatorialMap(tuple(sigma), tuple(alpha))


def format_collection(items: Sequence[T], formatter: Callable[[T], str]) -> str:
    return "\n".join(formatter(item) for item in items)


def parse_collection(text: str, parser: Callable[[str], T]) -> List[T]:
    blocks = [block for block in text.split("\n\n") if block.strip()]
    return [parser(block) for block in blocks]


def read_graph_file(path: PathLike) -> nx.MultiGraph:
    """Read a multigraph-format file of any degree sequence for genus work."""
    path = Path(path)
    if not path.exists():
        raise StructuralInputError(f"graph file not found: {path}")
    n, edges, loops = _multigraph_rows(path.read_text(), str(path))
    graph = nx.MultiGraph(name=path.stem)
    graph.add_nodes_from(range(n))
    for u, v, m in edges:
        if not (0 <= u < n and 0 <= v < n) or m < 1:
            raise StructuralInputError(f"{path}: bad edge row {u} {v} {m}")
        graph.add_edges_from([(u, v)] * m)
    for v, count in loops.items():
        if not 0 <= v < n:
            raise StructuralInputError(f"{path}: loop vertex {v} outside [0, {n})")
        graph.add_edges_from([(v, v)] * count)
    logger.debug("Graph file read", path=str(path), vertices=n, edges=graph.number_of_edges())
    return graph


def write_text(path: PathLike, text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    logger.info(f"Output written: {path}", path=str(path), size=len(text))
    return path
