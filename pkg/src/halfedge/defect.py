"""Vertex permutations, edge defect and the small-defect search."""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..utils.config import config
from ..utils.errors import DomainError, StructuralInputError, check_cap
from .multigraph import CubicMultigraph


@dataclass(frozen=True)
class VertexPermutation:
    """Bijection of the vertex set, stored as images[v]."""
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(len(images))):
            raise StructuralInputError("vertex permutation images must form a bijection")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "VertexPermutation":
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "VertexPermutation":
        images = list(range(n))
        images[a], images[b] = b, a
        return cls(tuple(images))

    @property
    def size(self) -> int:
        return len(self.images)

    @property
    def support_size(self) -> int:
        return sum(1 for v, w in enumerate(self.images) if v != w)

    def is_identity(self) -> bool:
        return self.support_size == 0


def edge_defect(graph: CubicMultigraph, permutation: VertexPermutation) -> int:
    """Number of edges (with multiplicity, loops included) whose image is not an edge."""
    if permutation.size != graph.n_vertices:
        raise StructuralInputError(
            f"permutation acts on {permutation.size} vertices, graph has {graph.n_vertices}"
        )
    images = permutation.images
    defect = 0
    for u, v, m in graph.edges:
        defect += max(0, m - graph.multiplicity(images[u], images[v]))
    for v, loops in enumerate(graph.loops):
        defect += max(0, loops - graph.loops[images[v]])
    return defect


def find_small_defect_maps(graph: CubicMultigraph, k: int,
                           max_support: int) -> List[Tuple[VertexPermutation, int]]:
    """All non-identity permutations with support <= max_support and defect <= k.

    Backtracking assigns images vertex by vertex; the defect of edges whose
    endpoints are both assigned only grows, so partial maps over budget are cut.
    """
    if k < 0 or max_support < 1:
        raise DomainError("defect budget must be >= 0 and support cap >= 1")
    check_cap("max_defect_support", config.get_cap("max_defect_support"), max_support)

    n = graph.n_vertices
    earlier: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
    for u, v, m in graph.edges:
        earlier[v].append((u, m))

    images = [-1] * n
    used = [False] * n
    found: List[Tuple[VertexPermutation, int]] = []

    def assign(v: int, defect: int, support: int) -> None:
        if v == n:
            if support:
                found.append((VertexPermutation(tuple(images)), defect))
            return
        remaining_support = max_support - support
        for target in range(n):
            if used[target]:
                continue
            moved = target != v
            if moved and not remaining_support:
                continue
            cost = max(0, graph.loops[v] - graph.loops[target])
            for u, m in earlier[v]:
                cost += max(0, m - graph.multiplicity(images[u], target))
            if defect + cost > k:
                continue
            images[v] = target
            used[target] = True
            assign(v + 1, defect + cost, support + moved)
            used[target] = False
            images[v] = -1

    assign(0, 0, 0)
    found.sort(key=lambda item: item[0].images)
    return found


def is_automorphism(graph: CubicMultigraph, permutation: VertexPermutation) -> bool:
    return edge_defect(graph, permutation) == 0


def permutation_from_images(images: Sequence[int]) -> VertexPermutation:
    return VertexPermutation(tuple(images))
