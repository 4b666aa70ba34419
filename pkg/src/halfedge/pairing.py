"""Half-edge pairings: elements of the configuration-model space."""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Sequence, Tuple

from ..utils.errors import StructuralInputError

HalfEdgePair = Tuple[int, int]


def vertex_of(half_edge: int) -> int:
    """Vertex owning a half-edge."""
    return half_edge // 3


@dataclass(frozen=True)
class Pairing:
    """Perfect matching on the 3N half-edges of N cubic vertices.

    Half-edges 3v, 3v+1, 3v+2 belong to vertex v. Pairs are stored
    normalized (smaller index first, sorted) so equal matchings compare equal.
    """
    n_vertices: int
    pairs: Tuple[HalfEdgePair, ...]

    def __post_init__(self):
        n = self.n_vertices
        if not isinstance(n, int) or n < 2 or n % 2:
            raise StructuralInputError(f"pairing needs an even N >= 2, got {n}")

        total = 3 * n
        normalized = tuple(sorted((min(a, b), max(a, b)) for a, b in self.pairs))
        seen = set()
        for a, b in normalized:
            if a == b:
                raise StructuralInputError(f"half-edge {a} paired with itself")
            for h in (a, b):
                if not 0 <= h < total:
                    raise StructuralInputError(f"half-edge {h} outside [0, {total})")
                if h in seen:
                    raise StructuralInputError(f"half-edge {h} appears in more than one pair")
                seen.add(h)
        if len(seen) != total:
            missing = sorted(set(range(total)) - seen)
            raise StructuralInputError(f"half-edges not paired: {missing[:6]}")

        object.__setattr__(self, "pairs", normalized)

    @classmethod
    def from_partners(cls, partners: Sequence[int]) -> "Pairing":
        """Build from a partner array (partners[h] is the mate of h)."""
        if len(partners) % 3:
            raise StructuralInputError("partner array length must be a multiple of 3")
        pairs = []
        for h, mate in enumerate(partners):
            if mate < 0 or mate >= len(partners) or partners[mate] != h:
                raise StructuralInputError(f"partner array is not an involution at {h}")
            if h < mate:
                pairs.append((h, mate))
        return cls(len(partners) // 3, tuple(pairs))

    @classmethod
    def from_pairs(cls, n_vertices: int, pairs: Iterable[Sequence[int]]) -> "Pairing":
        return cls(n_vertices, tuple((int(a), int(b)) for a, b in pairs))

    @property
    def n_half_edges(self) -> int:
        return 3 * self.n_vertices

    @cached_property
    def partners(self) -> Tuple[int, ...]:
        mates = [0] * self.n_half_edges
        for a, b in self.pairs:
            mates[a] = b
            mates[b] = a
        return tuple(mates)

    def internal_pairs(self) -> List[HalfEdgePair]:
        """Pairs whose two half-edges sit at the same vertex (loops)."""
        return [(a, b) for a, b in self.pairs if vertex_of(a) == vertex_of(b)]

    def relabel(self, permutation: Sequence[int]) -> "Pairing":
        """Apply a half-edge relabeling h -> permutation[h]."""
        return Pairing(self.n_vertices, tuple((permutation[a], permutation[b]) for a, b in self.pairs))
