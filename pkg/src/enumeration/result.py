"""Enumeration result container."""

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Tuple, Union

from ..halfedge import CubicMultigraph, is_connected, is_simple
from ..surface import CombinatorialMap
from ..utils.errors import InvariantViolation

Representative = Union[CubicMultigraph, CombinatorialMap]


@dataclass
class EnumerationResult:
    """Isomorphism classes found by one enumeration run.

    class_codes is strictly increasing; representatives and class_masses are
    aligned with it. A class mass is the number of pairings whose graph (or
    map, when oriented) lies in the class.
    """
    n_vertices: int
    method: str
    oriented: bool
    class_codes: List[bytes]
    representatives: List[Representative]
    class_masses: List[int]
    counts: Dict[str, int] = field(default_factory=dict)
    filter: str = "all"

    def __post_init__(self):
        if any(a >= b for a, b in zip(self.class_codes, self.class_codes[1:])):
            raise InvariantViolation("class codes must be strictly increasing")
        if not len(self.class_codes) == len(self.representatives) == len(self.class_masses):
            raise InvariantViolation("class codes, representatives and masses must align")

    @property
    def n_classes(self) -> int:
        return len(self.class_codes)

    @property
    def pairings_covered(self) -> int:
        return sum(self.class_masses)

    @classmethod
    def from_classes(cls, n_vertices: int, method: str, oriented: bool,
                     classes: Mapping[bytes, Tuple[Representative, int]],
                     filter: str = "all") -> "EnumerationResult":
        """Build from code -> (representative, mass), filling the summary counts."""
        codes = sorted(classes)
        representatives = [classes[code][0] for code in codes]
        masses = [classes[code][1] for code in codes]

        counts = {"total": len(codes), "connected": 0, "simple": 0, "simple_connected": 0}
        if oriented:
            counts["one_puncture"] = 0
        for representative in representatives:
            graph = representative.underlying_multigraph() if oriented else representative
            connected, simple = is_connected(graph), is_simple(graph)
            counts["connected"] += connected
            counts["simple"] += simple
            counts["simple_connected"] += connected and simple
            if oriented and representative.n_punctures == 1:
                counts["one_puncture"] += 1
        return cls(n_vertices, method, oriented, codes, representatives, masses, counts, filter)
