"""Combinatorial maps: triangles glued along their sides.

A map on 3N darts is a pair of permutations. sigma rotates the three sides
of each triangle and alpha glues sides in pairs. Dart x of the triangle over
cubic vertex v corresponds to the half-edge x of the dual graph, so a pairing
together with the label order at each vertex determines a map.

Boundary walks, the punctures of the glued surface, are the orbits of
x -> sigma[alpha[x]].
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import groupby
from math import factorial
from typing import List, Optional, Sequence, Tuple

from ..halfedge import CubicMultigraph, Pairing, build_from_pairing
from ..halfedge.canonical import encode_values
from ..utils.errors import InvariantViolation, StructuralInputError

Arc = Tuple[int, int]


@dataclass(frozen=True)
class SurfaceInvariants:
    """Counts of the glued surface.

    The Euler identity reads n_punctures - n_arcs + n_triangles
    = 2 * n_components - 2 * genus, with genus summed over components.
    """
    n_triangles: int
    n_arcs: int
    n_punctures: int
    genus: int
    n_components: int = 1


def _orbits(permutation: Sequence[int]) -> List[List[int]]:
    seen = [False] * len(permutation)
    orbits = []
    for start in range(len(permutation)):
        if seen[start]:
            continue
        orbit, x = [], start
        while not seen[x]:
            seen[x] = True
            orbit.append(x)
            x = permutation[x]
        orbits.append(orbit)
    return orbits


def _code_from(start: int, sigma: Sequence[int], alpha: Sequence[int],
               bound: Optional[List[int]]) -> Optional[List[int]]:
    """Breadth-first relabeling from start; None as soon as it exceeds bound."""
    labels = {start: 0}
    order = [start]
    code: List[int] = []
    comparing = bound is not None
    i = 0
    while i < len(order):
        x = order[i]
        for y in (sigma[x], alpha[x]):
            if y not in labels:
                labels[y] = len(order)
                order.append(y)
            value = labels[y]
            if comparing:
                reference = bound[len(code)]
                if value > reference:
                    return None
                if value < reference:
                    comparing = False
            code.append(value)
        i += 1
    return code


@dataclass(frozen=True)
class CombinatorialMap:
    """Oriented triangulated surface given by permutations sigma and alpha on 3N darts."""
    sigma: Tuple[int, ...]
    alpha: Tuple[int, ...]

    def __post_init__(self):
        sigma = tuple(int(x) for x in self.sigma)
        alpha = tuple(int(x) for x in self.alpha)
        size = len(sigma)
        if size == 0 or size % 3 or len(alpha) != size:
            raise StructuralInputError("sigma and alpha must act on the same 3N darts")
        if sorted(sigma) != list(range(size)) or sorted(alpha) != list(range(size)):
            raise StructuralInputError("sigma and alpha must be permutations of the darts")
        for x in range(size):
            if sigma[x] == x or sigma[sigma[sigma[x]]] != x:
                raise StructuralInputError(f"sigma cycle through dart {x} is not a triangle")
            if alpha[x] == x or alpha[alpha[x]] != x:
                raise StructuralInputError(f"alpha is not a fixed-point-free involution at dart {x}")
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "alpha", alpha)

    @property
    def n_darts(self) -> int:
        return len(self.sigma)

    @property
    def n_triangles(self) -> int:
        return len(self.sigma) // 3

    def triangles(self) -> List[Tuple[int, int, int]]:
        """Sigma cycles, each starting at its smallest dart, ordered by that dart."""
        return [
            (x, self.sigma[x], self.sigma[self.sigma[x]])
            for x in range(self.n_darts)
            if x < self.sigma[x] and x < self.sigma[self.sigma[x]]
        ]

    def arcs(self) -> List[Arc]:
        return [(x, self.alpha[x]) for x in range(self.n_darts) if x < self.alpha[x]]

    def face_permutation(self) -> Tuple[int, ...]:
        return tuple(self.sigma[self.alpha[x]] for x in range(self.n_darts))

    def boundary_walks(self) -> List[List[int]]:
        return _orbits(self.face_permutation())

    @property
    def n_punctures(self) -> int:
        return len(self.boundary_walks())

    def components(self) -> List[List[int]]:
        """Dart sets of the connected components, each sorted."""
        seen = [False] * self.n_darts
        components = []
        for start in range(self.n_darts):
            if seen[start]:
                continue
            seen[start] = True
            stack, members = [start], []
            while stack:
                x = stack.pop()
                members.append(x)
                for y in (self.sigma[x], self.alpha[x]):
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            components.append(sorted(members))
        return components

    @cached_property
    def _canonical(self) -> Tuple[bytes, int]:
        forms = []
        for component in self.components():
            best, hits = None, 0
            for start in component:
                code = _code_from(start, self.sigma, self.alpha, best)
                if code is None:
                    continue
                if best is None or code < best:
                    best, hits = code, 1
                else:
                    hits += 1
            forms.append((best, hits))
        forms.sort(key=lambda form: form[0])

        values = [self.n_darts, len(forms)]
        automorphisms = 1
        for code, hits in forms:
            values.append(len(code))
            values.extend(code)
            automorphisms *= hits
        for _, group in groupby(forms, key=lambda form: form[0]):
            automorphisms *= factorial(len(list(group)))
        return encode_values(values), automorphisms

    @property
    def canonical_code(self) -> bytes:
        """Equal for two maps iff a dart bijection carries sigma to sigma and alpha to alpha."""
        return self._canonical[0]

    @property
    def automorphism_count(self) -> int:
        """Order of the group of dart permutations commuting with sigma and alpha."""
        return self._canonical[1]

    def invariants(self) -> SurfaceInvariants:
        return surface_invariants(self)

    def to_pairing(self) -> Pairing:
        """Relabel triangle t's darts as 3t, 3t+1, 3t+2 in sigma order and read off alpha."""
        relabel = [0] * self.n_darts
        for t, triangle in enumerate(self.triangles()):
            for i, x in enumerate(triangle):
                relabel[x] = 3 * t + i
        return Pairing(self.n_triangles, tuple((relabel[a], relabel[b]) for a, b in self.arcs()))

    def underlying_multigraph(self) -> CubicMultigraph:
        """Dual cubic multigraph: one vertex per triangle, one edge per arc."""
        return build_from_pairing(self.to_pairing())

    def relabel(self, images: Sequence[int]) -> "CombinatorialMap":
        """Map with dart x renamed images[x]."""
        sigma = [0] * self.n_darts
        alpha = [0] * self.n_darts
        for x in range(self.n_darts):
            sigma[images[x]] = images[self.sigma[x]]
            alpha[images[x]] = images[self.alpha[x]]
        return CombinatorialMap(tuple(sigma), tuple(alpha))


def map_from_pairing(pairing: Pairing) -> CombinatorialMap:
    """Glue a triangle over every vertex; sides follow the label order 3v, 3v+1, 3v+2."""
    total = pairing.n_half_edges
    sigma = tuple(3 * (x // 3) + (x + 1) % 3 for x in range(total))
    return CombinatorialMap(sigma, pairing.partners)


def surface_invariants(surface_map: CombinatorialMap) -> SurfaceInvariants:
    n = surface_map.n_triangles
    arcs = surface_map.n_darts // 2
    punctures = surface_map.n_punctures
    n_components = len(surface_map.components())
    doubled_genus = 2 * n_components - punctures + arcs - n
    if doubled_genus < 0 or doubled_genus % 2:
        raise InvariantViolation(
            f"Euler identity gives non-integral genus: {punctures} punctures, {n} triangles, "
            f"{n_components} components"
        )
    return SurfaceInvariants(n, arcs, punctures, doubled_genus // 2, n_components)


def torus_map() -> CombinatorialMap:
    """Two triangles glued into a once-punctured torus."""
    return map_from_pairing(Pairing(2, ((0, 3), (1, 4), (2, 5))))


def tetrahedron_map() -> CombinatorialMap:
    """Boundary of a tetrahedron: four triangles, four punctures, genus 0."""
    return map_from_pairing(Pairing(4, ((0, 5), (1, 9), (2, 6), (3, 8), (4, 10), (7, 11))))


def reverse_rotations(pairing: Pairing, vertices: Sequence[int]) -> Pairing:
    """Swap labels 3v+1 and 3v+2 at the given vertices, reversing their cyclic order."""
    images = list(range(pairing.n_half_edges))
    for v in vertices:
        images[3 * v + 1], images[3 * v + 2] = 3 * v + 2, 3 * v + 1
    return pairing.relabel(images)
