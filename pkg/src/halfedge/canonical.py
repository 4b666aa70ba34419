"""Canonical labeling of small multigraphs by individualization-refinement.

Graphs are passed as plain adjacency data so that both finished cubic
multigraphs and the partial graphs of the orderly generator share one code:

    neighbors[v] -> list of (w, multiplicity) with w != v
    loops[v]     -> number of loops at v
    colors[v]    -> optional vertex color (marks)

The code of a connected component is the minimum, over all leaves of the
search tree, of an encoding of the ordered graph. Leaves attaining the
minimum differ by automorphisms, so their number is the automorphism count
and the maps between them are the automorphisms themselves.
"""

from dataclasses import dataclass
from itertools import groupby
from math import factorial
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

Adjacency = Sequence[Sequence[Tuple[int, int]]]

CYCLE_PROFILE_LENGTH = 5


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical code, canonical vertex order and automorphism group.

    automorphism_maps lists the automorphisms that fix every connected
    component (all of them for a connected graph) as vertex images;
    automorphisms also counts permutations of isomorphic components.
    """
    code: bytes
    order: Tuple[int, ...]
    automorphisms: int
    automorphism_maps: Tuple[Tuple[int, ...], ...] = ()

    def position(self) -> List[int]:
        """Inverse of order: canonical position of each vertex."""
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos

    def orbits(self) -> List[int]:
        """Smallest vertex of each vertex's orbit under automorphism_maps."""
        parent = list(range(len(self.order)))

        def root(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for images in self.automorphism_maps:
            for v, w in enumerate(images):
                a, b = root(v), root(w)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return [root(v) for v in range(len(parent))]


def encode_values(values: Sequence[int]) -> bytes:
    """Platform-independent encoding of small non-negative integers."""
    return np.asarray(values, dtype=">u2").tobytes()


def connected_components(n: int, neighbors: Adjacency) -> List[List[int]]:
    """Vertex sets of the connected components, each sorted."""
    seen = [False] * n
    components = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        stack, members = [start], []
        while stack:
            v = stack.pop()
            members.append(v)
            for w, _ in neighbors[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        components.append(sorted(members))
    return components


def cycle_profile(neighbors: Adjacency, v: int, max_length: int = CYCLE_PROFILE_LENGTH) -> Tuple[int, ...]:
    """Multiplicity-weighted counts of closed simple paths through v, lengths 3..max_length."""
    counts = [0] * (max_length + 1)
    visited = {v}

    def walk(current: int, depth: int, weight: int) -> None:
        for w, m in neighbors[current]:
            if w == v:
                if depth >= 2:
                    counts[depth + 1] += weight * m
            elif w not in visited and depth + 1 < max_length:
                visited.add(w)
                walk(w, depth + 1, weight * m)
                visited.discard(w)

    walk(v, 0, 1)
    return tuple(counts[3:])


def vertex_invariants(n: int, neighbors: Adjacency, loops: Sequence[int],
                      colors: Sequence[int]) -> List[tuple]:
    return [
        (colors[v], loops[v], tuple(sorted(m for _, m in neighbors[v])), cycle_profile(neighbors, v))
        for v in range(n)
    ]


def refine(neighbors: Adjacency, cells: List[List[int]]) -> List[List[int]]:
    """Coarsest equitable refinement of an ordered partition."""
    while True:
        index = {}
        for i, cell in enumerate(cells):
            for v in cell:
                index[v] = i

        refined: List[List[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            signature = {v: tuple(sorted((index[w], m) for w, m in neighbors[v])) for v in cell}
            keys = sorted(set(signature.values()))
            if len(keys) == 1:
                refined.append(cell)
                continue
            changed = True
            for key in keys:
                refined.append([v for v in cell if signature[v] == key])

        cells = refined
        if not changed:
            return cells


def _leaves(neighbors: Adjacency, cells: List[List[int]]) -> Iterator[List[int]]:
    cells = refine(neighbors, cells)

    target = None
    for i, cell in enumerate(cells):
        if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
            target = i

    if target is None:
        yield [cell[0] for cell in cells]
        return

    cell = cells[target]
    for v in cell:
        rest = [w for w in cell if w != v]
        yield from _leaves(neighbors, cells[:target] + [[v], rest] + cells[target + 1:])


def _leaf_code(order: Sequence[int], neighbors: Adjacency, loops: Sequence[int],
               colors: Sequence[int]) -> List[int]:
    pos = {v: i for i, v in enumerate(order)}
    values = [len(order)]
    values.extend(colors[v] for v in order)
    values.extend(loops[v] for v in order)
    edges = sorted(
        (pos[v], pos[w], m)
        for v in order
        for w, m in neighbors[v]
        if pos[v] < pos[w]
    )
    for edge in edges:
        values.extend(edge)
    return values


def _component_form(vertices: List[int], neighbors: Adjacency, loops: Sequence[int],
                    colors: Sequence[int], invariants: List[tuple]):
    keys = sorted(set(invariants[v] for v in vertices))
    cells = [[v for v in vertices if invariants[v] == key] for key in keys]

    best, best_order, minimal = None, None, []
    for order in _leaves(neighbors, cells):
        code = _leaf_code(order, neighbors, loops, colors)
        if best is None or code < best:
            best, best_order, minimal = code, order, [order]
        elif code == best:
            minimal.append(order)
    return best, best_order, minimal


def canonical_form(n: int, neighbors: Adjacency, loops: Sequence[int],
                   colors: Optional[Sequence[int]] = None,
                   invariants: Optional[List[tuple]] = None) -> CanonicalForm:
    """Canonical form of a (possibly colored, possibly disconnected) multigraph.

    invariants may pass precomputed vertex_invariants for the same colors.
    """
    colors = list(colors) if colors is not None else [0] * n
    if invariants is None:
        invariants = vertex_invariants(n, neighbors, loops, colors)

    forms = [
        _component_form(component, neighbors, loops, colors, invariants)
        for component in connected_components(n, neighbors)
    ]
    forms.sort(key=lambda form: form[0])

    values = [n, len(forms)]
    order: List[int] = []
    automorphisms = 1
    maps = [tuple(range(n))]
    for code, component_order, minimal in forms:
        values.append(len(code))
        values.extend(code)
        order.extend(component_order)
        automorphisms *= len(minimal)
        if len(minimal) > 1:
            # compose with the maps of earlier components
            extended = []
            for base in maps:
                for leaf in minimal:
                    images = list(base)
                    for v, w in zip(component_order, leaf):
                        images[v] = w
                    extended.append(tuple(images))
            maps = extended

    # isomorphic components may be permuted freely
    for _, group in groupby(forms, key=lambda form: form[0]):
        automorphisms *= factorial(len(list(group)))

    return CanonicalForm(encode_values(values), tuple(order), automorphisms, tuple(maps))
