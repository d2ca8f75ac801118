"""
Symmetry - The edge automorphism group U of the cube and canonical representatives.

U is obtained from the vertex automorphisms of the incidence graph, each
turned into a permutation of the edge ids 1..12. Permutations act on
labellings by moving the label of edge i to edge u(i).
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from networkx.algorithms.isomorphism import GraphMatcher

from config import GROUP_ORDER
from src.cube_model import (
    EDGE_ENDPOINTS,
    EDGE_IDS,
    EdgeLabelling,
    InapplicableInputError,
    InvalidLabellingError,
    VERTEX_EDGES,
    incidence_graph,
    is_distinct,
    magic_sum_of,
)

# Parenthesized comma-separated edge ids, or "()" for the identity; whitespace removed
CYCLE_NOTATION = re.compile(r"\(\)|(\(\d+(,\d+)*\))*")


@dataclass(frozen=True, order=True)
class EdgePermutation:
    """A bijection on edge ids; image[i-1] is where edge i goes."""
    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(e) for e in self.image)
        if sorted(image) != list(EDGE_IDS):
            raise ValueError(f"Not a permutation of the edges: {image}")
        object.__setattr__(self, 'image', image)

    @classmethod
    def identity(cls) -> "EdgePermutation":
        return cls(EDGE_IDS)

    @classmethod
    def from_cycles(cls, text: str) -> "EdgePermutation":
        """Parse cycle notation such as "(2,3)(9,10)(6,7)(11,12)"."""
        compact = re.sub(r'\s+', '', text)
        if not CYCLE_NOTATION.fullmatch(compact):
            raise ValueError(f"Malformed cycle notation: {text!r}")
        if compact == "()":
            return cls.identity()
        image = list(EDGE_IDS)
        seen: set[int] = set()
        for body in re.findall(r'\(([^()]*)\)', compact):
            cycle = [int(part) for part in body.split(',')]
            if seen.intersection(cycle) or len(set(cycle)) != len(cycle) or any(e not in EDGE_IDS for e in cycle):
                raise ValueError(f"Malformed cycle notation: {text!r}")
            seen.update(cycle)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                image[a - 1] = b
        return cls(tuple(image))

    def __call__(self, edge: int) -> int:
        return self.image[edge - 1]

    def compose(self, other: "EdgePermutation") -> "EdgePermutation":
        """self after other: edge i goes to self(other(i))."""
        return EdgePermutation(tuple(self(other(edge)) for edge in EDGE_IDS))

    def inverse(self) -> "EdgePermutation":
        inverse = [0] * len(EDGE_IDS)
        for edge in EDGE_IDS:
            inverse[self(edge) - 1] = edge
        return EdgePermutation(tuple(inverse))

    def is_identity(self) -> bool:
        return self.image == EDGE_IDS

    def fixes(self, edge: int) -> bool:
        return self(edge) == edge

    def preserves_incidence(self) -> bool:
        """True iff vertex triples are mapped to vertex triples."""
        triples = {frozenset(t) for t in VERTEX_EDGES}
        return all(frozenset(self(e) for e in t) in triples for t in triples)

    def to_cycles(self) -> str:
        """Cycle notation without fixed points; "()" for the identity."""
        seen: set[int] = set()
        cycles = []
        for start in EDGE_IDS:
            if start in seen or self.fixes(start):
                continue
            cycle = [start]
            seen.add(start)
            edge = self(start)
            while edge != start:
                cycle.append(edge)
                seen.add(edge)
                edge = self(edge)
            cycles.append('(' + ','.join(str(e) for e in cycle) + ')')
        return ''.join(cycles) or '()'

    def __str__(self) -> str:
        return self.to_cycles()


@dataclass(frozen=True)
class PermutationGroup:
    elements: frozenset[EdgePermutation]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, u: EdgePermutation) -> bool:
        return u in self.elements

    def __iter__(self) -> Iterator[EdgePermutation]:
        return iter(sorted(self.elements))

    def is_closed(self) -> bool:
        """Contains the identity and is closed under composition and inverse."""
        if EdgePermutation.identity() not in self.elements:
            return False
        return all(
            u.inverse() in self.elements and all(u.compose(v) in self.elements for v in self.elements)
            for u in self.elements
        )

    def is_faithful(self) -> bool:
        """Only the identity fixes every edge."""
        return sum(1 for u in self.elements if all(u.fixes(e) for e in EDGE_IDS)) == 1


def generate(generators: Iterable[EdgePermutation]) -> PermutationGroup:
    """Closure of the generators under composition."""
    generators = list(generators)
    elements = {EdgePermutation.identity()}
    frontier = list(elements)
    while frontier:
        new = []
        for u in frontier:
            for g in generators:
                v = g.compose(u)
                if v not in elements:
                    elements.add(v)
                    new.append(v)
        frontier = new
    return PermutationGroup(frozenset(elements))


def _edge_permutation(vertex_map: dict[int, int]) -> EdgePermutation:
    by_endpoints = {frozenset(ends): edge for edge, ends in EDGE_ENDPOINTS.items()}
    return EdgePermutation(tuple(
        by_endpoints[frozenset(vertex_map[v] for v in EDGE_ENDPOINTS[edge])] for edge in EDGE_IDS
    ))


@lru_cache(maxsize=1)
def build_group() -> PermutationGroup:
    """The 48 edge permutations induced by automorphisms of the cube graph."""
    graph = incidence_graph()
    matcher = GraphMatcher(graph, graph)
    elements = frozenset(_edge_permutation(m) for m in matcher.isomorphisms_iter())
    if len(elements) != GROUP_ORDER:
        raise AssertionError(f"Expected {GROUP_ORDER} edge automorphisms, found {len(elements)}")
    return PermutationGroup(elements)


def stabilizer(group: PermutationGroup, edge: int) -> PermutationGroup:
    """Subgroup of elements fixing the given edge."""
    if edge not in EDGE_IDS:
        raise ValueError(f"Unknown edge id: {edge}")
    return PermutationGroup(frozenset(u for u in group.elements if u.fixes(edge)))


def orbits(group: PermutationGroup) -> set[frozenset[int]]:
    """Partition of the edge ids into orbits of the group."""
    return {frozenset(u(edge) for u in group.elements) for edge in EDGE_IDS}


# Generators of the stabilizer of edge 1
U1_GENERATORS = (
    EdgePermutation.from_cycles("(2,3)(9,10)(6,7)(11,12)"),
    EdgePermutation.from_cycles("(3,10)(4,5)(7,11)(6,12)(2,9)"),
)


def apply(u: EdgePermutation, labelling: EdgeLabelling) -> EdgeLabelling:
    """Move the label of edge i to edge u(i)."""
    labels = [0] * len(EDGE_IDS)
    for edge in EDGE_IDS:
        labels[u(edge) - 1] = labelling.label(edge)
    return EdgeLabelling(tuple(labels))


def _require_magic(labelling: EdgeLabelling):
    if magic_sum_of(labelling) is None:
        raise InapplicableInputError(f"Not a magic labelling: {labelling}")


def check_second_smallest_lemma(labelling: EdgeLabelling) -> bool:
    """
    For a magic labelling whose x1 is strictly smallest, check that the
    minimum of x2..x12 is attained at none of the edges 2, 3, 8, 9, 10.
    """
    _require_magic(labelling)
    x1 = labelling.label(1)
    rest = {edge: labelling.label(edge) for edge in EDGE_IDS if edge != 1}
    if any(x1 >= value for value in rest.values()):
        raise InapplicableInputError(f"x1 is not strictly smallest in {labelling}")
    second = min(rest.values())
    return not any(rest[edge] == second for edge in (2, 3, 8, 9, 10))


def is_canonical(labelling: EdgeLabelling) -> bool:
    """Type i (x1 smallest, x6 second) or type ii (x1 smallest, x4 second, x6 < x7)."""
    x = labelling.label
    rest = [edge for edge in EDGE_IDS if edge != 1]
    if any(x(1) >= x(edge) for edge in rest):
        return False
    if all(x(6) < x(edge) for edge in rest if edge != 6):
        return True
    return all(x(4) < x(edge) for edge in rest if edge != 4) and x(6) < x(7)


def canonical_form(labelling: EdgeLabelling) -> tuple[EdgeLabelling, EdgePermutation, str]:
    """
    The unique u in U with apply(u, labelling) canonical.

    Returns (canonical labelling, u, "i" or "ii"). Only distinct magic
    labellings have a well-defined second smallest label.
    """
    if magic_sum_of(labelling) is None:
        raise InvalidLabellingError(f"Not a magic labelling: {labelling}")
    if not is_distinct(labelling):
        raise InvalidLabellingError(f"Labels are not distinct: {labelling}")

    hits = []
    for u in build_group():
        image = apply(u, labelling)
        if is_canonical(image):
            hits.append((image, u))

    if len(hits) != 1:
        raise AssertionError(f"{len(hits)} canonical images for {labelling}, expected exactly one")
    image, u = hits[0]
    shape = "i" if all(image.label(6) < image.label(e) for e in EDGE_IDS if e not in (1, 6)) else "ii"
    return image, u, shape


def orbit(labelling: EdgeLabelling, group: Optional[PermutationGroup] = None) -> set[EdgeLabelling]:
    group = build_group() if group is None else group
    return {apply(u, labelling) for u in group.elements}
