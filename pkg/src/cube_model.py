"""
Cube Model - Vertex-edge incidence of the cube, edge labellings and the magic predicate.

Edges are numbered 1..12 and vertices 1..8 following the eight vertex
equations x1+x2+x9=r, x1+x3+x10=r, ... of the linear system. The brute-force
oracle here depends on nothing but that system.
"""

import json
import numbers
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

import networkx as nx
import numpy as np

from config import EDGE_COUNT, MAX_LABEL


EDGE_IDS = tuple(range(1, EDGE_COUNT + 1))

# One triple of edge ids per vertex, vertices 1..8 in row order of the system
VERTEX_EDGES: tuple[tuple[int, int, int], ...] = (
    (1, 2, 9),
    (1, 3, 10),
    (2, 4, 12),
    (3, 4, 11),
    (5, 6, 9),
    (5, 7, 10),
    (6, 8, 12),
    (7, 8, 11),
)


class InvalidLabellingError(ValueError):
    """Raised when a labelling is malformed or not magic where one is required."""


class InapplicableInputError(ValueError):
    """Raised when an input does not meet the precondition of a lemma check."""


def _edge_endpoints() -> dict[int, tuple[int, int]]:
    endpoints: dict[int, list[int]] = {edge: [] for edge in EDGE_IDS}
    for vertex, edges in enumerate(VERTEX_EDGES, 1):
        for edge in edges:
            endpoints[edge].append(vertex)
    return {edge: (ends[0], ends[1]) for edge, ends in endpoints.items() if len(ends) == 2}


EDGE_ENDPOINTS = _edge_endpoints()



def is_integer_value(value) -> bool:
    """Integers of any integral type (Python or numpy); bools are not labels."""
    return isinstance(value, numbers.Integral) and not isinstance(value, bool)


@dataclass(frozen=True)
class EdgeLabelling:
    """Twelve nonnegative labels in edge order x1..x12."""
    labels: tuple[int, ...]

    def __post_init__(self):
        if not all(is_integer_value(x) for x in self.labels):
            raise InvalidLabellingError(f"Labels must be integers: {tuple(self.labels)}")
        labels = tuple(int(x) for x in self.labels)
        if len(labels) != EDGE_COUNT:
            raise InvalidLabellingError(f"Expected {EDGE_COUNT} labels, got {len(labels)}")
        if any(x < 0 for x in labels):
            raise InvalidLabellingError(f"Negative label in {labels}")
        if any(x > MAX_LABEL for x in labels):
            raise InvalidLabellingError(f"Label above {MAX_LABEL} in {labels}")
        object.__setattr__(self, 'labels', labels)

    @classmethod
    def of(cls, *labels: int) -> "EdgeLabelling":
        return cls(tuple(labels))

    @classmethod
    def zero(cls) -> "EdgeLabelling":
        return cls((0,) * EDGE_COUNT)

    @classmethod
    def ones(cls) -> "EdgeLabelling":
        return cls((1,) * EDGE_COUNT)

    @classmethod
    def unit(cls, edge: int) -> "EdgeLabelling":
        """The unit vector e_edge."""
        if edge not in EDGE_IDS:
            raise InvalidLabellingError(f"Unknown edge id: {edge}")
        return cls(tuple(1 if i == edge else 0 for i in EDGE_IDS))

    @classmethod
    def from_edges(cls, edges: Iterable[int]) -> "EdgeLabelling":
        """Sum of unit vectors, e.g. from_edges([2, 3, 5, 8]) = e2+e3+e5+e8."""
        total = cls.zero()
        for edge in edges:
            total = total + cls.unit(edge)
        return total

    def label(self, edge: int) -> int:
        """Label of edge `edge` (1-based edge id)."""
        return self.labels[edge - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels)

    def __add__(self, other: "EdgeLabelling") -> "EdgeLabelling":
        return EdgeLabelling(tuple(a + b for a, b in zip(self.labels, other.labels)))

    def __mul__(self, factor: int) -> "EdgeLabelling":
        if factor < 0:
            raise ValueError(f"Scalar must be nonnegative, got {factor}")
        return EdgeLabelling(tuple(factor * x for x in self.labels))

    __rmul__ = __mul__

    def support(self) -> frozenset[int]:
        return frozenset(edge for edge in EDGE_IDS if self.label(edge) != 0)

    def as_array(self) -> np.ndarray:
        return np.array(self.labels, dtype=np.int64)

    def __str__(self) -> str:
        return format_labelling(self)


def vertex_sums(labels: Iterable[int]) -> tuple[int, ...]:
    """Sum of incident edge labels at each of the eight vertices."""
    x = tuple(labels)
    return tuple(x[a - 1] + x[b - 1] + x[c - 1] for a, b, c in VERTEX_EDGES)


def magic_sum_of(labelling: EdgeLabelling) -> Optional[int]:
    """Return the common vertex sum r, or None if the vertex sums differ."""
    sums = set(vertex_sums(labelling.labels))
    if len(sums) != 1:
        return None
    return sums.pop()


def is_magic(labelling: EdgeLabelling) -> bool:
    return magic_sum_of(labelling) is not None


def is_distinct(labelling: EdgeLabelling) -> bool:
    """True iff the twelve labels are pairwise different."""
    return len(set(labelling.labels)) == EDGE_COUNT


def shift_down(labelling: EdgeLabelling, t: int) -> EdgeLabelling:
    """Subtract t from every label; the magic sum drops by 3t."""
    if t < 0 or t > min(labelling.labels):
        raise ValueError(f"Cannot subtract {t} from a labelling with minimum {min(labelling.labels)}")
    return EdgeLabelling(tuple(x - t for x in labelling.labels))


def brute_force_enumerate(r: int, x1_values: Optional[Iterable[int]] = None) -> Iterator[EdgeLabelling]:
    """
    Stream every magic labelling with magic sum r.

    Chooses x1..x5 in [0, r] and solves the remaining seven labels from the
    vertex equations, rejecting negative values. `x1_values` restricts the
    outer loop so disjoint sub-ranges can be scanned independently.
    """
    if r < 0:
        raise ValueError(f"Magic sum must be nonnegative, got {r}")
    outer = range(r + 1) if x1_values is None else [x for x in x1_values if 0 <= x <= r]
    span = range(r + 1)

    for x1 in outer:
        for x2 in span:
            x9 = r - x1 - x2
            if x9 < 0:
                break
            for x3 in span:
                x10 = r - x1 - x3
                if x10 < 0:
                    break
                for x4 in span:
                    x12 = r - x2 - x4
                    x11 = r - x3 - x4
                    if x12 < 0 or x11 < 0:
                        break
                    for x5 in span:
                        x6 = x1 + x2 - x5
                        x7 = x1 + x3 - x5
                        x8 = x4 + x5 - x1
                        if x6 < 0 or x7 < 0:
                            break
                        if x8 < 0:
                            continue
                        labelling = EdgeLabelling((x1, x2, x3, x4, x5, x6, x7, x8, x9, x10, x11, x12))
                        if magic_sum_of(labelling) != r:
                            raise AssertionError(f"Oracle produced a non-magic labelling: {labelling}")
                        yield labelling


def brute_force_set(r: int) -> set[EdgeLabelling]:
    """Materialized variant of brute_force_enumerate for set comparisons."""
    return set(brute_force_enumerate(r))


def incidence_graph() -> nx.Graph:
    """The cube graph on vertices 1..8; each edge carries its edge id."""
    graph = nx.Graph()
    graph.add_nodes_from(range(1, len(VERTEX_EDGES) + 1))
    for edge, (u, v) in EDGE_ENDPOINTS.items():
        graph.add_edge(u, v, edge=edge)
    return graph


def check_incidence() -> bool:
    """True iff the incidence describes the cube: each edge at two vertices,
    connected, 3-regular, bipartite, girth 4."""
    appearances = [sum(edge in triple for triple in VERTEX_EDGES) for edge in EDGE_IDS]
    if any(count != 2 for count in appearances):
        return False

    graph = incidence_graph()
    if graph.number_of_nodes() != 8 or graph.number_of_edges() != EDGE_COUNT:
        return False
    if not nx.is_connected(graph):
        return False
    if any(degree != 3 for _, degree in graph.degree()):
        return False
    if not nx.is_bipartite(graph):
        return False
    girth = min(len(cycle) for cycle in nx.minimum_cycle_basis(graph))
    return girth == 4


def _graph_edges(edges: Iterable[int]) -> list[tuple[int, int]]:
    return [EDGE_ENDPOINTS[edge] for edge in edges]


def perfect_matchings() -> list[EdgeLabelling]:
    """Indicator vectors of all perfect matchings of the cube."""
    graph = incidence_graph()
    matchings = []
    for edges in combinations(EDGE_IDS, len(VERTEX_EDGES) // 2):
        if nx.is_perfect_matching(graph, set(_graph_edges(edges))):
            matchings.append(EdgeLabelling.from_edges(edges))
    return matchings


def is_hamiltonian_cycle(edges: Iterable[int]) -> bool:
    """True iff the edge set is one cycle through all eight vertices."""
    edges = list(edges)
    graph = incidence_graph()
    cycle = graph.edge_subgraph(_graph_edges(edges))
    return (
        len(set(edges)) == len(edges)
        and cycle.number_of_nodes() == graph.number_of_nodes()
        and cycle.number_of_edges() == graph.number_of_nodes()
        and all(degree == 2 for _, degree in cycle.degree())
        and nx.is_connected(cycle)
    )


def parse_labelling(text: str) -> EdgeLabelling:
    """Parse "x1,...,x12" or a JSON array of 12 integers."""
    text = text.strip()
    try:
        if text.startswith('['):
            values = json.loads(text)
        else:
            values = [int(part) for part in text.split(',')]
    except ValueError as e:
        raise InvalidLabellingError(f"Malformed labelling {text!r}: {e}") from e
    if not isinstance(values, list) or not all(is_integer_value(v) for v in values):
        raise InvalidLabellingError(f"Malformed labelling {text!r}")
    return EdgeLabelling(tuple(values))


def format_labelling(labelling: EdgeLabelling) -> str:
    return ','.join(str(x) for x in labelling.labels)


def labelling_to_json(labelling: EdgeLabelling) -> list[int]:
    return list(labelling.labels)
