"""
Enumeration - Counting and listing magic labellings through the eight-type decomposition.

Labellings at magic sum r are produced as base(tag) + K @ basis(tag) for every
k-vector K with sum r - offset(tag), in numpy blocks. Distinct, canonical and
ordering-constraint filters run row-wise over those blocks.
"""

import math
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Iterator, Optional, Sequence

import networkx as nx
import numpy as np

from config import GROUP_ORDER
from src.cone import CONE_TYPES, TAGS
from src.cube_model import EDGE_IDS, EdgeLabelling


def _all_compositions(total: int, parts: int) -> np.ndarray:
    """Stars and bars: every composition of `total` into `parts` parts, lexicographic."""
    if parts == 1:
        return np.array([[total]], dtype=np.int64)
    slots = total + parts - 1
    bars = np.array(list(combinations(range(slots), parts - 1)), dtype=np.int64).reshape(-1, parts - 1)
    fences = np.hstack([
        np.full((len(bars), 1), -1, dtype=np.int64),
        bars,
        np.full((len(bars), 1), slots, dtype=np.int64),
    ])
    return np.diff(fences, axis=1) - 1


def _leading_values(total: int, lead: Optional[Iterable[int]]) -> list[int]:
    if lead is None:
        return list(range(total + 1))
    return sorted({int(k) for k in lead if 0 <= k <= total})


def composition_blocks(
    total: int,
    parts: int = 6,
    lead: Optional[Iterable[int]] = None,
    fixed: int = 1,
) -> Iterator[np.ndarray]:
    """
    Compositions of `total` into `parts` parts as a stream of lexicographic
    blocks. Each block shares its first `fixed` entries, so a block holds at
    most C(total + parts - fixed - 1, parts - fixed - 1) rows. `lead` restricts
    the first entry, and only the selected leading values are ever built.
    """
    if total < 0:
        return
    if parts == 1:
        if total in _leading_values(total, lead):
            yield np.array([[total]], dtype=np.int64)
        return
    for k1 in _leading_values(total, lead):
        if fixed <= 1:
            tails = [_all_compositions(total - k1, parts - 1)]
        else:
            tails = composition_blocks(total - k1, parts - 1, fixed=fixed - 1)
        for tail in tails:
            yield np.hstack([np.full((len(tail), 1), k1, dtype=np.int64), tail])


def compositions(total: int, parts: int = 6, lead: Optional[Iterable[int]] = None) -> np.ndarray:
    """
    All vectors of `parts` nonnegative integers summing to `total`, one per
    row, in lexicographic order. `lead` keeps only rows whose first entry is
    in the given values.
    """
    blocks = list(composition_blocks(total, parts, lead))
    return np.vstack(blocks) if blocks else np.zeros((0, parts), dtype=np.int64)


def type_blocks(
    r: int,
    tag: str,
    lead: Optional[Iterable[int]] = None,
    fixed: int = 1,
) -> Iterator[np.ndarray]:
    cone = CONE_TYPES[tag]
    for ks in composition_blocks(r - cone.offset, lead=lead, fixed=fixed):
        yield cone.base_vector() + ks @ cone.basis_matrix()


def type_block(r: int, tag: str, lead: Optional[Iterable[int]] = None) -> np.ndarray:
    """Labellings of one type at magic sum r, as rows of an (n, 12) array."""
    cone = CONE_TYPES[tag]
    ks = compositions(r - cone.offset, lead=lead)
    return cone.base_vector() + ks @ cone.basis_matrix()


def labelling_blocks(
    r: int,
    tags: Sequence[str] = TAGS,
    lead: Optional[Iterable[int]] = None,
    fixed: int = 2,
) -> Iterator[np.ndarray]:
    """All magic labellings with magic sum r as a stream of (n, 12) blocks."""
    if r < 0:
        raise ValueError(f"Magic sum must be nonnegative, got {r}")
    lead = None if lead is None else list(lead)
    for tag in tags:
        yield from type_blocks(r, tag, lead, fixed)


def labellings_array(
    r: int,
    tags: Sequence[str] = TAGS,
    lead: Optional[Iterable[int]] = None,
) -> np.ndarray:
    """All magic labellings with magic sum r; `tags` and `lead` select a partition."""
    blocks = list(labelling_blocks(r, tags, lead, fixed=1))
    return np.vstack(blocks) if blocks else np.zeros((0, len(EDGE_IDS)), dtype=np.int64)


def enumerate_by_type(r: int) -> Iterator[EdgeLabelling]:
    """Stream compose(tag, k) over all tags and k-vectors, tags in decomposition order."""
    for block in labelling_blocks(r, fixed=4):
        for row in block:
            yield EdgeLabelling(tuple(int(x) for x in row))


def count_by_type_breakdown(r: int) -> dict[str, int]:
    """Number of k-vectors with six parts summing to r - offset, per tag."""
    return {
        tag: math.comb(r - cone.offset + 5, 5) if r >= cone.offset else 0
        for tag, cone in CONE_TYPES.items()
    }


def count_by_type(r: int) -> int:
    if r < 0:
        raise ValueError(f"Magic sum must be nonnegative, got {r}")
    return sum(count_by_type_breakdown(r).values())


def distinct_mask(labels: np.ndarray) -> np.ndarray:
    """Rows whose twelve entries are pairwise different."""
    ordered = np.sort(labels, axis=1)
    return np.all(np.diff(ordered, axis=1) != 0, axis=1)


def canonical_mask(labels: np.ndarray) -> np.ndarray:
    """Rows of type i (x1 smallest, x6 second) or type ii (x1 smallest, x4 second, x6 < x7).

    Meaningful on distinct rows only.
    """
    x = {edge: labels[:, edge - 1] for edge in EDGE_IDS}
    rest = labels[:, 1:]
    first = x[1] < rest.min(axis=1)
    second = np.argmin(rest, axis=1) + 2
    return first & ((second == 6) | ((second == 4) & (x[6] < x[7])))


@dataclass(frozen=True)
class OrderingConstraint:
    """Pinned labels plus strict orderings x_a > x_b."""
    pins: tuple[tuple[int, int], ...] = ()
    greater: tuple[tuple[int, int], ...] = ()

    def is_acyclic(self) -> bool:
        graph = nx.DiGraph()
        graph.add_edges_from(self.greater)
        return nx.is_directed_acyclic_graph(graph)

    def mask(self, labels: np.ndarray) -> np.ndarray:
        keep = np.ones(len(labels), dtype=bool)
        for edge, value in self.pins:
            keep &= labels[:, edge - 1] == value
        for a, b in self.greater:
            keep &= labels[:, a - 1] > labels[:, b - 1]
        return keep

    def holds(self, labelling: EdgeLabelling) -> bool:
        return bool(self.mask(labelling.as_array().reshape(1, -1))[0])


# x1 = 0, x6 > x1, every other label above x6
F1_CONSTRAINT = OrderingConstraint(
    pins=((1, 0),),
    greater=((6, 1),) + tuple((j, 6) for j in EDGE_IDS if j not in (1, 6)),
)

# x1 = 0, x4 > x1, every other label above x4, x6 < x7
F2_CONSTRAINT = OrderingConstraint(
    pins=((1, 0),),
    greater=((4, 1),) + tuple((j, 4) for j in EDGE_IDS if j not in (1, 4)) + ((7, 6),),
)


def count_constrained(r: int, constraint: OrderingConstraint, distinct: bool = False) -> int:
    """Magic labellings with sum r satisfying every constraint (and distinct, if asked)."""
    total = 0
    for labels in labelling_blocks(r):
        keep = constraint.mask(labels)
        if distinct:
            keep &= distinct_mask(labels)
        total += int(np.count_nonzero(keep))
    return total


def count_distinct(r: int, mode: str = "raw") -> int:
    """Distinct magic labellings with sum r ("raw") or their U-orbits ("orbits")."""
    if mode not in ("raw", "orbits"):
        raise ValueError(f"Unknown mode {mode!r}; expected 'raw' or 'orbits'")
    raw = sum(int(np.count_nonzero(distinct_mask(labels))) for labels in labelling_blocks(r))
    if mode == "raw":
        return raw
    if raw % GROUP_ORDER:
        raise AssertionError(f"{raw} distinct labellings at r={r} is not a multiple of {GROUP_ORDER}")
    return raw // GROUP_ORDER


def count_canonical(r: int) -> int:
    """Distinct magic labellings with sum r that are canonical representatives."""
    count = 0
    for labels in labelling_blocks(r):
        labels = labels[distinct_mask(labels)]
        count += int(np.count_nonzero(canonical_mask(labels)))
    return count


@dataclass
class CountReport:
    """Counts at one magic sum; distinct fields stay None unless requested."""
    r: int
    total: int
    by_type: dict[str, int] = field(default_factory=dict)
    distinct_raw: Optional[int] = None
    distinct_orbits: Optional[int] = None
    canonical: Optional[int] = None

    def to_json(self) -> dict:
        data = {
            'r': str(self.r),
            'total': str(self.total),
            'by_type': {tag: str(count) for tag, count in self.by_type.items()},
        }
        for key in ('distinct_raw', 'distinct_orbits', 'canonical'):
            value = getattr(self, key)
            if value is not None:
                data[key] = str(value)
        return data


def count_report(r: int, distinct: bool = False) -> CountReport:
    report = CountReport(r=r, total=count_by_type(r), by_type=count_by_type_breakdown(r))
    if distinct:
        report.distinct_raw = count_distinct(r, "raw")
        report.distinct_orbits = count_distinct(r, "orbits")
        report.canonical = count_canonical(r)
    return report


def shuffles(pi: Sequence, sigma: Sequence) -> set[tuple]:
    """All interleavings of pi and sigma keeping the order within each."""
    pi, sigma = tuple(pi), tuple(sigma)
    if set(pi) & set(sigma):
        raise ValueError(f"Sequences share symbols: {set(pi) & set(sigma)}")
    n = len(pi) + len(sigma)
    result = set()
    for positions in combinations(range(n), len(pi)):
        slots = set(positions)
        first, second = iter(pi), iter(sigma)
        result.add(tuple(next(first) if i in slots else next(second) for i in range(n)))
    return result


def shuffle_partition_holds(a: Sequence, b: Sequence) -> bool:
    """The shuffle sets of all (pi, sigma) in S_A x S_B partition S_(A u B)."""
    seen: set[tuple] = set()
    total = 0
    for pi in permutations(a):
        for sigma in permutations(b):
            block = shuffles(pi, sigma)
            total += len(block)
            seen |= block
    return total == len(seen) and seen == set(permutations(tuple(a) + tuple(b)))


def constrained_distinct_counts(max_r: int) -> list[int]:
    """c_s: distinct labellings in the F1 or F2 constraint set at sum s, s = 0..max_r."""
    counts = []
    for s in range(max_r + 1):
        c = 0
        for labels in labelling_blocks(s):
            distinct = distinct_mask(labels)
            c += int(np.count_nonzero(distinct & F1_CONSTRAINT.mask(labels)))
            c += int(np.count_nonzero(distinct & F2_CONSTRAINT.mask(labels)))
        counts.append(c)
    return counts


def assemble_orbit_series(max_r: int) -> list[int]:
    """g_r = sum over m >= 0 of c_(r - 3m): adding back multiples of the all-ones labelling."""
    if max_r < 0:
        raise ValueError(f"max_r must be nonnegative, got {max_r}")
    c = constrained_distinct_counts(max_r)
    return [sum(c[s] for s in range(r, -1, -3)) for r in range(max_r + 1)]
