"""
Cone - The nine perfect-matching vectors, q-coordinates and the eight-type decomposition.

Every magic labelling is written uniquely as base(tag) + k1*b1 + ... + k6*b6 with
k_i >= 0, for exactly one of the tags t1, t2, t31, t32, t33, t34, t351, t352.
`classify` computes (tag, k) from the q-coordinates, `compose` goes back.
"""

from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional, Union

import numpy as np
import sympy

from src.cube_model import (
    EDGE_IDS,
    EdgeLabelling,
    InvalidLabellingError,
    is_integer_value,
    magic_sum_of,
)


# Supports of the perfect matchings alpha_1..alpha_9
ALPHA_SUPPORTS: dict[int, tuple[int, int, int, int]] = {
    1: (2, 3, 5, 8),
    2: (1, 4, 6, 7),
    3: (1, 5, 11, 12),
    4: (2, 6, 10, 11),
    5: (1, 4, 5, 8),
    6: (4, 8, 9, 10),
    7: (3, 7, 9, 12),
    8: (2, 3, 6, 7),
    9: (9, 10, 11, 12),
}

Symbol = Union[int, str]  # 1..9 for alpha_i, "T" for the all-ones vector


@dataclass(frozen=True)
class BasisTable:
    """The vectors alpha_1..alpha_9 and T."""
    alphas: tuple[EdgeLabelling, ...]
    total: EdgeLabelling

    @classmethod
    def from_supports(cls, supports: dict[int, tuple[int, ...]]) -> "BasisTable":
        alphas = tuple(EdgeLabelling.from_edges(supports[i]) for i in range(1, 10))
        return cls(alphas=alphas, total=EdgeLabelling.from_edges(EDGE_IDS))

    def vector(self, symbol: Symbol) -> EdgeLabelling:
        if symbol == "T":
            return self.total
        return self.alphas[symbol - 1]

    def replace(self, symbol: Symbol, vector: EdgeLabelling) -> "BasisTable":
        """Copy of the table with one vector swapped out."""
        if symbol == "T":
            return BasisTable(self.alphas, vector)
        alphas = list(self.alphas)
        alphas[symbol - 1] = vector
        return BasisTable(tuple(alphas), self.total)


BASIS = BasisTable.from_supports(ALPHA_SUPPORTS)


# The displayed relations, each a list of sides that must all be equal.
# Every side is scaled by 2 so the two halved expressions stay integral.
Side = dict[Symbol, int]
RELATIONS: list[list[Side]] = [
    [{1: 2}, {3: 2, 4: 2, 6: 2, 7: 2, 2: -2, 9: -4}],
    [{2: 2}, {3: 2, 4: 2, 6: 2, 7: 2, 1: -2, 9: -4}],
    [{3: 2}, {1: 2, 2: 2, 4: 2, 7: 2, 6: -2, 8: -4}],
    [{4: 2}, {1: 2, 2: 2, 3: 2, 6: 2, 5: -4, 7: -2}],
    [{6: 2}, {1: 2, 2: 2, 4: 2, 7: 2, 3: -2, 8: -4}],
    [{5: 2}, {1: 2, 2: 2, 8: -2}, {3: 2, 6: 2, 9: -2}, {1: 1, 2: 1, 3: 1, 6: 1, 4: -1, 7: -1}],
    [{"T": 2}, {1: 2, 2: 2, 9: 2}, {3: 2, 6: 2, 8: 2}, {4: 2, 5: 2, 7: 2}, {1: 1, 2: 1, 3: 1, 4: 1, 6: 1, 7: 1}],
]


def _combine(table: BasisTable, side: Side) -> np.ndarray:
    total = np.zeros(len(EDGE_IDS), dtype=np.int64)
    for symbol, coefficient in side.items():
        total += coefficient * table.vector(symbol).as_array()
    return total


def verify_relations(table: BasisTable = BASIS, relations: Optional[list[list[Side]]] = None) -> bool:
    """True iff every displayed relation holds as an integer-vector identity."""
    relations = RELATIONS if relations is None else relations
    for sides in relations:
        first = _combine(table, sides[0])
        if not all(np.array_equal(first, _combine(table, side)) for side in sides[1:]):
            return False
    return True


class QCoords(NamedTuple):
    """Coordinates of a labelling in the basis alpha_1..alpha_6."""
    q1: int
    q2: int
    q3: int
    q4: int
    q5: int
    q6: int


# Row j holds the coordinates x1..x12 contributed by q_j (alpha_1..alpha_6)
Q_MATRIX = np.array([BASIS.vector(i).labels for i in range(1, 7)], dtype=np.int64)


def reconstruct(q: QCoords) -> tuple[int, ...]:
    """q1*alpha_1 + ... + q6*alpha_6 coordinate by coordinate; entries may be negative."""
    q1, q2, q3, q4, q5, q6 = q
    return (
        q2 + q3 + q5,
        q1 + q4,
        q1,
        q2 + q5 + q6,
        q1 + q3 + q5,
        q2 + q4,
        q2,
        q1 + q5 + q6,
        q6,
        q4 + q6,
        q3 + q4,
        q3,
    )


def q_coordinates(labelling: EdgeLabelling) -> Optional[QCoords]:
    """q-coordinates of a magic labelling, or None if it is not magic."""
    if magic_sum_of(labelling) is None:
        return None
    x = labelling.label
    return QCoords(
        q1=x(3),
        q2=x(7),
        q3=x(12),
        q4=x(2) - x(3),
        q5=x(5) - x(3) - x(12),
        q6=x(9),
    )


def satisfies_C1_C2_C3(q: QCoords) -> bool:
    """Membership conditions for q1*alpha_1 + ... + q6*alpha_6 to be a magic labelling."""
    q1, q2, q3, q4, q5, q6 = q
    c1 = min(q1, q2, q3, q6) >= 0
    c2 = min(q1 + q4, q2 + q4, q3 + q4, q6 + q4) >= 0
    c3 = min(q1 + q3 + q5, q1 + q5 + q6, q2 + q3 + q5, q2 + q5 + q6) >= 0
    return c1 and c2 and c3


def satisfies_conditions_array(qs: np.ndarray) -> np.ndarray:
    """Row-wise satisfies_C1_C2_C3 for an (n, 6) integer array."""
    q1, q2, q3, q4, q5, q6 = qs.T
    c1 = (q1 >= 0) & (q2 >= 0) & (q3 >= 0) & (q6 >= 0)
    c2 = (q1 + q4 >= 0) & (q2 + q4 >= 0) & (q3 + q4 >= 0) & (q6 + q4 >= 0)
    c3 = (q1 + q3 + q5 >= 0) & (q1 + q5 + q6 >= 0) & (q2 + q3 + q5 >= 0) & (q2 + q5 + q6 >= 0)
    return c1 & c2 & c3


TAGS = ("t1", "t2", "t31", "t32", "t33", "t34", "t351", "t352")


@dataclass(frozen=True)
class ConeType:
    """One shifted free monoid: base + nonnegative combinations of six basis vectors."""
    tag: str
    base_terms: tuple[Symbol, ...]
    basis_indices: tuple[int, ...]
    base: EdgeLabelling = field(init=False)
    basis: tuple[EdgeLabelling, ...] = field(init=False)

    def __post_init__(self):
        base = EdgeLabelling.zero()
        for symbol in self.base_terms:
            base = base + BASIS.vector(symbol)
        object.__setattr__(self, 'base', base)
        object.__setattr__(self, 'basis', tuple(BASIS.vector(i) for i in self.basis_indices))

    @property
    def offset(self) -> int:
        """Magic sum of the base vector."""
        return magic_sum_of(self.base)

    def base_vector(self) -> np.ndarray:
        return self.base.as_array()

    def basis_matrix(self) -> np.ndarray:
        return np.array([b.labels for b in self.basis], dtype=np.int64)


# Basis order follows the decomposition; k_j multiplies basis[j-1].
CONE_TYPES: dict[str, ConeType] = {
    cone.tag: cone for cone in (
        ConeType("t1", (), (1, 2, 3, 4, 5, 6)),
        ConeType("t2", (7,), (1, 2, 3, 5, 6, 7)),
        ConeType("t31", (9,), (2, 3, 4, 6, 7, 9)),
        ConeType("t32", (1, 9), (1, 3, 4, 6, 7, 9)),
        ConeType("t33", (6, 8), (1, 2, 4, 6, 7, 8)),
        ConeType("t34", (8,), (1, 2, 3, 4, 7, 8)),
        ConeType("t351", (4, 7), (1, 2, 3, 4, 6, 7)),
        ConeType("t352", ("T",), (1, 2, 3, 4, 6, 7)),
    )
}


def basis_rank(tag: str) -> int:
    """Rank over the rationals of the six basis vectors of a type."""
    return sympy.Matrix(CONE_TYPES[tag].basis_matrix().tolist()).rank()


@dataclass(frozen=True)
class TypeDecomposition:
    """A type tag with six nonnegative multiplicities."""
    tag: str
    ks: tuple[int, ...]

    def __post_init__(self):
        if self.tag not in CONE_TYPES:
            raise ValueError(f"Unknown type tag: {self.tag!r}")
        if not all(is_integer_value(k) for k in self.ks):
            raise ValueError(f"Multiplicities must be integers: {tuple(self.ks)}")
        ks = tuple(int(k) for k in self.ks)
        if len(ks) != 6:
            raise ValueError(f"Expected 6 multiplicities, got {len(ks)}")
        if any(k < 0 for k in ks):
            raise ValueError(f"Multiplicities must be nonnegative: {ks}")
        object.__setattr__(self, 'ks', ks)

    def to_json(self) -> dict:
        return {"type": self.tag, "ks": list(self.ks)}

    @classmethod
    def from_json(cls, data: dict) -> "TypeDecomposition":
        return cls(tag=data["type"], ks=tuple(data["ks"]))


def compose(decomposition: TypeDecomposition) -> EdgeLabelling:
    """base(tag) + sum of k_j * basis_j(tag)."""
    cone = CONE_TYPES[decomposition.tag]
    labelling = cone.base
    for k, vector in zip(decomposition.ks, cone.basis):
        labelling = labelling + k * vector
    return labelling


def _in_p3(q: QCoords) -> bool:
    return q.q5 < 0 and q.q5 < 2 * q.q4


# Regions of the (q4, q5)-plane and their refinement; mutually exclusive on magic labellings
REGIONS: dict[str, Callable[[QCoords], bool]] = {
    "P1": lambda q: q.q4 >= 0 and q.q5 >= 0,
    "P2": lambda q: q.q4 < 0 and q.q5 >= 2 * q.q4,
    "P31": lambda q: _in_p3(q) and 2 * q.q1 + q.q5 < 0 and q.q1 <= q.q2,
    "P32": lambda q: _in_p3(q) and 2 * q.q2 + q.q5 < 0 and q.q2 < q.q1,
    "P33": lambda q: _in_p3(q) and 2 * q.q3 + q.q5 < 0 and q.q3 < q.q6,
    "P34": lambda q: _in_p3(q) and 2 * q.q6 + q.q5 < 0 and q.q6 <= q.q3,
    "P35": lambda q: _in_p3(q) and min(2 * q.q1, 2 * q.q2, 2 * q.q3, 2 * q.q6) + q.q5 >= 0,
}


def _p35_ks(q: QCoords) -> tuple[int, ...]:
    # floor(q5/2) covers both parities: q5/2 when even, (q5-1)/2 when odd
    h = q.q5 // 2
    return (q.q1 + h, q.q2 + h, q.q3 + h, q.q4 - h - 1, q.q6 + h, -(h + 1))


# k_j is the coefficient of basis_j in the rewritten expansion of each region
K_FORMULAS: dict[str, Callable[[QCoords], tuple[int, ...]]] = {
    "P1": lambda q: tuple(q),
    "P2": lambda q: (
        q.q1 + q.q4, q.q2 + q.q4, q.q3 + q.q4, q.q5 - 2 * q.q4, q.q6 + q.q4, -(q.q4 + 1),
    ),
    "P31": lambda q: (
        q.q2 - q.q1, q.q1 + q.q3 + q.q5, q.q1 + q.q4, q.q1 + q.q5 + q.q6, q.q1, -(2 * q.q1 + q.q5 + 1),
    ),
    "P32": lambda q: (
        q.q1 - q.q2 - 1, q.q2 + q.q3 + q.q5, q.q2 + q.q4, q.q2 + q.q5 + q.q6, q.q2, -(2 * q.q2 + q.q5 + 1),
    ),
    "P33": lambda q: (
        q.q1 + q.q3 + q.q5, q.q2 + q.q3 + q.q5, q.q3 + q.q4, q.q6 - q.q3 - 1, q.q3, -(2 * q.q3 + q.q5 + 1),
    ),
    "P34": lambda q: (
        q.q1 + q.q5 + q.q6, q.q2 + q.q5 + q.q6, q.q3 - q.q6, q.q4 + q.q6, q.q6, -(2 * q.q6 + q.q5 + 1),
    ),
    "P35": _p35_ks,
}

REGION_TAGS = {"P1": "t1", "P2": "t2", "P31": "t31", "P32": "t32", "P33": "t33", "P34": "t34"}


def type_of_region(q: QCoords) -> str:
    """The unique region containing q; raises AssertionError if none or several match."""
    matches = [name for name, inside in REGIONS.items() if inside(q)]
    if len(matches) != 1:
        raise AssertionError(f"q = {tuple(q)} lies in regions {matches}, expected exactly one")
    return matches[0]


def classify(labelling: EdgeLabelling) -> TypeDecomposition:
    """The unique (tag, k) with compose(tag, k) == labelling."""
    q = q_coordinates(labelling)
    if q is None:
        raise InvalidLabellingError(f"Not a magic labelling: {labelling}")

    region = type_of_region(q)
    ks = K_FORMULAS[region](q)
    if any(k < 0 for k in ks):
        raise AssertionError(f"Region {region} gave negative multiplicities {ks} for {labelling}")

    if region == "P35":
        tag = "t351" if q.q5 % 2 == 0 else "t352"
    else:
        tag = REGION_TAGS[region]
    return TypeDecomposition(tag=tag, ks=ks)
