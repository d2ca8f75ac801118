import json

import numpy as np
import pytest
from hypothesis import given
import hypothesis.strategies as st

from config import MAX_LABEL
from src.cube_model import (
    EDGE_ENDPOINTS,
    EDGE_IDS,
    VERTEX_EDGES,
    EdgeLabelling,
    InvalidLabellingError,
    brute_force_enumerate,
    brute_force_set,
    check_incidence,
    format_labelling,
    incidence_graph,
    is_distinct,
    is_hamiltonian_cycle,
    is_magic,
    labelling_to_json,
    magic_sum_of,
    parse_labelling,
    perfect_matchings,
    shift_down,
    vertex_sums,
)

ALPHA_1 = EdgeLabelling.from_edges((2, 3, 5, 8))
# Smallest labelling of the x1 = 0, x6 second-smallest chain at r = 8
F1_EXAMPLE = EdgeLabelling.of(0, 3, 4, 2, 2, 1, 2, 4, 5, 4, 2, 3)

label_lists = st.lists(st.integers(min_value=0, max_value=50), min_size=12, max_size=12)


def test_every_edge_lies_on_two_vertices():
    for edge in EDGE_IDS:
        assert sum(edge in triple for triple in VERTEX_EDGES) == 2


@pytest.mark.parametrize("edge, ends", [(1, (1, 2)), (4, (3, 4)), (9, (1, 5)), (11, (4, 8)), (12, (3, 7))])
def test_edge_endpoints(edge, ends):
    assert EDGE_ENDPOINTS[edge] == ends


def test_incidence_graph_is_the_cube():
    graph = incidence_graph()
    assert graph.number_of_nodes() == 8
    assert graph.number_of_edges() == 12
    assert sorted(data['edge'] for _, _, data in graph.edges(data=True)) == list(EDGE_IDS)
    assert check_incidence()


@pytest.mark.parametrize("labels", [
    (1,) * 11,
    (1,) * 13,
    (-1,) + (0,) * 11,
    (MAX_LABEL + 1,) + (0,) * 11,
    (1.9,) * 12,
    (True,) * 12,
    ("1",) * 12,
])
def test_invalid_labellings_are_rejected(labels):
    with pytest.raises(InvalidLabellingError):
        EdgeLabelling(labels)


def test_labelling_arithmetic():
    assert EdgeLabelling.zero() + EdgeLabelling.ones() == EdgeLabelling.ones()
    assert 3 * EdgeLabelling.ones() == EdgeLabelling((3,) * 12)
    assert ALPHA_1.support() == {2, 3, 5, 8}
    assert EdgeLabelling.unit(7).label(7) == 1
    with pytest.raises(InvalidLabellingError):
        EdgeLabelling.unit(13)


@pytest.mark.parametrize("labelling, expected", [
    (EdgeLabelling.zero(), 0),
    (EdgeLabelling.ones(), 3),
    (ALPHA_1, 1),
    (F1_EXAMPLE, 8),
    (EdgeLabelling.unit(1), None),
])
def test_magic_sum_of(labelling, expected):
    assert magic_sum_of(labelling) == expected
    assert is_magic(labelling) == (expected is not None)


def test_vertex_sums_follow_the_equations():
    sums = vertex_sums(range(1, 13))
    assert sums[0] == 1 + 2 + 9
    assert sums[7] == 7 + 8 + 11


@pytest.mark.parametrize("r, count", [(0, 1), (1, 9), (2, 42), (3, 138)])
def test_oracle_counts(r, count):
    labellings = list(brute_force_enumerate(r))
    assert len(labellings) == count
    assert len(set(labellings)) == count
    assert all(magic_sum_of(l) == r for l in labellings)


def test_oracle_partitions_by_first_label():
    r = 4
    parts = [set(brute_force_enumerate(r, x1_values=[x1])) for x1 in range(r + 1)]
    assert sum(len(p) for p in parts) == len(brute_force_set(r))
    assert set().union(*parts) == brute_force_set(r)


def test_oracle_rejects_negative_sum():
    with pytest.raises(ValueError):
        list(brute_force_enumerate(-1))


@pytest.mark.parametrize("r", range(6))
def test_vertex_identities_and_label_total(r):
    for l in brute_force_enumerate(r):
        x = l.label
        assert x(1) + x(2) == x(5) + x(6)
        assert x(1) + x(8) == x(4) + x(5)
        assert sum(l) == 4 * r


def test_shift_down_drops_the_magic_sum():
    shifted = shift_down(F1_EXAMPLE + 2 * EdgeLabelling.ones(), 2)
    assert shifted == F1_EXAMPLE
    assert magic_sum_of(shift_down(EdgeLabelling.ones(), 1)) == 0
    with pytest.raises(ValueError):
        shift_down(F1_EXAMPLE, 1)


def test_is_distinct():
    assert is_distinct(EdgeLabelling(tuple(range(12))))
    assert not is_distinct(F1_EXAMPLE)


def test_perfect_matchings_are_nine():
    matchings = perfect_matchings()
    assert len(matchings) == 9
    assert ALPHA_1 in matchings
    assert all(magic_sum_of(m) == 1 for m in matchings)


def test_hamiltonian_split():
    assert is_hamiltonian_cycle((1, 4, 6, 7, 9, 10, 11, 12))
    assert not is_hamiltonian_cycle((2, 3, 5, 8))
    # two disjoint 4-cycles cover every vertex but are not one cycle
    assert not is_hamiltonian_cycle((1, 2, 3, 4, 5, 6, 7, 8))


def test_parse_and_format():
    text = "0,3,4,2,2,1,2,4,5,4,2,3"
    assert parse_labelling(text) == F1_EXAMPLE
    assert parse_labelling(json.dumps(labelling_to_json(F1_EXAMPLE))) == F1_EXAMPLE
    assert format_labelling(F1_EXAMPLE) == text
    assert str(F1_EXAMPLE) == text


@pytest.mark.parametrize("text", ["1,2,3", "a,b,c,d,e,f,g,h,i,j,k,l", "[1, 2.5]", "[1,2,3", "1,1,1,1,1,1,1,1,1,1,1,-1", "[true,true,true,true,true,true,true,true,true,true,true,true]", "[1,1,1,1,1,1,1,1,1,1,1,1.0]"])
def test_parse_rejects_malformed_text(text):
    with pytest.raises(InvalidLabellingError):
        parse_labelling(text)


@given(label_lists)
def test_magic_sum_matches_vertex_sums(labels):
    labelling = EdgeLabelling(tuple(labels))
    sums = set(vertex_sums(labels))
    assert (magic_sum_of(labelling) is not None) == (len(sums) == 1)


def test_numpy_integer_labels_are_accepted():
    labelling = EdgeLabelling(tuple(np.ones(12, dtype=np.int64)))
    assert labelling == EdgeLabelling.ones()
    assert all(type(x) is int for x in labelling.labels)
