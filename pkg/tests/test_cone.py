import numpy as np
import pytest
from hypothesis import given
import hypothesis.strategies as st

from src.cone import (
    BASIS,
    CONE_TYPES,
    K_FORMULAS,
    Q_MATRIX,
    REGIONS,
    RELATIONS,
    TAGS,
    QCoords,
    TypeDecomposition,
    basis_rank,
    classify,
    compose,
    q_coordinates,
    reconstruct,
    satisfies_C1_C2_C3,
    satisfies_conditions_array,
    type_of_region,
    verify_relations,
)
from src.cube_model import EdgeLabelling, InvalidLabellingError, brute_force_enumerate, magic_sum_of

q_values = st.integers(min_value=-5, max_value=5)
q_vectors = st.builds(QCoords, q_values, q_values, q_values, q_values, q_values, q_values)
k_vectors = st.lists(st.integers(min_value=0, max_value=20), min_size=6, max_size=6)

# Multiplicity tables in their customary form, with two slots swapped for five types
LISTED_K_TABLES = {
    "t2": lambda q: (q.q1 + q.q4, q.q2 + q.q4, q.q3 + q.q4, q.q5 - 2 * q.q4, q.q6 + q.q4, -(q.q4 + 1)),
    "t31": lambda q: (q.q2 - q.q1, q.q1 + q.q3 + q.q5, q.q1 + q.q4, q.q1, q.q1 + q.q5 + q.q6, -(2 * q.q1 + q.q5 + 1)),
    "t32": lambda q: (q.q1 - q.q2 - 1, q.q2 + q.q3 + q.q5, q.q2 + q.q4, q.q2, q.q2 + q.q5 + q.q6, -(2 * q.q2 + q.q5 + 1)),
    "t33": lambda q: (q.q1 + q.q3 + q.q5, q.q2 + q.q3 + q.q5, q.q3 + q.q4, q.q3, q.q6 - q.q3 - 1, -(2 * q.q3 + q.q5 + 1)),
    "t34": lambda q: (q.q1 + q.q5 + q.q6, q.q2 + q.q5 + q.q6, q.q3 - q.q6, q.q4 + q.q6, q.q6, -(2 * q.q6 + q.q5 + 1)),
    "t351": lambda q: (
        q.q1 + q.q5 // 2, q.q2 + q.q5 // 2, q.q3 + q.q5 // 2,
        q.q4 - q.q5 // 2 - 1, -(q.q5 // 2 + 1), q.q6 + q.q5 // 2,
    ),
    "t352": lambda q: (
        q.q1 + (q.q5 - 1) // 2, q.q2 + (q.q5 - 1) // 2, q.q3 + (q.q5 - 1) // 2,
        q.q4 - (q.q5 - 1) // 2 - 1, -((q.q5 - 1) // 2 + 1), q.q6 + (q.q5 - 1) // 2,
    ),
}

# Printed slots that hold the coefficient of the neighbouring basis vector
SWAPPED_SLOTS = {"t31": (3, 4), "t32": (3, 4), "t33": (3, 4), "t351": (4, 5), "t352": (4, 5)}

EXPECTED_OFFSETS = {"t1": 0, "t2": 1, "t31": 1, "t32": 2, "t33": 2, "t34": 1, "t351": 2, "t352": 3}


def test_relations_hold():
    assert verify_relations()


def test_relations_catch_a_wrong_vector():
    broken = BASIS.replace(9, EdgeLabelling.from_edges((1, 2, 3, 4)))
    assert not verify_relations(broken)


def test_relations_are_symmetric_in_alpha_1_and_alpha_2():
    swapped = BASIS.replace(1, BASIS.vector(2)).replace(2, BASIS.vector(1))
    assert swapped != BASIS
    assert verify_relations(swapped, [RELATIONS[-1]])
    assert verify_relations(swapped)


def test_relations_fail_without_alpha_9():
    assert not verify_relations(BASIS.replace(9, EdgeLabelling.zero()))


def test_alpha_vectors_are_magic_with_sum_one():
    assert all(magic_sum_of(BASIS.vector(i)) == 1 for i in range(1, 10))
    assert magic_sum_of(BASIS.vector("T")) == 3


@pytest.mark.parametrize("tag", TAGS)
def test_type_offsets_and_rank(tag):
    assert CONE_TYPES[tag].offset == EXPECTED_OFFSETS[tag]
    assert basis_rank(tag) == 6


@given(q_vectors)
def test_reconstruct_matches_alpha_combination(q):
    assert np.array_equal(np.array(reconstruct(q)), np.array(q) @ Q_MATRIX)


@given(q_vectors)
def test_membership_conditions(q):
    assert satisfies_C1_C2_C3(q) == all(x >= 0 for x in reconstruct(q))


def test_membership_conditions_on_a_box():
    span = np.arange(-3, 4)
    qs = np.stack(np.meshgrid(*[span] * 6, indexing="ij"), axis=-1).reshape(-1, 6)
    expected = np.all(qs @ Q_MATRIX >= 0, axis=1)
    assert np.array_equal(satisfies_conditions_array(qs), expected)


@pytest.mark.parametrize("r", range(5))
def test_q_coordinates_reconstruct_magic_labellings(r):
    for l in brute_force_enumerate(r):
        assert reconstruct(q_coordinates(l)) == l.labels


def test_q_coordinates_of_non_magic_is_none():
    assert q_coordinates(EdgeLabelling.unit(3)) is None


@pytest.mark.parametrize("labelling, tag", [
    (EdgeLabelling.zero(), "t1"),
    (EdgeLabelling.ones(), "t352"),
    (BASIS.vector(7), "t2"),
    (BASIS.vector(9), "t31"),
    (BASIS.vector(8), "t34"),
    (BASIS.vector(1) + BASIS.vector(9), "t32"),
    (BASIS.vector(6) + BASIS.vector(8), "t33"),
    (BASIS.vector(4) + BASIS.vector(7), "t351"),
])
def test_base_vectors_classify_to_their_type(labelling, tag):
    assert classify(labelling) == TypeDecomposition(tag, (0,) * 6)


def test_classify_rejects_non_magic():
    with pytest.raises(InvalidLabellingError):
        classify(EdgeLabelling.unit(1))


@pytest.mark.parametrize("r", range(7))
def test_compose_inverts_classify(r):
    for l in brute_force_enumerate(r):
        assert compose(classify(l)) == l


@given(st.sampled_from(TAGS), k_vectors)
def test_classify_inverts_compose(tag, ks):
    decomposition = TypeDecomposition(tag, tuple(ks))
    labelling = compose(decomposition)
    assert magic_sum_of(labelling) == CONE_TYPES[tag].offset + sum(ks)
    assert classify(labelling) == decomposition


@pytest.mark.parametrize("r", range(7))
def test_each_labelling_lies_in_exactly_one_region(r):
    for l in brute_force_enumerate(r):
        q = q_coordinates(l)
        assert sum(inside(q) for inside in REGIONS.values()) == 1
        assert type_of_region(q) in REGIONS


def test_region_dispatch_rejects_ambiguous_points():
    # off the cone: x1 = q2 + q3 + q5 < 0, and both P31 and P34 claim it
    q = QCoords(0, 0, 0, -1, -3, 0)
    assert min(reconstruct(q)) < 0
    assert REGIONS["P31"](q) and REGIONS["P34"](q)
    with pytest.raises(AssertionError):
        type_of_region(q)


@pytest.mark.parametrize("r", range(1, 8))
def test_listed_tables_agree_up_to_slot_swap(r):
    for l in brute_force_enumerate(r):
        decomposition = classify(l)
        if decomposition.tag not in LISTED_K_TABLES:
            continue
        listed = list(LISTED_K_TABLES[decomposition.tag](q_coordinates(l)))
        if decomposition.tag in SWAPPED_SLOTS:
            a, b = SWAPPED_SLOTS[decomposition.tag]
            listed[a], listed[b] = listed[b], listed[a]
        assert tuple(listed) == decomposition.ks


def test_aligned_formulas_are_used_for_every_region():
    assert set(K_FORMULAS) == set(REGIONS)


@pytest.mark.parametrize("tag, ks", [
    ("t9", (0,) * 6),
    ("t1", (0,) * 5),
    ("t1", (0, 0, 0, 0, 0, -1)),
    ("t1", (0.5, 0, 0, 0, 0, 0)),
    ("t1", (True, 0, 0, 0, 0, 0)),
])
def test_invalid_decompositions(tag, ks):
    with pytest.raises(ValueError):
        TypeDecomposition(tag, ks)


def test_decomposition_json():
    decomposition = TypeDecomposition("t33", (1, 0, 2, 0, 3, 4))
    data = decomposition.to_json()
    assert data == {"type": "t33", "ks": [1, 0, 2, 0, 3, 4]}
    assert TypeDecomposition.from_json(data) == decomposition
