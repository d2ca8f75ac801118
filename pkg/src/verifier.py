"""
Verifier - Exhaustive and cross-method checks of every claim about the cube.

Suites:
    cone       incidence, basis relations, oracle vs type enumeration, round trips
    symmetry   group U, stabilizers, orbits, second-smallest lemma
    series     closed forms, checksums, polynomiality, constrained counts
    distinct   distinct counts, canonical forms, orbit series assembly, shuffles
    all        every suite above
"""

import sys
from typing import Callable, Optional

import numpy as np
from tqdm import tqdm

from config import (
    CANONICAL_CHECK_SUMS,
    CONSTRAINED_SUMS,
    DEFAULT_MAX_KSUM,
    DEFAULT_MAX_SUM,
    DISTINCT_SUMS,
    FINITE_DIFFERENCE_TERMS,
    FIRST_DISTINCT_SUM,
    GROUP_ORDER,
    GSTAR_PERIOD,
    LEMMA_Q_RANGE,
    ORACLE_DISTINCT_SUMS,
    POLYNOMIAL_CHECK_TERMS,
    REFERENCE_GSTAR_TERMS,
)
from src.cone import (
    BASIS,
    CONE_TYPES,
    Q_MATRIX,
    TAGS,
    TypeDecomposition,
    basis_rank,
    classify,
    compose,
    satisfies_conditions_array,
    verify_relations,
)
from src.cube_model import (
    brute_force_enumerate,
    check_incidence,
    is_distinct,
    is_hamiltonian_cycle,
    magic_sum_of,
    perfect_matchings,
    shift_down,
)
from src.enumeration import (
    F1_CONSTRAINT,
    F2_CONSTRAINT,
    assemble_orbit_series,
    compositions,
    constrained_distinct_counts,
    count_by_type,
    count_canonical,
    count_constrained,
    count_distinct,
    enumerate_by_type,
    shuffle_partition_holds,
    shuffles,
)
from src.series import (
    closed_form_F1_spec,
    closed_form_F2_spec,
    closed_form_G,
    closed_form_Gstar,
    expand,
    finite_difference,
    load_gstar_numerator,
    one_minus_y_power,
    quasi_period,
    truncated_product,
    type_gf,
)
from src.symmetry import (
    U1_GENERATORS,
    EdgePermutation,
    apply,
    build_group,
    canonical_form,
    check_second_smallest_lemma,
    generate,
    orbit,
    orbits,
    stabilizer,
)


SUITES = ("all", "cone", "symmetry", "series", "distinct")


class ValidationResult:
    def __init__(self, suite: str):
        self.suite = suite
        self.checks: dict[str, bool] = {}
        self.findings: list[str] = []

    def record(self, name: str, passed: bool, finding: Optional[str] = None):
        self.checks[name] = bool(passed)
        if finding and not passed:
            self.findings.append(f"{name}: {finding}")

    @property
    def has_issues(self) -> bool:
        return not all(self.checks.values())

    def to_json(self) -> dict:
        return {
            'suite': self.suite,
            'passed': not self.has_issues,
            'checks': dict(self.checks),
            'findings': list(self.findings),
        }

    def print_report(self, stream=None):
        stream = stream or sys.stderr
        print("\n" + "=" * 60, file=stream)
        print(f"VERIFICATION REPORT ({self.suite})", file=stream)
        print("=" * 60, file=stream)

        passed = [name for name, ok in self.checks.items() if ok]
        failed = [name for name, ok in self.checks.items() if not ok]
        print(f"\n  {len(passed)} of {len(self.checks)} checks passed", file=stream)

        if not failed:
            print("\n✓ All checks passed!", file=stream)
        else:
            print(f"\n❌ Failed checks ({len(failed)}):", file=stream)
            for name in failed:
                print(f"   - {name}", file=stream)

        if self.findings:
            print(f"\n⚠ Findings ({len(self.findings)}):", file=stream)
            for finding in self.findings:
                print(f"   - {finding}", file=stream)

        print("\n" + "=" * 60, file=stream)


def _progress(iterable, desc: str, show: bool, total: Optional[int] = None):
    return tqdm(iterable, desc=desc, total=total, disable=not show, file=sys.stderr, leave=False)


def check_cone(result: ValidationResult, max_sum: int, show_progress: bool = False):
    result.record("incidence is the cube graph", check_incidence())

    matchings = set(perfect_matchings())
    result.record("perfect matchings are exactly alpha_1..alpha_9",
                  len(matchings) == 9 and matchings == set(BASIS.alphas))
    result.record("displayed basis relations", verify_relations())
    result.record("each type has six independent basis vectors",
                  all(basis_rank(tag) == 6 for tag in TAGS))
    result.record("type bases compose into magic labellings", all(
        magic_sum_of(cone.base + b) == cone.offset + 1 for cone in CONE_TYPES.values() for b in cone.basis
    ))

    oracle_ok = partition_ok = round_trip_ok = identities_ok = True
    for r in _progress(range(max_sum + 1), "oracle vs types", show_progress):
        oracle = set(brute_force_enumerate(r))
        stream = list(enumerate_by_type(r))
        if len(oracle) != count_by_type(r):
            oracle_ok = False
            result.findings.append(f"r={r}: oracle {len(oracle)} vs type count {count_by_type(r)}")
        if len(stream) != len(set(stream)) or set(stream) != oracle:
            partition_ok = False
        for labelling in oracle:
            if compose(classify(labelling)) != labelling:
                round_trip_ok = False
            x = labelling.label
            if sum(labelling) != 4 * r or x(1) + x(2) != x(5) + x(6) or x(1) + x(8) != x(4) + x(5):
                identities_ok = False
            t = min(labelling)
            if t and magic_sum_of(shift_down(labelling, t)) != r - 3 * t:
                identities_ok = False
    result.record(f"oracle count equals type count, r <= {max_sum}", oracle_ok)
    result.record(f"types partition the oracle, r <= {max_sum}", partition_ok)
    result.record(f"compose(classify(l)) == l, r <= {max_sum}", round_trip_ok)
    result.record(f"label sum, shift and vertex identities, r <= {max_sum}", identities_ok)

    inverse_ok = True
    for tag in TAGS:
        for k_sum in range(DEFAULT_MAX_KSUM + 1):
            for ks in compositions(k_sum):
                decomposition = TypeDecomposition(tag, tuple(int(k) for k in ks))
                if classify(compose(decomposition)) != decomposition:
                    inverse_ok = False
    result.record(f"classify(compose(t, k)) == (t, k), sum(k) <= {DEFAULT_MAX_KSUM}", inverse_ok)

    # |coordinate| <= 3 * LEMMA_Q_RANGE, so int8 is exact
    span = np.arange(-LEMMA_Q_RANGE, LEMMA_Q_RANGE + 1, dtype=np.int8)
    qs = np.stack(np.meshgrid(*[span] * 6, indexing="ij"), axis=-1).reshape(-1, 6)
    coordinates = qs @ Q_MATRIX.astype(np.int8)
    result.record(f"membership conditions over [-{LEMMA_Q_RANGE}, {LEMMA_Q_RANGE}]^6", np.array_equal(
        satisfies_conditions_array(qs), np.all(coordinates >= 0, axis=1)
    ))


def check_symmetry(result: ValidationResult, max_sum: int, show_progress: bool = False):
    group = build_group()
    result.record("|U| = 48", len(group) == GROUP_ORDER)
    result.record("U is a closed group acting faithfully", group.is_closed() and group.is_faithful())
    result.record("U preserves the incidence", all(u.preserves_incidence() for u in group))
    result.record("U is edge-transitive", orbits(group) == {frozenset(range(1, 13))})

    u1 = stabilizer(group, 1)
    result.record("|U1| = 4 with both listed generators",
                  len(u1) == 4 and all(g in u1 for g in U1_GENERATORS))
    result.record("U1 is generated by the listed generators", generate(U1_GENERATORS) == u1)
    expected = {frozenset(s) for s in ({1}, {8}, {4, 5}, {2, 3, 9, 10}, {6, 7, 11, 12})}
    result.record("U1 orbits", orbits(u1) == expected)
    result.record("U1 fixing edge 6 is trivial", len(stabilizer(u1, 6)) == 1)
    result.record("U1 fixing edge 4 is the listed flip",
                  set(stabilizer(u1, 4)) == {EdgePermutation.identity(), U1_GENERATORS[0]})
    result.record("A = {1,4,6,7,9,10,11,12} is a Hamiltonian cycle",
                  is_hamiltonian_cycle((1, 4, 6, 7, 9, 10, 11, 12)))
    result.record("B = {2,3,5,8} is the support of alpha_1", BASIS.vector(1).support() == {2, 3, 5, 8})

    lemma_ok = preserved_ok = True
    for r in _progress(range(max_sum + 1), "second smallest lemma", show_progress):
        for labelling in brute_force_enumerate(r):
            if all(labelling.label(1) < labelling.label(e) for e in range(2, 13)):
                if not check_second_smallest_lemma(labelling):
                    lemma_ok = False
                    result.findings.append(f"second smallest lemma fails for {labelling}")
            if r <= 3:
                preserved_ok &= all(magic_sum_of(apply(u, labelling)) == r for u in group)
    result.record(f"second smallest never at edges 2,3,8,9,10, r <= {max_sum}", lemma_ok)
    result.record("U maps magic labellings to magic labellings", preserved_ok)


def check_series(result: ValidationResult, show_progress: bool = False):
    g = expand(closed_form_G(), POLYNOMIAL_CHECK_TERMS)
    result.record(f"G(y) coefficients equal type counts, r <= {POLYNOMIAL_CHECK_TERMS}",
                  g == [count_by_type(r) for r in range(POLYNOMIAL_CHECK_TERMS + 1)])
    counts = [count_by_type(r) for r in range(FINITE_DIFFERENCE_TERMS + 1)]
    result.record("count is a degree-5 polynomial (sixth difference vanishes)",
                  all(v == 0 for v in finite_difference(counts, 6))
                  and any(v != 0 for v in finite_difference(counts, 5)))
    per_type = [expand(type_gf(cone.offset), POLYNOMIAL_CHECK_TERMS) for cone in CONE_TYPES.values()]
    result.record("per-type series sum to G(y)", [sum(column) for column in zip(*per_type)] == g)
    result.record("G(y) has period 1", quasi_period(closed_form_G()) == 1)

    try:
        numerator = load_gstar_numerator()
        result.record("numerator N has 87 coefficients and matching checksum", len(numerator.coeffs) == 87)
    except ValueError as e:
        result.record("numerator N has 87 coefficients and matching checksum", False, str(e))
        return

    gstar = closed_form_Gstar(numerator)
    coefficients = expand(gstar, max(REFERENCE_GSTAR_TERMS))
    reference_ok = coefficients[:FIRST_DISTINCT_SUM] == [0] * FIRST_DISTINCT_SUM and all(
        coefficients[r] == value for r, value in REFERENCE_GSTAR_TERMS.items()
    )
    result.record("G*(y) reproduces the reference terms", reference_ok,
                  f"expanded {coefficients[FIRST_DISTINCT_SUM:]}")
    result.record("G*(y) numerator has degree 111", gstar.numerator.degree == 111)
    result.record("G*(y) quasi-period is 720720", quasi_period(gstar) == GSTAR_PERIOD)

    result.record("F1 and F2 specializations coincide", expand(closed_form_F1_spec(), 40) == expand(closed_form_F2_spec(), 40))
    spec = expand(closed_form_F1_spec(), max(CONSTRAINED_SUMS))
    for name, constraint in (("F1", F1_CONSTRAINT), ("F2", F2_CONSTRAINT)):
        observed = [count_constrained(r, constraint) for r in _progress(CONSTRAINED_SUMS, name, show_progress)]
        expected = [spec[r] for r in CONSTRAINED_SUMS]
        result.record(f"{name} constraint counts match y^8/((1-y)^4(1-y^4))", observed == expected,
                      f"counted {observed}, series {expected}")
        result.record(f"{name} constraint set is acyclic", constraint.is_acyclic())


def check_distinct(result: ValidationResult, show_progress: bool = False):
    result.record("no distinct labelling below r = 17",
                  count_distinct(FIRST_DISTINCT_SUM - 1, "raw") == 0)

    raw_counts = {}
    for r in _progress(DISTINCT_SUMS, "distinct counts", show_progress):
        raw_counts[r] = count_distinct(r, "raw")
    divisible = all(raw % GROUP_ORDER == 0 for raw in raw_counts.values())
    result.record("raw distinct counts are multiples of 48", divisible, f"raw counts {raw_counts}")
    orbit_counts = {r: raw // GROUP_ORDER for r, raw in raw_counts.items()}
    result.record("orbit counts equal the reference series", orbit_counts == REFERENCE_GSTAR_TERMS,
                  f"raw {raw_counts}, raw/48 {orbit_counts}")
    result.record("canonical representatives equal orbit counts",
                  all(count_canonical(r) == orbit_counts[r] for r in DISTINCT_SUMS))

    top = max(DISTINCT_SUMS)
    assembled = assemble_orbit_series(top)
    closed = expand(closed_form_Gstar(), top)
    result.record(f"assembled orbit series equals G*(y), r <= {top}", assembled == closed,
                  f"assembled {assembled[FIRST_DISTINCT_SUM:]}, closed form {closed[FIRST_DISTINCT_SUM:]}")
    result.record("assembled orbit series equals the distinct orbit counts",
                  all(assembled[r] == orbit_counts[r] for r in DISTINCT_SUMS))
    c = constrained_distinct_counts(top)
    result.record("(1 - y^3) G*(y) equals the constrained distinct counts",
                  truncated_product(closed, one_minus_y_power(3), top) == c)

    oracle_ok = canonical_ok = True
    for r in ORACLE_DISTINCT_SUMS:
        distinct = [l for l in brute_force_enumerate(r) if is_distinct(l)]
        expected = raw_counts[r] if r in raw_counts else count_distinct(r, "raw")
        if len(distinct) != expected:
            oracle_ok = False
            result.findings.append(f"oracle finds {len(distinct)} distinct labellings at r={r}")
        if r not in CANONICAL_CHECK_SUMS:
            continue
        for labelling in _progress(distinct, f"canonical forms r={r}", show_progress):
            image, u, _ = canonical_form(labelling)
            if apply(u, labelling) != image or len(orbit(labelling)) != GROUP_ORDER:
                canonical_ok = False
    result.record(f"oracle distinct counts equal type-based counts, r = {min(ORACLE_DISTINCT_SUMS)}..{max(ORACLE_DISTINCT_SUMS)}",
                  oracle_ok)
    checked = ", ".join(str(r) for r in CANONICAL_CHECK_SUMS)
    result.record(f"unique canonical image and free orbits, r = {checked}", canonical_ok)

    example = shuffles("253", "41")
    expected = {"25341", "25431", "25413", "24531", "24513", "24153", "42531", "42513", "42153", "41253"}
    result.record("shuffles of 253 and 41", {"".join(t) for t in example} == expected)
    result.record("shuffle sets partition S_4", shuffle_partition_holds((1, 2), (3, 4)))


def run_suite(suite: str = "all", max_sum: int = DEFAULT_MAX_SUM, show_progress: bool = False) -> ValidationResult:
    """Run one suite (or all of them) and collect the results."""
    if suite not in SUITES:
        raise ValueError(f"Unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    if max_sum < 0:
        raise ValueError(f"max_sum must be nonnegative, got {max_sum}")

    steps: list[tuple[str, Callable[[ValidationResult], None]]] = [
        ("cone", lambda res: check_cone(res, max_sum, show_progress)),
        ("symmetry", lambda res: check_symmetry(res, max_sum, show_progress)),
        ("series", lambda res: check_series(res, show_progress)),
        ("distinct", lambda res: check_distinct(res, show_progress)),
    ]
    selected = [(name, step) for name, step in steps if suite in ("all", name)]

    result = ValidationResult(suite)
    for i, (name, step) in enumerate(selected, 1):
        if show_progress:
            print(f"\n[{i}/{len(selected)}] Checking {name}...", file=sys.stderr)
        try:
            step(result)
        except AssertionError as e:
            result.record(f"{name} suite ran without a counterexample", False, str(e))
    return result
