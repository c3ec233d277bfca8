"""Two-point invariants: frozen values, sign pins and closed-form identities."""

from fractions import Fraction

import pytest

from hilb3.invariants import (
    ConsistencyError,
    degree_invariant,
    family_term_closed,
    pair_family_term,
    pair_sum_closed,
    punctual_family_term,
    scaled_invariant,
    two_point_pairing,
    two_point_total,
    verify_identities,
)
from hilb3.localization import forbidden_weights
from hilb3.scalars import Specialization, sample_specializations

POINT_13 = Specialization(Fraction(1), Fraction(3))

EXPECTED_INVARIANTS = {
    1: Fraction(-27),
    2: Fraction(27, 2),
    3: Fraction(18),
    4: Fraction(27, 4),
}


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_frozen_invariants(d):
    result = two_point_pairing(d)
    assert result.value == 3 * EXPECTED_INVARIANTS[d]
    assert degree_invariant(d).value == EXPECTED_INVARIANTS[d]


def test_scaled_invariants():
    assert [scaled_invariant(d) for d in (1, 2, 3, 4)] == [
        Fraction(-27),
        Fraction(27),
        Fraction(54),
        Fraction(27),
    ]


def test_pair_and_punctual_parts_frozen():
    # The two halves of the degree-1 total at (w, z) = (1, 3); their sum is
    # the pairing and their difference discriminates the relative sign.
    pair_part = sum(
        pair_family_term(1, i, j, POINT_13)
        for i in range(3)
        for j in range(3)
        if i != j
    )
    punctual_part = sum(punctual_family_term(1, i, POINT_13) for i in range(3))
    assert pair_part == Fraction(-61, 2)
    assert punctual_part == Fraction(-101, 2)
    assert pair_part + punctual_part == -81


def test_relative_sign_of_the_two_parts():
    # Flipping the sign of the residual-pair half gives -20, not the correct
    # -81, so the two families demonstrably enter with the same sign.
    pair_part = sum(
        pair_family_term(1, i, j, POINT_13)
        for i in range(3)
        for j in range(3)
        if i != j
    )
    total = two_point_total(1, POINT_13)
    flipped = total - 2 * pair_part
    assert total == -81
    assert flipped == -20
    assert flipped != total


def test_punctual_terms_frozen():
    assert punctual_family_term(1, 1, POINT_13) == Fraction(-57, 4)
    assert punctual_family_term(1, 2, POINT_13) == Fraction(-145, 4)


def test_totals_agree_across_sampled_specializations():
    for d in (1, 2):
        points = sample_specializations(3, seed=5, forbidden=forbidden_weights(d))
        totals = {two_point_total(d, p) for p in points}
        assert len(totals) == 1


def test_constancy_across_seeds():
    for d in (1, 2, 3, 4):
        values = {two_point_pairing(d, num_points=3, seed=seed).value for seed in (0, 1)}
        assert values == {3 * EXPECTED_INVARIANTS[d]}


def test_two_point_pairing_validates_arguments():
    with pytest.raises(ValueError):
        two_point_pairing(0)
    with pytest.raises(ValueError):
        two_point_pairing(1, num_points=0)


def test_pair_sum_closed_form_samples():
    points = sample_specializations(3, seed=9, forbidden=forbidden_weights(3))
    from hilb3.graphs import pair_family
    from hilb3.localization import graph_sum

    for d in (1, 2, 3):
        for i, j in ((0, 1), (1, 2), (2, 0)):
            for point in points:
                assert graph_sum(pair_family(i, j), d, point) == pair_sum_closed(
                    d, i, j, point
                )


def test_identity_suite_all_pass():
    checks = verify_identities(d_max=4, num_specs=5, seed=0)
    assert len(checks) == 27
    failing = [c.name for c in checks if not c.passed]
    assert failing == []


def test_identity_suite_seed_independent():
    checks = verify_identities(d_max=2, num_specs=3, seed=42)
    assert all(c.passed for c in checks)


def test_family_term_closed_is_what_the_engine_sums():
    point = sample_specializations(1, seed=4, forbidden=forbidden_weights(2))[0]
    for i in range(3):
        assert punctual_family_term(2, i, point) == family_term_closed(2, i, point)
