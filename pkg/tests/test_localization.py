"""Covering characters, Euler factors and vertex integrals.

The psi-class vertex factor has two independent derivations: the closed
product form used by the engine, and a term-by-term expansion whose
coefficients are multinomials.  The expansion oracle lives here, written
against the classical integral values directly, and the engine must agree
with it on randomized inputs.
"""

import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from hilb3.geometry import pair_curve, punctual_curve, curve_catalog
from hilb3.graphs import pair_family, punctual_family, enumerate_graphs
from hilb3.localization import (
    edge_character,
    edge_euler,
    edge_euler_closed,
    forbidden_weights,
    graph_contribution,
    graph_sum,
    pochhammer,
    psi_vertex_integral,
)
from hilb3.scalars import (
    DegenerateSpecializationError,
    Specialization,
    sample_specializations,
)

POINT_13 = Specialization(Fraction(1), Fraction(3))


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def _psi_vertex_oracle(weights, total_points):
    """Vertex factor by expanding every psi-class monomial separately.

    A genus-zero moduli space with ``n`` special points integrates the
    monomial with exponents ``a_F`` to the multinomial coefficient
    ``(n-3)! / prod(a_F!)``; each flag also carries the geometric series
    ``1/w_F^(a_F + 1)``.
    """
    n = total_points
    total = Fraction(0)
    for exponents in _compositions(n - 3, len(weights)):
        coefficient = factorial(n - 3)
        for a in exponents:
            coefficient //= factorial(a)
        term = Fraction(coefficient)
        for w, a in zip(weights, exponents):
            term /= Fraction(w) ** (a + 1)
        total += term
    return total


def test_psi_vertex_frozen_case():
    # Two flags of weights 1 and 2 with one extra marked point.
    assert _psi_vertex_oracle([1, 2], 4) == Fraction(3, 4)
    assert psi_vertex_integral([Fraction(1), Fraction(2)], 4) == Fraction(3, 4)


def test_psi_vertex_three_points_is_bare_product():
    weights = [Fraction(3), Fraction(-2), Fraction(5, 7)]
    assert psi_vertex_integral(weights, 3) == Fraction(1, 3) * Fraction(-1, 2) * Fraction(7, 5)


def test_psi_vertex_matches_expansion_oracle():
    rng = random.Random(7)
    for _ in range(100):
        flags = rng.randint(1, 5)
        extra = rng.randint(0, 8 - flags) if flags < 8 else 0
        n = flags + extra
        if n < 3:
            extra += 3 - n
            n = 3
        weights = []
        while len(weights) < flags:
            value = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            if value != 0:
                weights.append(value)
        assert psi_vertex_integral(weights, n) == _psi_vertex_oracle(weights, n)


def test_psi_vertex_rejects_too_few_points():
    with pytest.raises(ValueError):
        psi_vertex_integral([Fraction(1)], 2)


def test_pochhammer_values():
    assert pochhammer(Fraction(3), 0) == 1
    assert pochhammer(Fraction(3), 2) == 12
    assert pochhammer(Fraction(1, 2), 3) == Fraction(1, 2) * Fraction(3, 2) * Fraction(5, 2)


def test_edge_character_ranks():
    # The covering character has constant virtual rank in the covering
    # degree: the extra group blocks cancel in pairs.  The common value is
    # one less than the dimension of the ambient space.
    for curve in curve_catalog():
        for degree in (1, 2, 3, 4):
            assert edge_character(curve, degree).rank() == 5


def test_edge_euler_matches_closed_form_everywhere():
    points = sample_specializations(5, seed=3, forbidden=forbidden_weights(4))
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            curve = pair_curve(i, j)
            for degree in (1, 2, 3, 4):
                for point in points:
                    assert edge_euler(curve, degree, point) == edge_euler_closed(
                        i, j, degree, point
                    )


def test_edge_euler_frozen_value():
    # Hand-expanded product over the four moving weights at (w, z) = (1, 3).
    assert edge_euler(pair_curve(0, 1), 1, POINT_13) == -6


def test_single_edge_graph_sum_is_reciprocal_euler():
    family = pair_family(0, 1)
    (graph,) = enumerate_graphs(family, 1)
    value = graph_contribution(graph, POINT_13)
    assert value == Fraction(1) / edge_euler(pair_curve(0, 1), 1, POINT_13)
    assert graph_sum(family, 1, POINT_13) == value


def test_graph_sum_adds_contributions():
    family = pair_family(0, 1)
    total = sum(graph_contribution(g, POINT_13) for g in enumerate_graphs(family, 2))
    assert graph_sum(family, 2, POINT_13) == total


def test_degenerate_specialization_is_detected():
    # (w, z) = (1, 1) sits on the wall w - z = 0 shared by many characters.
    wall = Specialization(Fraction(1), Fraction(1))
    with pytest.raises(DegenerateSpecializationError):
        graph_sum(pair_family(0, 1), 1, wall)


def test_forbidden_weights_census():
    weights = forbidden_weights(4)
    assert len(weights) == 231
    assert all(not w.is_zero() for w in weights)
    # Growing the degree bound only adds new walls.
    assert set(forbidden_weights(2)) <= set(weights)


def test_forbidden_weights_make_sampling_safe():
    for point in sample_specializations(4, seed=11, forbidden=forbidden_weights(3)):
        for family in (pair_family(0, 1), punctual_family(0, 1, 2)):
            graph_sum(family, 3, point)


@given(st.integers(0, 2), st.integers(0, 2), st.integers(1, 4), st.integers(0, 50))
@settings(max_examples=25, deadline=None)
def test_closed_euler_agrees_on_random_specializations(i, j, degree, seed):
    if i == j:
        return
    point = sample_specializations(1, seed=seed, forbidden=forbidden_weights(4))[0]
    assert edge_euler(pair_curve(i, j), degree, point) == edge_euler_closed(
        i, j, degree, point
    )
