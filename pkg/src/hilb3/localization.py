"""Fixed-curve covering characters, Euler factors and stable-graph sums.

Every quantity here is an exact rational function of the two torus weights,
evaluated at rational specializations.  The contribution of a stable graph
splits into edge factors (Euler classes of covering characters), vertex
factors (Euler classes of fixed-point tangent spaces) and flag factors
(cotangent weights feeding descendant integrals over genus-zero moduli).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .geometry import (
    Curve,
    chart_weight,
    curve_catalog,
    curves_through,
    fixed_points,
    tangent_character,
    tangent_euler,
)
from .graphs import Family, StableGraph, automorphism_order, enumerate_graphs
from .scalars import (
    DegenerateSpecializationError,
    Rational,
    Specialization,
    VirtualCharacter,
    Weight,
    evaluate_weight,
)

# Covering characters of the invariant curves.  Each entry lists the degree-1
# character (the part invariant under the covering group) and the repeating
# block that appears once per nontrivial character of Z/d, shifted by a
# fractional multiple of the base weight.  All exponent pairs (a, b) denote
# a*w_i + b*z_i in the curve's principal chart i.
#
# Trivial summands are kept out of the invariant lists; the shifted blocks
# may contain (0, 0) because the shift makes them nonzero.

_PUNCTUAL_DISPLAY = {
    (0, 1): {
        "fixed_pos": ((-1, 2), (1, -2), (-1, 1), (0, -1), (-1, 0), (0, -1)),
        "fixed_neg": ((-1, -1),),
        "group_pos": ((-1, 2), (0, 0), (-1, 1)),
        "group_neg": ((-2, 1), (-1, -1), (-1, 0)),
        "base": (1, -2),
    },
    (0, 2): {
        "fixed_pos": ((2, -1), (-2, 1), (1, -1), (-1, 0), (0, -1), (-1, 0)),
        "fixed_neg": ((-1, -1),),
        "group_pos": ((2, -1), (0, 0), (1, -1)),
        "group_neg": ((1, -2), (-1, -1), (0, -1)),
        "base": (-2, 1),
    },
    (1, 2): {
        "fixed_pos": ((-1, 0), (0, -1), (-1, 1), (1, -1), (-1, 2), (0, 1), (1, 0), (2, -1)),
        "fixed_neg": ((-1, -1), (-2, -1), (-1, -2)),
        "group_pos": ((0, 0), (-1, 2), (0, 1), (1, 0), (-1, 1)),
        "group_neg": ((-2, 0), (-1, -1), (-3, 0), (-2, -1), (-1, -2)),
        "base": (1, -1),
    },
}

_PAIR_DISPLAY = {
    "fixed_pos": ((-1, 1), (1, -1), (-1, 0), (0, -1)),
    "fixed_neg": ((-1, -1),),
    "group_pos": ((0, 0), (-1, 1)),
    "group_neg": ((-2, 0), (-1, -1)),
    "base": (1, -1),
}


def _display_terms(curve: Curve) -> tuple[tuple[tuple[Weight, int], ...], tuple[tuple[Weight, int], ...], Weight]:
    """Fixed terms, repeating-block terms and base weight for a curve."""
    i = curve.chart
    if curve.kind == "pair":
        data = _PAIR_DISPLAY
        j = curve.endpoints[0].other
        extra = tuple((chart_weight(j, *ab), 1) for ab in ((-1, 0), (0, -1)))
    else:
        key = (curve.endpoints[0].stratum, curve.endpoints[1].stratum)
        data = _PUNCTUAL_DISPLAY[key]
        extra = ()
    fixed = tuple((chart_weight(i, *ab), 1) for ab in data["fixed_pos"]) + extra
    fixed += tuple((chart_weight(i, *ab), -1) for ab in data["fixed_neg"])
    group = tuple((chart_weight(i, *ab), 1) for ab in data["group_pos"])
    group += tuple((chart_weight(i, *ab), -1) for ab in data["group_neg"])
    return fixed, group, chart_weight(i, *data["base"])


@lru_cache(maxsize=None)
def edge_character(curve: Curve, degree: int) -> VirtualCharacter:
    """Virtual character of the normal directions along a degree-``degree`` cover.

    The degree-``degree`` multiple cover of an invariant curve carries a
    residual Z/``degree`` action; its character decomposes into the invariant
    part plus one copy of the repeating block per nontrivial group character,
    each shifted by the corresponding fraction of the base weight.
    """
    if degree < 1:
        raise ValueError("cover degree must be positive")
    fixed, group, base = _display_terms(curve)
    terms = list(fixed)
    for m in range(1, degree):
        shift = base.scaled(Fraction(m, degree))
        terms.extend((weight + shift, sign) for weight, sign in group)
    return VirtualCharacter(terms)


@lru_cache(maxsize=None)
def edge_euler(curve: Curve, degree: int, point: Specialization) -> Rational:
    """Euler factor of an edge: product of the moving covering weights."""
    return edge_character(curve, degree).moving_part().euler(point)


def pochhammer(start: Rational, length: int) -> Rational:
    """Rising product ``start * (start + 1) * ... * (start + length - 1)``."""
    out = Fraction(1)
    for step in range(length):
        out *= start + step
    return out


def edge_euler_closed(i: int, j: int, degree: int, point: Specialization) -> Rational:
    """Closed form for the edge Euler factor of the curve joining charts i, j.

    Valid for the curves of residual pairs; provides an independent route to
    the same factor that :func:`edge_euler` computes term by term.
    """
    wi = evaluate_weight(chart_weight(i, 1, 0), point)
    zi = evaluate_weight(chart_weight(i, 0, 1), point)
    wj = evaluate_weight(chart_weight(j, 1, 0), point)
    zj = evaluate_weight(chart_weight(j, 0, 1), point)
    d = degree
    sign = -1 if d % 2 == 0 else 1
    numerator = sign * math.factorial(d - 1) ** 2 * wi * wj * zi * zj * (wi - zi) ** 2
    denominator = (wi + zi)
    denominator *= pochhammer(1 + Fraction(2 * d) * wi / (zi - wi), d - 1)
    denominator *= pochhammer(1 - d * (wi + zi) / Fraction(wi - zi), d - 1)
    if denominator == 0:
        raise DegenerateSpecializationError(
            f"closed-form edge factor degenerates at w={point.w}, z={point.z}"
        )
    return numerator / denominator


def psi_vertex_integral(weights: Sequence[Rational], total_points: int) -> Rational:
    """Integrate ``prod_F 1/(omega_F - psi_F)`` over ``total_points``-pointed
    genus-zero stable curves.

    ``weights`` lists the flag weights omega_F; marked points contribute to
    ``total_points`` but carry no weight factor.
    """
    if total_points < 3:
        raise ValueError("need at least three special points")
    if not 1 <= len(weights) <= total_points:
        raise ValueError("flag count must be between 1 and the point count")
    if any(value == 0 for value in weights):
        raise DegenerateSpecializationError("vanishing flag weight")
    inverses = [Fraction(1) / value for value in weights]
    return math.prod(inverses) * sum(inverses) ** (total_points - 3)


def graph_contribution(graph: StableGraph, point: Specialization) -> Rational:
    """Exact localization contribution of one stable graph."""
    value = Fraction(1, automorphism_order(graph))
    for edge in graph.edges:
        value /= edge_euler(edge.curve, edge.degree, point)
    for vertex, label in enumerate(graph.vertices):
        omegas = []
        for edge in graph.incident_edges(vertex):
            tangent = evaluate_weight(edge.curve.tangent_at(label), point)
            if tangent == 0:
                raise DegenerateSpecializationError(
                    f"flag weight vanishes at w={point.w}, z={point.z}"
                )
            omegas.append(tangent / edge.degree)
        valence = len(omegas)
        special = valence + graph.mark_count(vertex)
        value *= tangent_euler(label, point) ** (valence - 1)
        if special >= 3:
            value *= psi_vertex_integral(omegas, special)
        elif valence == 2:
            smoothing = omegas[0] + omegas[1]
            if smoothing == 0:
                raise DegenerateSpecializationError(
                    f"node smoothing weight vanishes at w={point.w}, z={point.z}"
                )
            value /= smoothing
        elif special == 1:
            value *= omegas[0]
    return value


def _worker_count() -> int:
    raw = os.environ.get("HILB3_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _contribution_task(args: tuple[StableGraph, Specialization]) -> Rational:
    graph, point = args
    return graph_contribution(graph, point)


@lru_cache(maxsize=None)
def graph_sum(family: Family, d: int, point: Specialization) -> Rational:
    """Sum the contributions of every degree-``d`` stable graph in a family.

    Set ``HILB3_THREADS`` to a value above 1 to spread the per-graph work over
    worker processes; the result is identical either way.
    """
    graphs = enumerate_graphs(family, d)
    workers = _worker_count()
    if workers > 1 and len(graphs) >= 4 * workers:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_contribution_task, [(g, point) for g in graphs], chunksize=8)
            return sum(parts, Fraction(0))
    return sum((graph_contribution(g, point) for g in graphs), Fraction(0))


def _canonical_sign(weight: Weight) -> Weight:
    if weight.a < 0 or (weight.a == 0 and weight.b < 0):
        return -weight
    return weight


@lru_cache(maxsize=None)
def forbidden_weights(d_max: int) -> tuple[Weight, ...]:
    """Every linear form that may be inverted in a degree <= ``d_max`` sum.

    Specializations drawn against this list keep all edge, vertex, flag and
    node-smoothing denominators nonzero, as well as the factors of the
    closed-form edge products used for cross-checks.
    """
    found: set[Weight] = set()

    def note(weight: Weight) -> None:
        if not weight.is_zero():
            found.add(_canonical_sign(weight))

    for label in fixed_points():
        for weight, _ in tangent_character(label).items():
            note(weight)
    for curve in curve_catalog():
        for degree in range(1, d_max // curve.beta + 1):
            for weight, _ in edge_character(curve, degree).items():
                note(weight)
    for label in fixed_points():
        through = curves_through(label)
        for first in through:
            for second in through:
                t1 = first.tangent_at(label)
                t2 = second.tangent_at(label)
                for d1 in range(1, d_max // first.beta + 1):
                    for d2 in range(1, d_max // second.beta + 1):
                        note(t1.scaled(d2) + t2.scaled(d1))
    for i in range(3):
        wi = chart_weight(i, 1, 0)
        zi = chart_weight(i, 0, 1)
        for degree in range(1, d_max + 1):
            for k in range(degree - 1):
                note((zi - wi).scaled(k + 1) + wi.scaled(2 * degree))
                note((wi - zi).scaled(k + 1) - (wi + zi).scaled(degree))
    return tuple(sorted(found, key=lambda w: (w.a, w.b)))
