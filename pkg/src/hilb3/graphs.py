"""Enumeration of stable graphs indexing torus-fixed loci of stable maps.

A stable graph here is a finite tree whose vertices are labeled by
torus-fixed points, whose edges carry an invariant curve together with a
covering degree, and which has two marked vertices with distinct labels.
Each edge's endpoints must be labeled by the endpoints of its curve, and the
beta-weighted covering degrees sum to the total curve degree.

Graphs are enumerated one representative per isomorphism class.  Since the
two marks sit on distinct labels, every isomorphism fixes both marked
vertices; rooting the tree at the first mark therefore turns graph
isomorphism into rooted-tree isomorphism, and canonical rooted growth
(children generated as non-increasing key sequences) is exhaustive and
duplicate-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .geometry import Curve, FixedPoint, curve_catalog, pair_curve, punctual_curve

__all__ = [
    "Edge",
    "StableGraph",
    "Family",
    "pair_family",
    "punctual_family",
    "enumerate_graphs",
    "automorphism_order",
    "validate_graph",
]


@dataclass(frozen=True)
class Edge:
    """An edge of a stable graph: a degree-``degree`` covering of ``curve``."""

    head: int
    tail: int
    curve: Curve
    degree: int


@dataclass(frozen=True)
class StableGraph:
    """A marked labeled tree; vertex identity is the index into ``vertices``."""

    vertices: tuple[FixedPoint, ...]
    edges: tuple[Edge, ...]
    marks: tuple[int, int]

    def degree(self) -> int:
        return sum(e.curve.beta * e.degree for e in self.edges)

    def incident_edges(self, vertex: int) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if vertex in (e.head, e.tail))

    def valence(self, vertex: int) -> int:
        return len(self.incident_edges(vertex))

    def mark_count(self, vertex: int) -> int:
        return (self.marks[0] == vertex) + (self.marks[1] == vertex)

    def point_count(self, vertex: int) -> int:
        """Flags plus marks at the vertex (special points of its component)."""
        return self.valence(vertex) + self.mark_count(vertex)


@dataclass(frozen=True)
class Family:
    """A connected system of curves with two chosen mark labels."""

    name: str
    curves: tuple[Curve, ...]
    mark_labels: tuple[FixedPoint, FixedPoint]


def pair_family(i: int, j: int) -> Family:
    """Graphs covering the single pair-type curve over charts (i, j)."""
    curve = pair_curve(i, j)
    first, second = sorted(curve.endpoints)
    return Family(f"pair({i},{j})", (curve,), (first, second))


def punctual_family(i: int, j: int, k: int) -> Family:
    """Graphs in the punctual triangle of chart ``i`` with marks on strata j, k."""
    if not 0 <= j < k <= 2:
        raise ValueError(f"need 0 <= j < k <= 2, got ({j},{k})")
    curves = tuple(
        punctual_curve(i, a, b) for (a, b) in ((0, 1), (0, 2), (1, 2))
    )
    labels = (FixedPoint.punctual(i, j), FixedPoint.punctual(i, k))
    return Family(f"punctual({i};{j},{k})", curves, labels)


# A rooted subtree is encoded as (label, carries_second_mark, children) with
# children a sorted tuple of (curve_name, degree, child_encoding).  Encodings
# are canonical: equal encodings <=> isomorphic rooted marked subtrees.


@lru_cache(maxsize=None)
def _edges_at(family: Family, label: FixedPoint) -> tuple[Curve, ...]:
    return tuple(c for c in family.curves if label in c.endpoints)


def _other_end(curve: Curve, label: FixedPoint) -> FixedPoint:
    a, b = curve.endpoints
    return b if label == a else a


@lru_cache(maxsize=None)
def _subtrees(family: Family, label: FixedPoint, budget: int, with_mark: bool) -> tuple:
    """All canonical rooted subtrees with the given root label and beta budget."""
    mark_label = family.mark_labels[1]
    results = []
    if with_mark and label == mark_label:
        for children in _child_multisets(family, label, budget, None):
            results.append((label, True, children))
    if with_mark:
        # The second mark goes into exactly one branch.
        for curve in _edges_at(family, label):
            child_label = _other_end(curve, label)
            for degree in range(1, budget // curve.beta + 1):
                spent = curve.beta * degree
                for branch_budget in range(budget - spent + 1):
                    for marked_child in _subtrees(family, child_label, branch_budget, True):
                        marked_item = (curve.name, degree, marked_child)
                        rest = budget - spent - branch_budget
                        for children in _child_multisets(family, label, rest, None):
                            merged = tuple(sorted(children + (marked_item,)))
                            results.append((label, False, merged))
    else:
        for children in _child_multisets(family, label, budget, None):
            results.append((label, False, children))
    return tuple(results)


@lru_cache(maxsize=None)
def _items(family: Family, label: FixedPoint, cost: int) -> tuple:
    """All unmarked child attachments at ``label`` with exact beta cost."""
    found = []
    for curve in _edges_at(family, label):
        child_label = _other_end(curve, label)
        for degree in range(1, cost // curve.beta + 1):
            rest = cost - curve.beta * degree
            for child in _subtrees(family, child_label, rest, False):
                found.append((curve.name, degree, child))
    return tuple(sorted(found))


def _child_multisets(family: Family, label: FixedPoint, budget: int, bound) -> tuple:
    """Non-increasing tuples of unmarked child items with total cost ``budget``."""
    if budget < 0:
        return ()
    if budget == 0:
        return ((),)
    results = []
    for cost in range(1, budget + 1):
        for item in _items(family, label, cost):
            if bound is not None and item > bound:
                continue
            for rest in _child_multisets(family, label, budget - cost, item):
                results.append(rest + (item,))
    return tuple(results)


def _materialize(family: Family, encoding: tuple) -> StableGraph:
    vertices: list[FixedPoint] = []
    edges: list[Edge] = []
    mark2 = [-1]

    def walk(node: tuple, parent: int | None, parent_curve: str | None, parent_degree: int) -> None:
        label, marked, children = node
        index = len(vertices)
        vertices.append(label)
        if marked:
            mark2[0] = index
        if parent is not None:
            curve = next(c for c in family.curves if c.name == parent_curve)
            edges.append(Edge(parent, index, curve, parent_degree))
        for curve_name, degree, child in children:
            walk(child, index, curve_name, degree)

    walk(encoding, None, None, 0)
    if mark2[0] < 0:
        raise ValueError("encoding carries no second mark")
    return StableGraph(tuple(vertices), tuple(edges), (0, mark2[0]))


@lru_cache(maxsize=None)
def enumerate_graphs(family: Family, d: int) -> tuple[StableGraph, ...]:
    """One representative per isomorphism class with total curve degree ``d``.

    The first mark always sits at vertex 0 and carries the smaller of the
    family's two mark labels, which normalizes the mark swap.
    """
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    root_label = family.mark_labels[0]
    graphs = [
        _materialize(family, encoding)
        for encoding in _subtrees(family, root_label, d, True)
    ]
    for graph in graphs:
        validate_graph(family, graph)
    return tuple(graphs)


def _rooted_encoding_and_aut(graph: StableGraph, vertex: int, parent: int | None) -> tuple[tuple, int]:
    children = []
    aut = 1
    for edge in graph.incident_edges(vertex):
        child = edge.tail if edge.head == vertex else edge.head
        if child == parent:
            continue
        child_enc, child_aut = _rooted_encoding_and_aut(graph, child, vertex)
        children.append((edge.curve.name, edge.degree, child_enc))
        aut *= child_aut
    children.sort()
    start = 0
    for pos in range(1, len(children) + 1):
        if pos == len(children) or children[pos] != children[start]:
            aut *= math.factorial(pos - start)
            start = pos
    encoding = (graph.vertices[vertex], vertex == graph.marks[1], tuple(children))
    return encoding, aut


def automorphism_order(graph: StableGraph) -> int:
    """Order of the graph's deck-transformation group ``|Aut| * prod(d_e)``.

    ``Aut`` is computed by rooting at the first mark: every automorphism
    fixes both marked vertices, so rooted and unrooted automorphisms agree.
    """
    _, aut = _rooted_encoding_and_aut(graph, graph.marks[0], None)
    degree_factor = math.prod(e.degree for e in graph.edges)
    return aut * degree_factor


def validate_graph(family: Family, graph: StableGraph) -> None:
    """Raise ``ValueError`` unless the graph is a valid member of the family."""
    n = len(graph.vertices)
    if len(graph.edges) != n - 1:
        raise ValueError("graph is not a tree: wrong edge count")
    adjacency: dict[int, list[int]] = {v: [] for v in range(n)}
    for edge in graph.edges:
        adjacency[edge.head].append(edge.tail)
        adjacency[edge.tail].append(edge.head)
    seen = {0}
    stack = [0]
    while stack:
        for nxt in adjacency[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    if len(seen) != n:
        raise ValueError("graph is not connected")
    for edge in graph.edges:
        if edge.curve not in family.curves:
            raise ValueError(f"edge curve {edge.curve} not in family {family.name}")
        if edge.degree < 1:
            raise ValueError("edge degree must be positive")
        got = {graph.vertices[edge.head], graph.vertices[edge.tail]}
        if got != set(edge.curve.endpoints):
            raise ValueError(f"edge endpoints {got} do not match curve {edge.curve}")
    m1, m2 = graph.marks
    if m1 == m2:
        raise ValueError("marks must sit on distinct vertices")
    l1, l2 = graph.vertices[m1], graph.vertices[m2]
    if (l1, l2) != family.mark_labels:
        raise ValueError(
            f"mark labels ({l1}, {l2}) do not match family {family.mark_labels}"
        )
    if not l1 < l2:
        raise ValueError("first mark must carry the smaller label")


def all_pair_families() -> tuple[Family, ...]:
    """The six ordered-chart pair families."""
    return tuple(
        pair_family(i, j) for i in range(3) for j in range(3) if i != j
    )


def all_punctual_families(i: int) -> tuple[Family, ...]:
    """The three mark placements for the punctual triangle of chart ``i``."""
    return tuple(punctual_family(i, j, k) for (j, k) in ((0, 1), (0, 2), (1, 2)))


def catalog_summary() -> dict:
    """Counts used by the command-line catalog listing."""
    curves = curve_catalog()
    return {
        "fixed_points": 21,
        "curves": len(curves),
        "pair_curves": sum(1 for c in curves if c.kind == "pair"),
        "punctual_curves": sum(1 for c in curves if c.kind == "punctual"),
    }
