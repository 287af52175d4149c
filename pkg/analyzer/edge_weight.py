"""
Edge-weight objectives induced by vertex weights.

sum:      w+(uv) = w(u) + w(v), and w+(G) = sum over v of d(v) w(v)
product:  w*(uv) = w(u) w(v)
"""

from fractions import Fraction
from typing import Iterable, Tuple

from models.graph import WeightedGraph
from models.objective import Objective
from models.weights import WeightVector

ZERO = Fraction(0)


def sum_edge_weight(g: WeightedGraph) -> Fraction:
    """Total of w(u) + w(v) over the edges of g."""
    w = g.weights
    return sum((w[u] + w[v] for u, v in g.graph.edges()), ZERO)


def sum_edge_weight_by_degree(g: WeightedGraph) -> Fraction:
    """Same quantity as sum_edge_weight, computed as the degree-weighted vertex sum."""
    return sum((d * w for d, w in zip(g.graph.degrees(), g.weights)), ZERO)


def product_edge_weight(g: WeightedGraph) -> Fraction:
    w = g.weights
    return sum((w[u] * w[v] for u, v in g.graph.edges()), ZERO)


def edge_weight(g: WeightedGraph, objective: Objective) -> Fraction:
    if objective is Objective.SUM:
        return sum_edge_weight(g)
    return product_edge_weight(g)


def edge_set_weight(edges: Iterable[Tuple[int, int]], weights: WeightVector,
                    objective: Objective = Objective.SUM) -> Fraction:
    """Weight of an explicit edge list under either objective"""
    if objective is Objective.SUM:
        return sum((weights[u] + weights[v] for u, v in edges), ZERO)
    return sum((weights[u] * weights[v] for u, v in edges), ZERO)


def is_degree_monotone(g: WeightedGraph) -> bool:
    """True iff w(u) > w(v) implies d(u) >= d(v) for every pair of vertices.

    Vertices of equal weight are unconstrained, so it is enough to compare each
    weight class against the minimum degree of all strictly heavier vertices.
    """
    degrees = g.graph.degrees()
    order = sorted(range(g.n), key=lambda v: -g.weights[v])
    min_heavier = None
    i = 0
    while i < len(order):
        j = i
        level = g.weights[order[i]]
        while j < len(order) and g.weights[order[j]] == level:
            j += 1
        group = [degrees[v] for v in order[i:j]]
        if min_heavier is not None and max(group) > min_heavier:
            return False
        low = min(group)
        min_heavier = low if min_heavier is None else min(min_heavier, low)
        i = j
    return True
