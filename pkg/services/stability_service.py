"""
Stability of K_{l+1}-free weighted graphs.

If w+(G) = ex(n, w+, K_{l+1}) - t, greedy peeling finds at most l blocks whose
internal edges E_t weigh at most t; deleting them leaves an l-partite graph.

Peeling: with X_1 = V, step i picks the vertex v_i of X_i with the most
neighbours inside X_i (smallest index on ties), sets V_i = X_i minus N(v_i),
and continues with X_{i+1} = N(v_i) within X_i until nothing is left.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, FrozenSet, List, Tuple

from analyzer.edge_weight import edge_set_weight, sum_edge_weight
from analyzer.structure import contains_clique
from models.graph import WeightedGraph, bits, popcount
from models.objective import Objective
from models.pattern import ForbiddenPattern
from models.weights import WeightVector
from services.extremal_service import ExtremalService, extremal_service
from utils.error_handler import CliquePresent, InvalidArgument, StabilityBoundViolated
from utils.serialization import one_based_blocks, one_based_edges, rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PeelResult:
    blocks: Tuple[FrozenSet[int], ...]
    pivots: Tuple[int, ...]
    removed_edges: Tuple[Tuple[int, int], ...]
    removed_weight: Fraction
    deficit: Fraction
    relabeled: WeightedGraph
    extremal_value: Fraction
    graph_weight: Fraction

    @property
    def part_count(self) -> int:
        return len(self.blocks)

    @property
    def bound_holds(self) -> bool:
        return self.removed_weight <= self.deficit


@dataclass
class StabilityReport:
    """Independent re-check of a peel, serializable for the CLI"""
    peel: PeelResult
    l: int
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> Dict[str, Any]:
        p = self.peel
        return {
            "blocks": one_based_blocks(p.blocks),
            "pivots": [v + 1 for v in p.pivots],
            "removed_edges": one_based_edges(p.removed_edges),
            "removed_weight": rational(p.removed_weight),
            "deficit": rational(p.deficit),
            "extremal_value": rational(p.extremal_value),
            "graph_weight": rational(p.graph_weight),
            "weights": [rational(x) for x in p.relabeled.weights],
            "l": self.l,
            "checks": dict(self.checks),
            "pass": self.passed,
        }


class StabilityService:
    """
    Greedy peeling of K_{l+1}-free weighted graphs with an independent re-check.
    Extremal values come from the given extremal service.
    """

    def __init__(self, extremal: ExtremalService = None):
        self.extremal = extremal or extremal_service

    def weight_relabel(self, g: WeightedGraph) -> WeightedGraph:
        """
        Reassign weights so higher degree gets higher weight; the graph is untouched.

        Vertices ordered by degree descending (index ascending) receive the weights
        sorted descending. By rearrangement the sum objective never decreases.
        """
        degrees = g.graph.degrees()
        by_degree = sorted(range(g.n), key=lambda v: (-degrees[v], v))
        sorted_weights = sorted(g.weights, reverse=True)
        assignment = [Fraction(0)] * g.n
        for v, weight in zip(by_degree, sorted_weights):
            assignment[v] = weight
        return g.with_weights(WeightVector(tuple(assignment)))

    def _peel(self, g: WeightedGraph, l: int) -> PeelResult:
        if l < 1:
            raise InvalidArgument(f"l must be at least 1, got {l}")
        if contains_clique(g.graph, l + 1):
            raise CliquePresent(f"Input graph contains K{l + 1}", details={"l": l})

        relabeled = self.weight_relabel(g)
        adj = relabeled.graph.adj
        remaining = relabeled.graph.full_mask
        blocks: List[FrozenSet[int]] = []
        pivots: List[int] = []
        removed: List[Tuple[int, int]] = []
        while remaining:
            pivot = max(bits(remaining), key=lambda v: (popcount(adj[v] & remaining), -v))
            block = remaining & ~adj[pivot]
            pivots.append(pivot)
            blocks.append(frozenset(bits(block)))
            removed.extend(relabeled.graph.edges_within(block))
            remaining &= adj[pivot]

        removed_weight = edge_set_weight(removed, relabeled.weights, Objective.SUM)
        extremal_value = self.extremal.ex_sum(relabeled.weights, ForbiddenPattern.clique(l + 1))
        graph_weight = sum_edge_weight(relabeled)
        return PeelResult(
            blocks=tuple(blocks),
            pivots=tuple(pivots),
            removed_edges=tuple(sorted(removed)),
            removed_weight=removed_weight,
            deficit=extremal_value - graph_weight,
            relabeled=relabeled,
            extremal_value=extremal_value,
            graph_weight=graph_weight,
        )

    def greedy_peel(self, g: WeightedGraph, l: int) -> PeelResult:
        """Peel a K_{l+1}-free graph into at most l blocks; raises if the weight bound fails."""
        result = self._peel(g, l)
        if not result.bound_holds:
            raise StabilityBoundViolated(
                f"Removed weight {result.removed_weight} exceeds deficit {result.deficit}",
                details={"pivots": result.pivots},
                component="stability",
            )
        logger.debug(
            f"peeled into {result.part_count} blocks, removed {len(result.removed_edges)} edges "
            f"of weight {result.removed_weight} (deficit {result.deficit})"
        )
        return result

    def verify_stability(self, g: WeightedGraph, l: int) -> StabilityReport:
        """Run the peel and re-derive every claim about it independently."""
        peel = self._peel(g, l)
        graph = peel.relabeled.graph
        owner = {v: i for i, block in enumerate(peel.blocks) for v in block}

        intra = sorted((u, v) for u, v in graph.edges() if owner[u] == owner[v])
        after = graph.without_edges(peel.removed_edges)
        deficit = (
            self.extremal.optimal_sum_partition(peel.relabeled.weights, l).objective_value
            - sum_edge_weight(peel.relabeled)
        )
        removed_weight = sum((peel.relabeled.weights[u] + peel.relabeled.weights[v]
                              for u, v in intra), Fraction(0))

        checks = {
            "blocks_cover_vertices": sorted(owner) == list(range(g.n)) and
            sum(len(b) for b in peel.blocks) == g.n,
            "at_most_l_blocks": peel.part_count <= l,
            "removed_edges_are_intra_block": list(peel.removed_edges) == intra,
            "blocks_independent_after_removal": all(
                not after.has_edge(u, v)
                for block in peel.blocks for u in block for v in block if u < v
            ),
            "pivot_outside_own_neighbourhood": all(
                not any(graph.has_edge(pivot, v) for v in block)
                for pivot, block in zip(peel.pivots, peel.blocks)
            ),
            "deficit_matches": deficit == peel.deficit,
            "removed_weight_matches": removed_weight == peel.removed_weight,
            "weight_not_decreased": peel.graph_weight >= sum_edge_weight(g),
            "removed_weight_within_deficit": removed_weight <= deficit,
        }
        report = StabilityReport(peel=peel, l=l, checks=checks)
        if not report.passed:
            failed = [name for name, ok in checks.items() if not ok]
            logger.error(f"stability verification failed: {failed}")
        return report


# Singleton instance
stability_service = StabilityService()


def weight_relabel(g: WeightedGraph) -> WeightedGraph:
    return stability_service.weight_relabel(g)


def greedy_peel(g: WeightedGraph, l: int) -> PeelResult:
    return stability_service.greedy_peel(g, l)


def verify_stability(g: WeightedGraph, l: int) -> StabilityReport:
    return stability_service.verify_stability(g, l)
