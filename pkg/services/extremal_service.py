"""
Extremal numbers and extremal graphs for K_l-free (and, at leading order,
H-free) weighted graphs.

For the sum objective an optimal K_l-free graph can always be taken complete
(l-1)-partite, and its weight is sum over blocks P of (n - |P|) w(P). For a
fixed list of block sizes the heaviest vertices belong in the smallest blocks,
so only the size vectors need enumerating. For the product objective the block
sums should be as balanced as possible; see services.product_solver.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from analyzer.edge_weight import ZERO
from analyzer.structure import contains_clique, pattern_chromatic_number
from config import Config, config as default_config
from models.graph import SimpleGraph, WeightedGraph, bits, popcount
from models.objective import Objective
from models.partition import Partition
from models.pattern import ForbiddenPattern
from models.weights import WeightVector
from services.product_solver import solve_product_partition
from utils.error_handler import (
    BipartitePattern,
    CliquePresent,
    EmptyWeights,
    GraphValidationError,
    InvalidArgument,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SizeVector:
    """Non-increasing positive block sizes summing to n"""
    sizes: Tuple[int, ...]

    def __post_init__(self):
        if any(s < 1 for s in self.sizes):
            raise InvalidArgument(f"Block sizes must be positive: {self.sizes}")
        if any(a < b for a, b in zip(self.sizes, self.sizes[1:])):
            raise InvalidArgument(f"Block sizes must be non-increasing: {self.sizes}")

    @property
    def n(self) -> int:
        return sum(self.sizes)


@dataclass(frozen=True)
class ExtremalResult:
    """Optimal value with its complete multipartite witness.

    ``leading_term_only`` marks results for a general forbidden graph, where the
    value is the leading term of the asymptotic formula and not the exact
    extremal number.
    """
    objective_value: Fraction
    partition: Partition
    graph: WeightedGraph
    objective_kind: Objective
    leading_term_only: bool = False
    pattern: Optional[ForbiddenPattern] = None


def enumerate_size_vectors(n: int, parts: int) -> Iterator[SizeVector]:
    """Integer partitions of n into at most ``parts`` parts, reverse-lexicographic."""

    def extend(remaining: int, largest: int, slots: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            yield SizeVector(prefix)
            return
        if slots == 0:
            return
        for size in range(min(remaining, largest), 0, -1):
            # the remaining slots cannot hold more than slots * size
            if size * slots < remaining:
                break
            yield from extend(remaining - size, size, slots - 1, prefix + (size,))

    yield from extend(n, n, parts, ())


def partition_sum_objective(p: Partition, w: WeightVector) -> Fraction:
    """Sum over blocks P of (n - |P|) w(P): the weight of the complete multipartite graph on p"""
    n = len(w)
    return sum(((n - len(block)) * w.block_weight(block) for block in p.blocks), ZERO)


def build_complete_multipartite(p: Partition, w: WeightVector) -> WeightedGraph:
    """Edges exactly between distinct blocks of p."""
    if p.n != len(w):
        raise GraphValidationError(
            f"Partition covers {p.n} vertices but there are {len(w)} weights"
        )
    full = (1 << p.n) - 1
    rows = [0] * p.n
    for block in p.blocks:
        block_mask = 0
        for v in block:
            block_mask |= 1 << v
        for v in block:
            rows[v] = full & ~block_mask
    return WeightedGraph(SimpleGraph(p.n, tuple(rows)), w)


def _assign_sorted(order: Sequence[int], sizes: Tuple[int, ...]) -> List[List[int]]:
    """Heaviest vertices into the smallest blocks"""
    blocks = []
    start = 0
    for size in sorted(sizes):
        blocks.append(list(order[start:start + size]))
        start += size
    return blocks


def _upgrade_blocks(adj: Sequence[int], w: WeightVector, mask: int, l: int) -> List[int]:
    """Blocks (as masks) of a complete (<= l-1)-partite graph on ``mask`` dominating
    the degrees of the induced subgraph, which must be K_l-free."""
    if mask == 0:
        return []
    if l <= 2:
        # K_2-free: the induced subgraph has no edges
        return [mask]
    pivot = max(bits(mask), key=lambda v: (popcount(adj[v] & mask), w[v], -v))
    neighbourhood = adj[pivot] & mask
    if neighbourhood == 0:
        # the max-degree vertex is isolated, so the induced subgraph is edgeless
        return [mask]
    return [mask & ~neighbourhood] + _upgrade_blocks(adj, w, neighbourhood, l - 1)


class ExtremalService:
    """
    Closed-form extremal numbers and their complete multipartite witnesses.
    Holds the solver settings used for the product objective.
    """

    def __init__(self, cfg: Config = None):
        self.config = cfg or default_config

    def optimal_sum_partition(self, w: WeightVector, parts: int) -> ExtremalResult:
        """
        Maximize sum over blocks of (n - |P|) w(P) over partitions into at most ``parts`` blocks.

        Args:
            w: vertex weights
            parts: l - 1 for the forbidden clique K_l

        Returns:
            ExtremalResult whose value is ex(n, w+, K_{parts+1}). Ties between size
            vectors go to the lexicographically smallest sizes tuple.
        """
        if w.n == 0:
            raise EmptyWeights("Cannot optimize over an empty weight vector")
        if parts < 1:
            raise InvalidArgument(f"Number of parts must be at least 1, got {parts}")

        n = w.n
        order = w.descending_order()
        best_value = None
        best_sizes = None
        best_blocks = None
        for size_vector in enumerate_size_vectors(n, parts):
            blocks = _assign_sorted(order, size_vector.sizes)
            value = sum(((n - len(b)) * w.block_weight(b) for b in blocks), ZERO)
            if best_value is None or value > best_value or \
                    (value == best_value and size_vector.sizes < best_sizes):
                best_value, best_sizes, best_blocks = value, size_vector.sizes, blocks

        partition = Partition.of(best_blocks, cap=parts)
        logger.debug(f"sum optimum {best_value} with sizes {best_sizes} (parts={parts})")
        return ExtremalResult(
            objective_value=best_value,
            partition=partition,
            graph=build_complete_multipartite(partition, w),
            objective_kind=Objective.SUM,
        )

    def optimal_bipartition_threshold(self, w: WeightVector) -> ExtremalResult:
        """
        Best prefix split of the descending weights into (top r, rest), r = 1..n-1.

        The value of a split is (n - r) * (top r weight) + r * (remaining weight).
        """
        if w.n < 2:
            raise EmptyWeights(f"Threshold scan needs at least two vertices, got {w.n}")
        n = w.n
        order = w.descending_order()
        total = w.total
        prefix = ZERO
        best_value, best_r = None, None
        for r in range(1, n):
            prefix += w[order[r - 1]]
            value = (n - r) * prefix + r * (total - prefix)
            if best_value is None or value > best_value:
                best_value, best_r = value, r

        partition = Partition.of([order[:best_r], order[best_r:]], cap=2)
        return ExtremalResult(
            objective_value=best_value,
            partition=partition,
            graph=build_complete_multipartite(partition, w),
            objective_kind=Objective.SUM,
        )

    def optimal_product_partition(self, w: WeightVector, parts: int,
                                  heuristic_only: bool = False) -> ExtremalResult:
        """Partition into at most ``parts`` blocks maximizing sum over block pairs of w(P) w(P')."""
        solution = solve_product_partition(
            w, parts, heuristic_only=heuristic_only,
            exact_cap=self.config.solver.product_exact_cap,
        )
        partition = Partition.of(solution.blocks, cap=parts)
        return ExtremalResult(
            objective_value=solution.value,
            partition=partition,
            graph=build_complete_multipartite(partition, w),
            objective_kind=Objective.PRODUCT,
        )

    def upgrade_to_multipartite(self, g: WeightedGraph, l: int) -> WeightedGraph:
        """
        Complete (<= l-1)-partite graph on the same vertices with every degree at least as large.

        The pivot at each level is the vertex of largest degree inside the current
        vertex set (then larger weight, then smaller index). Its non-neighbours form
        one block; the construction recurses into its neighbourhood with l - 1.
        """
        if l < 3:
            raise InvalidArgument(f"Upgrade needs l >= 3, got {l}")
        if contains_clique(g.graph, l):
            raise CliquePresent(f"Input graph contains K{l}", details={"l": l})
        blocks = _upgrade_blocks(g.graph.adj, g.weights, g.graph.full_mask, l)
        partition = Partition.of((list(bits(b)) for b in blocks), cap=l - 1)
        return build_complete_multipartite(partition, g.weights)

    def _parts_for(self, pattern: ForbiddenPattern) -> Tuple[int, bool]:
        """Number of parts and whether the value is only a leading term"""
        if pattern.is_clique:
            return pattern.clique_size - 1, False
        chi = pattern_chromatic_number(pattern)
        if chi <= 2:
            raise BipartitePattern(
                f"Pattern {pattern.name} is bipartite (chromatic number {chi}); "
                f"the leading term vanishes",
                details={"chromatic_number": chi},
            )
        return chi - 1, True

    def solve_extremal(self, w: WeightVector, pattern: ForbiddenPattern,
                       objective: Objective = Objective.SUM,
                       heuristic_only: bool = False) -> ExtremalResult:
        """Exact extremal result for cliques, leading-term result for general patterns."""
        parts, leading_only = self._parts_for(pattern)
        if objective is Objective.SUM:
            result = self.optimal_sum_partition(w, parts)
        else:
            result = self.optimal_product_partition(w, parts, heuristic_only=heuristic_only)
        return ExtremalResult(
            objective_value=result.objective_value,
            partition=result.partition,
            graph=result.graph,
            objective_kind=objective,
            leading_term_only=leading_only,
            pattern=pattern,
        )

    def ex_sum(self, w: WeightVector, pattern: ForbiddenPattern) -> Fraction:
        """ex(n, w+, pattern); exact for cliques"""
        return self.solve_extremal(w, pattern, Objective.SUM).objective_value

    def ex_product(self, w: WeightVector, pattern: ForbiddenPattern) -> Fraction:
        """ex(n, w*, pattern); exact for cliques"""
        return self.solve_extremal(w, pattern, Objective.PRODUCT).objective_value

    def erdos_stone_bound(self, w: WeightVector, h: SimpleGraph,
                          objective: Objective = Objective.SUM, name: str = "") -> ExtremalResult:
        """
        Leading term of ex(n, w, H): the best complete (chi(H)-1)-partite graph.

        The witness is H-free, so the value is always a lower bound on the exact
        extremal number.
        """
        return self.solve_extremal(w, ForbiddenPattern.general(h, name), objective)


# Singleton instance
extremal_service = ExtremalService()


def optimal_sum_partition(w: WeightVector, parts: int) -> ExtremalResult:
    return extremal_service.optimal_sum_partition(w, parts)


def optimal_bipartition_threshold(w: WeightVector) -> ExtremalResult:
    return extremal_service.optimal_bipartition_threshold(w)


def optimal_product_partition(w: WeightVector, parts: int,
                              heuristic_only: bool = False) -> ExtremalResult:
    return extremal_service.optimal_product_partition(w, parts, heuristic_only)


def upgrade_to_multipartite(g: WeightedGraph, l: int) -> WeightedGraph:
    return extremal_service.upgrade_to_multipartite(g, l)


def solve_extremal(w: WeightVector, pattern: ForbiddenPattern,
                   objective: Objective = Objective.SUM,
                   heuristic_only: bool = False) -> ExtremalResult:
    return extremal_service.solve_extremal(w, pattern, objective, heuristic_only)


def ex_sum(w: WeightVector, pattern: ForbiddenPattern) -> Fraction:
    return extremal_service.ex_sum(w, pattern)


def ex_product(w: WeightVector, pattern: ForbiddenPattern) -> Fraction:
    return extremal_service.ex_product(w, pattern)


def erdos_stone_bound(w: WeightVector, h: SimpleGraph,
                      objective: Objective = Objective.SUM, name: str = "") -> ExtremalResult:
    return extremal_service.erdos_stone_bound(w, h, objective, name)
