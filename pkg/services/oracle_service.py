"""
Exhaustive oracle for weighted Turán numbers at small n.

Evaluates the definition directly: the maximum objective over every
pattern-free edge subset of K_n. Depth-first search over the candidate edges
in lexicographic order, include before exclude. An edge is only included if
it does not complete a copy of the pattern, and only copies through the new
edge need checking. A subtree is cut when its value plus the weight of every
remaining candidate edge falls strictly below the best value seen (weights
are non-negative, so this never loses an optimum).

The first ``split_depth`` decisions are enumerated up front into root tasks
run through joblib; tasks share a best-value bound that only ever rises.
Ties are never pruned, and results are merged by value and then task order,
so the answer does not depend on thread timing.
"""

import logging
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd
from joblib import Parallel, delayed

from analyzer.structure import closes_clique, embeds_through_edge
from config import Config, config as default_config
from models.graph import SimpleGraph
from models.objective import Objective
from models.pattern import ForbiddenPattern
from models.weights import WeightVector
from services.extremal_service import ExtremalService, extremal_service
from utils.error_handler import EmptyWeights, TooLarge
from utils.serialization import one_based_edges, rational

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


@dataclass(frozen=True)
class OracleResult:
    best_value: Fraction
    witness: SimpleGraph
    explored: int
    pattern: ForbiddenPattern
    objective: Objective


class _SharedBound:
    """Monotonically rising best value shared by root tasks"""

    def __init__(self):
        self._value: Optional[Fraction] = None
        self._lock = threading.Lock()

    @property
    def value(self) -> Optional[Fraction]:
        return self._value

    def offer(self, candidate: Fraction) -> None:
        with self._lock:
            if self._value is None or candidate > self._value:
                self._value = candidate


class _EdgeSearch:
    """Include/exclude search over the edges of K_n"""

    def __init__(self, w: WeightVector, pattern: ForbiddenPattern, objective: Objective):
        self.n = w.n
        self.pattern = pattern
        self.edges: List[Tuple[int, int]] = [
            (u, v) for u in range(self.n) for v in range(u + 1, self.n)
        ]
        if objective is Objective.SUM:
            self.edge_weights = [w[u] + w[v] for u, v in self.edges]
        else:
            self.edge_weights = [w[u] * w[v] for u, v in self.edges]
        m = len(self.edges)
        self.suffix = [ZERO] * (m + 1)
        for i in range(m - 1, -1, -1):
            self.suffix[i] = self.suffix[i + 1] + self.edge_weights[i]

    def admissible(self, adj: List[int], i: int) -> bool:
        """Whether edge i can join adj without completing the pattern"""
        u, v = self.edges[i]
        if self.pattern.is_clique:
            return not closes_clique(adj, u, v, self.pattern.clique_size)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        try:
            return not embeds_through_edge(adj, self.n, self.pattern.graph, u, v)
        finally:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)

    def root_tasks(self, depth: int) -> List[Tuple[bool, ...]]:
        """Feasible include/exclude prefixes of the first ``depth`` edges, in DFS order"""
        depth = min(depth, len(self.edges))
        tasks: List[Tuple[bool, ...]] = []
        adj = [0] * self.n

        def expand(i: int, prefix: Tuple[bool, ...]) -> None:
            if i == depth:
                tasks.append(prefix)
                return
            if self.admissible(adj, i):
                u, v = self.edges[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                expand(i + 1, prefix + (True,))
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
            expand(i + 1, prefix + (False,))

        expand(0, ())
        return tasks

    def run_task(self, prefix: Tuple[bool, ...],
                 shared: _SharedBound) -> Tuple[Optional[Fraction], Tuple[int, ...], int]:
        """Search below one prefix; returns (best value or None, chosen edge ids, nodes)"""
        adj = [0] * self.n
        chosen: List[int] = []
        value = ZERO
        for i, take in enumerate(prefix):
            if take:
                u, v = self.edges[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                chosen.append(i)
                value += self.edge_weights[i]

        m = len(self.edges)
        best: List[Any] = [None, ()]
        explored = 0

        def visit(i: int, current: Fraction) -> None:
            nonlocal explored
            explored += 1
            bound = best[0]
            outside = shared.value
            if outside is not None and (bound is None or outside > bound):
                bound = outside
            if bound is not None and current + self.suffix[i] < bound:
                return
            if i == m:
                if best[0] is None or current > best[0]:
                    best[0] = current
                    best[1] = tuple(chosen)
                    shared.offer(current)
                return
            if self.admissible(adj, i):
                u, v = self.edges[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                chosen.append(i)
                visit(i + 1, current + self.edge_weights[i])
                chosen.pop()
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
            visit(i + 1, current)

        visit(len(prefix), value)
        return best[0], best[1], explored


@dataclass
class CertificationEntry:
    objective: Objective
    oracle_value: Fraction
    formula_value: Fraction
    relation: str
    passed: bool
    witness: SimpleGraph

    def to_dict(self) -> Dict[str, Any]:
        return {
            "objective": self.objective.value,
            "oracle_value": rational(self.oracle_value),
            "formula_value": rational(self.formula_value),
            "relation": self.relation,
            "pass": self.passed,
            "witness_edges": one_based_edges(self.witness.edges()),
        }


@dataclass
class CertificationReport:
    pattern: ForbiddenPattern
    weights: WeightVector
    entries: List[CertificationEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pattern": self.pattern.name,
            "weights": [rational(x) for x in self.weights],
            "results": [entry.to_dict() for entry in self.entries],
            "pass": self.passed,
        }


class OracleService:
    """
    Exhaustive search for the weighted extremal number at small n, and the
    comparison of its results against the closed forms. Caps, thread count and
    root split depth come from the held Config.
    """

    def __init__(self, cfg: Config = None, extremal: ExtremalService = None):
        self.config = cfg or default_config
        self.extremal = extremal or extremal_service

    def oracle_cap(self, pattern: ForbiddenPattern) -> int:
        """Largest n the oracle accepts for this pattern"""
        oracle = self.config.oracle
        return oracle.max_n_clique if pattern.is_clique else oracle.max_n_general

    def check_caps(self, w: WeightVector, pattern: ForbiddenPattern) -> None:
        """Raise unless the oracle may run on ``w`` for ``pattern``"""
        if w.n == 0:
            raise EmptyWeights("Oracle needs at least one vertex")
        cap = self.oracle_cap(pattern)
        if w.n > cap:
            raise TooLarge(
                f"Oracle is capped at n <= {cap} for pattern {pattern.name}, got n = {w.n} "
                f"(set WT_MAX_N to override)",
                details={"n": w.n, "cap": cap},
                component="oracle",
            )

    def brute_force_ex(self, w: WeightVector, pattern: ForbiddenPattern,
                       objective: Objective = Objective.SUM,
                       threads: Optional[int] = None) -> OracleResult:
        """Exact max of the objective over all pattern-free subgraphs of K_n."""
        self.check_caps(w, pattern)
        threads = threads or self.config.THREADS

        search = _EdgeSearch(w, pattern, objective)
        shared = _SharedBound()
        tasks = search.root_tasks(self.config.oracle.split_depth)
        logger.debug(
            f"oracle n={w.n} pattern={pattern.name}: {len(tasks)} root tasks on {threads} thread(s)"
        )

        results = Parallel(n_jobs=threads, prefer="threads")(
            delayed(search.run_task)(prefix, shared) for prefix in tasks
        )

        best_value, best_edges = None, ()
        explored = 0
        for value, edges, nodes in results:
            explored += nodes
            if value is not None and (best_value is None or value > best_value):
                best_value, best_edges = value, edges

        witness = SimpleGraph.from_edges(w.n, (search.edges[i] for i in best_edges))
        logger.info(
            f"oracle {objective.value} n={w.n} pattern={pattern.name}: "
            f"value {best_value}, {explored} nodes"
        )
        return OracleResult(
            best_value=best_value,
            witness=witness,
            explored=explored,
            pattern=pattern,
            objective=objective,
        )

    def certify(self, w: WeightVector, pattern: ForbiddenPattern,
                threads: Optional[int] = None) -> CertificationReport:
        """
        Compare the oracle against the closed forms for both objectives.

        Cliques must match exactly; for general patterns the oracle must reach at
        least the leading term.
        """
        self.check_caps(w, pattern)
        report = CertificationReport(pattern=pattern, weights=w)
        for objective in (Objective.SUM, Objective.PRODUCT):
            oracle = self.brute_force_ex(w, pattern, objective, threads=threads)
            formula = self.extremal.solve_extremal(w, pattern, objective)
            if pattern.is_clique:
                relation, passed = "==", oracle.best_value == formula.objective_value
            else:
                relation, passed = ">=", oracle.best_value >= formula.objective_value
            if not passed:
                logger.error(
                    f"certification failed for {pattern.name} ({objective.value}): "
                    f"oracle {oracle.best_value} vs formula {formula.objective_value}"
                )
            report.entries.append(CertificationEntry(
                objective=objective,
                oracle_value=oracle.best_value,
                formula_value=formula.objective_value,
                relation=relation,
                passed=passed,
                witness=oracle.witness,
            ))
        return report

    def leading_term_ratios(self, pattern: ForbiddenPattern, ns: Sequence[int],
                            objective: Objective = Objective.SUM,
                            threads: Optional[int] = None) -> pd.DataFrame:
        """Oracle value over leading term for unit weights, one row per n"""
        rows = []
        for n in ns:
            w = WeightVector.uniform(n)
            exact = self.brute_force_ex(w, pattern, objective, threads=threads).best_value
            leading = self.extremal.solve_extremal(w, pattern.as_general(), objective).objective_value
            rows.append({
                "n": n,
                "oracle_value": exact,
                "leading_term": leading,
                "ratio": exact / leading if leading else None,
            })
        return pd.DataFrame(rows, columns=["n", "oracle_value", "leading_term", "ratio"])


def ratios_non_increasing(frame: pd.DataFrame) -> bool:
    """Whether the defined ratios never rise as n grows"""
    ratios = [r for r in frame["ratio"].tolist() if r is not None]
    return all(a >= b for a, b in zip(ratios, ratios[1:]))


# Singleton instance
oracle_service = OracleService()


def _service_for(cfg: Optional[Config]) -> OracleService:
    return oracle_service if cfg is None else OracleService(cfg)


def brute_force_ex(w: WeightVector, pattern: ForbiddenPattern,
                   objective: Objective = Objective.SUM,
                   threads: Optional[int] = None, cfg: Config = None) -> OracleResult:
    return _service_for(cfg).brute_force_ex(w, pattern, objective, threads)


def certify(w: WeightVector, pattern: ForbiddenPattern,
            threads: Optional[int] = None, cfg: Config = None) -> CertificationReport:
    return _service_for(cfg).certify(w, pattern, threads)


def leading_term_ratios(pattern: ForbiddenPattern, ns: Sequence[int],
                        objective: Objective = Objective.SUM,
                        threads: Optional[int] = None, cfg: Config = None) -> pd.DataFrame:
    return _service_for(cfg).leading_term_ratios(pattern, ns, objective, threads)
