"""
Command-line front end.

    python cli.py extremal --weights w.txt --forbid K3 --objective sum --json
    python cli.py erdos-stone --weights w.txt --forbid C5
    python cli.py oracle --n 5 --forbid K3 --seed 7
    python cli.py stability --graph g.txt --l 2
    python cli.py upgrade --graph g.txt --weights w.txt --l 3

Vertices are 1-based in every file and every output. Results go to stdout,
logs and error messages to stderr. Exit codes: 0 success, 1 failed check or
unexpected error, 2 bad input, 3 search cap exceeded, 4 forbidden clique
present in the input graph.
"""

import argparse
import logging
import sys
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence

from analyzer.edge_weight import sum_edge_weight
from analyzer.structure import complete_multipartite_structure
from config import config
from dataset.generators import make_rng, random_weights
from models.graph import WeightedGraph
from models.objective import Objective
from models.weights import WeightVector
from services.extremal_service import ExtremalResult, extremal_service
from services.oracle_service import oracle_service
from services.stability_service import stability_service
from utils.error_handler import InvalidArgument, handle_command_errors
from utils.serialization import dump_json, one_based_blocks, one_based_edges, rational, render_table
from utils.validators import GraphFileValidator, PatternValidator, WeightFileValidator

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


@dataclass
class RunConfig:
    """One parsed invocation"""
    command: str
    weights_path: Optional[str] = None
    graph_path: Optional[str] = None
    forbid: str = 'K3'
    objective: Objective = Objective.SUM
    l: Optional[int] = None
    n: Optional[int] = None
    output: str = 'table'
    seed: int = 0
    threads: int = 1
    heuristic_only: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            command=args.command,
            weights_path=args.weights,
            graph_path=getattr(args, 'graph', None),
            forbid=getattr(args, 'forbid', 'K3'),
            objective=Objective.parse(getattr(args, 'objective', 'sum')),
            l=getattr(args, 'l', None),
            n=getattr(args, 'n', None),
            output='json' if args.json else 'table',
            seed=config.SEED if args.seed is None else args.seed,
            threads=config.THREADS if args.threads is None else args.threads,
            heuristic_only=getattr(args, 'heuristic_only', False),
        )


def _emit(run: RunConfig, payload: Dict[str, Any], table: str) -> None:
    if run.output == 'json':
        print(dump_json(payload))
    else:
        print(table)


def _require_l(run: RunConfig, minimum: int) -> int:
    if run.l is None:
        raise InvalidArgument(f"{run.command} needs --l")
    if run.l < minimum:
        raise InvalidArgument(f"--l must be at least {minimum} for {run.command}, got {run.l}")
    return run.l


def _load_weighted_graph(run: RunConfig) -> WeightedGraph:
    """Named or file graph plus weights; unit weights when no weight file is given"""
    if not run.graph_path:
        raise InvalidArgument(f"{run.command} needs --graph")
    graph = GraphFileValidator.resolve(run.graph_path)
    if run.weights_path:
        weights = WeightFileValidator.load(run.weights_path)
        if len(weights) != graph.n:
            raise InvalidArgument(
                f"graph has {graph.n} vertices but the weight file has {len(weights)} weights"
            )
    else:
        weights = WeightVector.uniform(graph.n)
    return WeightedGraph(graph, weights)


def extremal_payload(result: ExtremalResult) -> Dict[str, Any]:
    return {
        "value": rational(result.objective_value),
        "blocks": one_based_blocks(result.partition.blocks),
        "edges": one_based_edges(result.graph.graph.edges()),
        "kind": result.objective_kind.value,
        "leading_term_only": result.leading_term_only,
    }


def _extremal_table(result: ExtremalResult) -> str:
    payload = extremal_payload(result)
    edge_list = " ".join(f"{u}-{v}" for u, v in payload["edges"])
    label = "leading term" if result.leading_term_only else "value"
    rows = [
        {"block": i + 1, "vertices": " ".join(map(str, block)),
         "weight": rational(result.graph.weights.block_weight(v - 1 for v in block))}
        for i, block in enumerate(payload["blocks"])
    ]
    return "\n".join([
        f"pattern: {result.pattern.name}  objective: {payload['kind']}",
        f"{label}: {payload['value']}",
        render_table(rows, ["block", "vertices", "weight"]),
        f"edges ({len(payload['edges'])}): {edge_list}",
    ])


@handle_command_errors("extremal")
def cmd_extremal(run: RunConfig) -> int:
    if not run.weights_path:
        raise InvalidArgument(f"{run.command} needs --weights")
    weights = WeightFileValidator.load(run.weights_path)
    pattern = PatternValidator.parse(run.forbid)
    if run.command == 'erdos-stone':
        pattern = pattern.as_general()
    result = extremal_service.solve_extremal(
        weights, pattern, run.objective, heuristic_only=run.heuristic_only
    )
    _emit(run, extremal_payload(result), _extremal_table(result))
    return 0


@handle_command_errors("oracle")
def cmd_oracle(run: RunConfig) -> int:
    if run.weights_path:
        weights = WeightFileValidator.load(run.weights_path)
        if run.n is not None and run.n != len(weights):
            raise InvalidArgument(f"--n {run.n} does not match the {len(weights)} weights given")
    elif run.n is not None:
        if run.n < 1:
            raise InvalidArgument(f"--n must be positive, got {run.n}")
        weights = random_weights(make_rng(run.seed), run.n)
    else:
        raise InvalidArgument("oracle needs --weights or --n")
    pattern = PatternValidator.parse(run.forbid)

    report = oracle_service.certify(weights, pattern, threads=run.threads)
    rows = [
        {"objective": e.objective.value, "oracle": rational(e.oracle_value),
         "formula": rational(e.formula_value), "relation": e.relation,
         "result": "PASS" if e.passed else "FAIL"}
        for e in report.entries
    ]
    table = "\n".join([
        f"pattern: {pattern.name}  weights: {' '.join(rational(x) for x in weights)}",
        render_table(rows, ["objective", "oracle", "formula", "relation", "result"]),
    ])
    _emit(run, report.to_dict(), table)
    return 0 if report.passed else 1


@handle_command_errors("stability")
def cmd_stability(run: RunConfig) -> int:
    l = _require_l(run, 1)
    graph = _load_weighted_graph(run)
    report = stability_service.verify_stability(graph, l)
    payload = report.to_dict()
    rows = [{"check": name, "result": "PASS" if ok else "FAIL"} for name, ok in report.checks.items()]
    table = "\n".join([
        f"blocks: {payload['blocks']}",
        f"pivots: {payload['pivots']}",
        f"removed weight: {payload['removed_weight']}  deficit: {payload['deficit']}",
        render_table(rows, ["check", "result"]),
        "PASS" if report.passed else "FAIL",
    ])
    _emit(run, payload, table)
    return 0 if report.passed else 1


@handle_command_errors("upgrade")
def cmd_upgrade(run: RunConfig) -> int:
    l = _require_l(run, 3)
    original = _load_weighted_graph(run)
    upgraded = extremal_service.upgrade_to_multipartite(original, l)
    before, after = original.graph.degrees(), upgraded.graph.degrees()
    structure = complete_multipartite_structure(upgraded.graph)
    payload = {
        "blocks": one_based_blocks(structure.blocks),
        "edges": one_based_edges(upgraded.graph.edges()),
        "degrees": [[b, a] for b, a in zip(before, after)],
        "weight_before": rational(sum_edge_weight(original)),
        "weight_after": rational(sum_edge_weight(upgraded)),
    }
    rows = [{"vertex": v + 1, "before": b, "after": a} for v, (b, a) in enumerate(zip(before, after))]
    table = "\n".join([
        f"blocks: {payload['blocks']}",
        render_table(rows, ["vertex", "before", "after"]),
        f"weight: {payload['weight_before']} -> {payload['weight_after']}",
    ])
    _emit(run, payload, table)
    return 0


HANDLERS = {
    'extremal': cmd_extremal,
    'erdos-stone': cmd_extremal,
    'oracle': cmd_oracle,
    'stability': cmd_stability,
    'upgrade': cmd_upgrade,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='weighted-turan',
        description='Weighted Turán numbers, extremal graphs and their exhaustive certification',
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--weights', help='weight file, one weight per line')
    output = common.add_mutually_exclusive_group()
    output.add_argument('--json', action='store_true', help='machine-readable output')
    output.add_argument('--table', action='store_true', help='aligned text output (default)')
    common.add_argument('--seed', type=int, default=None, help='random seed (default WT_SEED or 0)')
    common.add_argument('--threads', type=int, default=None, help='worker threads (default WT_THREADS or 1)')

    forbid = argparse.ArgumentParser(add_help=False)
    forbid.add_argument('--forbid', default='K3',
                        help='K3..K8, C3..C12, P2..P12, petersen or file:<path>')

    objective = argparse.ArgumentParser(add_help=False)
    objective.add_argument('--objective', choices=[o.value for o in Objective], default='sum')
    objective.add_argument('--heuristic-only', action='store_true',
                           help='product objective: return the best seed without exact search')

    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument('--graph',
                       help='graph file (n <count> / e <u> <v>) or a catalogue name such as C5 or petersen')
    graph.add_argument('--l', type=int, default=None, help='clique parameter')

    sub = parser.add_subparsers(dest='command', required=True)
    sub.add_parser('extremal', parents=[common, forbid, objective],
                   help='extremal number and extremal graph')
    sub.add_parser('erdos-stone', parents=[common, forbid, objective],
                   help='leading term for a forbidden graph via its chromatic number')
    oracle = sub.add_parser('oracle', parents=[common, forbid],
                            help='certify the formulas against exhaustive search')
    oracle.add_argument('--n', type=int, default=None, help='vertex count for random weights')
    sub.add_parser('stability', parents=[common, graph], help='greedy peeling report')
    sub.add_parser('upgrade', parents=[common, graph], help='degree-dominating multipartite upgrade')
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=config.LOG_LEVEL, format=LOG_FORMAT, stream=sys.stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    run = RunConfig.from_args(args)
    if run.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return 2
    logger.debug(f"running {run}")
    return HANDLERS[run.command](run)


if __name__ == "__main__":
    sys.exit(main())
