import re
from pathlib import Path
from typing import List, Tuple

from dataset.named_graphs import resolve_named_graph
from models.graph import MAX_VERTICES, SimpleGraph
from models.pattern import ForbiddenPattern
from models.weights import WeightVector, to_fraction
from utils.error_handler import GraphValidationError, InputParseError

COMMENT = '#'
CLIQUE_SPEC = re.compile(r'^K(?P<size>\d+)$', re.IGNORECASE | re.ASCII)
INTEGER_FIELD = re.compile(r'\d+', re.ASCII)
WEIGHT_TOKEN = re.compile(r'^\d+(?:\.\d+)?$|^\d+/\d+$', re.ASCII)


def _content_lines(text: str) -> List[Tuple[int, str]]:
    """(1-based line number, stripped text) for non-blank, non-comment lines"""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split(COMMENT, 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def _read(path) -> str:
    return Path(path).read_text(encoding='utf-8')


class GraphFileValidator:
    """Parses graph files.

    Format: one ``n <count>`` line, then ``e <u> <v>`` lines with 1-based
    vertices. Blank lines and ``#`` comments are ignored; duplicate edges
    collapse to one.
    """

    @staticmethod
    def parse(text: str) -> SimpleGraph:
        n = None
        edges = set()
        for number, line in _content_lines(text):
            fields = line.split()
            tag = fields[0].lower()
            if tag == 'n':
                if n is not None:
                    raise InputParseError(f"line {number}: vertex count given twice")
                if len(fields) != 2 or not INTEGER_FIELD.fullmatch(fields[1]):
                    raise InputParseError(f"line {number}: expected 'n <count>', got {line!r}")
                n = int(fields[1])
                if not 1 <= n <= MAX_VERTICES:
                    raise InputParseError(
                        f"line {number}: vertex count must be between 1 and {MAX_VERTICES}, got {n}"
                    )
            elif tag == 'e':
                if n is None:
                    raise InputParseError(f"line {number}: edge before the 'n <count>' line")
                if len(fields) != 3 or not all(INTEGER_FIELD.fullmatch(f) for f in fields[1:]):
                    raise InputParseError(f"line {number}: expected 'e <u> <v>', got {line!r}")
                u, v = int(fields[1]), int(fields[2])
                if not (1 <= u <= n and 1 <= v <= n):
                    raise InputParseError(f"line {number}: vertex out of range 1..{n} in {line!r}")
                if u == v:
                    raise InputParseError(f"line {number}: self-loop at vertex {u}")
                edges.add((min(u, v) - 1, max(u, v) - 1))
            else:
                raise InputParseError(f"line {number}: unknown record {fields[0]!r}")
        if n is None:
            raise InputParseError("graph file has no 'n <count>' line")
        return SimpleGraph.from_edges(n, sorted(edges))

    @staticmethod
    def load(path) -> SimpleGraph:
        return GraphFileValidator.parse(_read(path))

    @staticmethod
    def resolve(spec: str) -> SimpleGraph:
        """Catalogue graph for names like C5 or petersen, otherwise the graph file at ``spec``"""
        graph = resolve_named_graph(spec)
        if graph is not None:
            return graph
        return GraphFileValidator.load(spec)


class WeightFileValidator:
    """Parses weight files: one weight per line (integer, p/q or decimal)"""

    @staticmethod
    def parse(text: str) -> WeightVector:
        values = []
        for number, line in _content_lines(text):
            fields = line.split()
            if len(fields) != 1:
                raise InputParseError(f"line {number}: expected a single weight, got {line!r}")
            token = fields[0]
            if token.startswith('-'):
                raise InputParseError(f"line {number}: weight must be non-negative, got {token}")
            if not WEIGHT_TOKEN.match(token):
                raise InputParseError(f"line {number}: not a weight: {token!r}")
            try:
                values.append(to_fraction(token))
            except GraphValidationError as e:
                raise InputParseError(f"line {number}: {e}", original_exception=e)
        if not values:
            raise InputParseError("weight file has no weights")
        if len(values) > MAX_VERTICES:
            raise InputParseError(f"at most {MAX_VERTICES} weights are supported, got {len(values)}")
        return WeightVector.of(values)

    @staticmethod
    def load(path) -> WeightVector:
        return WeightFileValidator.parse(_read(path))


class PatternValidator:
    """Resolves ``--forbid`` specs: K3..K8, C3..C12, P2..P12, petersen, file:<path>"""

    @staticmethod
    def parse(spec: str) -> ForbiddenPattern:
        spec = (spec or '').strip()
        if not spec:
            raise InputParseError("empty pattern spec")

        if spec.lower().startswith('file:'):
            path = spec[len('file:'):]
            h = GraphFileValidator.load(path)
            if h.edge_count == 0:
                raise InputParseError(f"forbidden graph in {path} has no edges")
            return ForbiddenPattern.general(h, Path(path).stem)

        clique = CLIQUE_SPEC.match(spec)
        graph = resolve_named_graph(spec)
        if graph is None:
            raise InputParseError(
                f"unknown pattern {spec!r}; expected K3..K8, C3..C12, P2..P12, petersen or file:<path>"
            )
        if clique:
            return ForbiddenPattern.clique(int(clique.group('size')))
        name = 'petersen' if spec.lower() == 'petersen' else spec.upper()
        return ForbiddenPattern.general(graph, name)
