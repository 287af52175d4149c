"""
Bitmask graph types.

A SimpleGraph stores one integer mask per vertex; bit u of row v is set iff uv is
an edge. Values are immutable: every builder returns a new graph.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from models.weights import WeightVector
from utils.error_handler import GraphValidationError

MAX_VERTICES = 64

Edge = Tuple[int, int]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on 1..64 vertices."""

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or not 1 <= self.n <= MAX_VERTICES:
            raise GraphValidationError(
                f"Vertex count must be between 1 and {MAX_VERTICES}, got {self.n!r}"
            )
        adj = tuple(self.adj)
        if len(adj) != self.n:
            raise GraphValidationError(f"Expected {self.n} adjacency rows, got {len(adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphValidationError(f"Row {v} has bits beyond vertex {self.n - 1}")
            if row >> v & 1:
                raise GraphValidationError(f"Self-loop at vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise GraphValidationError(f"Adjacency is not symmetric at ({v}, {u})")
        object.__setattr__(self, 'adj', adj)

    # builders

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "SimpleGraph":
        if not isinstance(n, int) or not 1 <= n <= MAX_VERTICES:
            raise GraphValidationError(
                f"Vertex count must be between 1 and {MAX_VERTICES}, got {n!r}"
            )
        rows: List[int] = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"Edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphValidationError(f"Self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def with_edge(self, u: int, v: int) -> "SimpleGraph":
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return SimpleGraph(self.n, tuple(rows))

    def without_edges(self, edges: Iterable[Edge]) -> "SimpleGraph":
        rows = list(self.adj)
        for u, v in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return SimpleGraph(self.n, tuple(rows))

    # queries

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> Tuple[int, ...]:
        return tuple(popcount(row) for row in self.adj)

    def edges(self) -> List[Edge]:
        """Edges (u, v) with u < v in lexicographic order"""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges_within(self, mask: int) -> List[Edge]:
        return [(u, v) for u in bits(mask) for v in bits(self.adj[u] & mask) if u < v]

    def relabeled(self, mapping: Sequence[int]) -> "SimpleGraph":
        """Graph with vertex v renamed to mapping[v]"""
        return SimpleGraph.from_edges(self.n, ((mapping[u], mapping[v]) for u, v in self.edges()))


@dataclass(frozen=True)
class WeightedGraph:
    """A SimpleGraph paired with one weight per vertex."""

    graph: SimpleGraph
    weights: WeightVector

    def __post_init__(self):
        if len(self.weights) != self.graph.n:
            raise GraphValidationError(
                f"Weight vector has {len(self.weights)} entries for a graph on {self.graph.n} vertices"
            )

    @property
    def n(self) -> int:
        return self.graph.n

    def with_weights(self, weights: WeightVector) -> "WeightedGraph":
        return WeightedGraph(self.graph, weights)
