"""
Forbidden subgraph patterns.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from models.graph import SimpleGraph
from utils.error_handler import GraphValidationError, InvalidArgument


class PatternKind(Enum):
    CLIQUE = "clique"
    GENERAL = "general"


@dataclass(frozen=True)
class ForbiddenPattern:
    """Either the clique K_l or an arbitrary graph H with at least one edge."""

    kind: PatternKind
    clique_size: Optional[int] = None
    graph: Optional[SimpleGraph] = None
    name: str = ""

    def __post_init__(self):
        if self.kind is PatternKind.CLIQUE:
            if not isinstance(self.clique_size, int) or self.clique_size < 2:
                raise InvalidArgument(f"Clique size must be at least 2, got {self.clique_size!r}")
            if not self.name:
                object.__setattr__(self, 'name', f"K{self.clique_size}")
        else:
            if self.graph is None:
                raise GraphValidationError("General pattern needs a graph")
            if self.graph.edge_count == 0:
                raise GraphValidationError("Forbidden graph must have at least one edge")
            if not self.name:
                object.__setattr__(self, 'name', f"H{self.graph.n}")

    @classmethod
    def clique(cls, l: int) -> "ForbiddenPattern":
        return cls(PatternKind.CLIQUE, clique_size=l)

    @classmethod
    def general(cls, h: SimpleGraph, name: str = "") -> "ForbiddenPattern":
        return cls(PatternKind.GENERAL, graph=h, name=name)

    @property
    def is_clique(self) -> bool:
        return self.kind is PatternKind.CLIQUE

    def as_graph(self) -> SimpleGraph:
        if self.is_clique:
            return SimpleGraph.complete(self.clique_size)
        return self.graph

    def as_general(self) -> "ForbiddenPattern":
        """The same pattern seen as an arbitrary graph (cliques included)"""
        if not self.is_clique:
            return self
        return ForbiddenPattern.general(self.as_graph(), self.name)

    @property
    def vertex_count(self) -> int:
        return self.clique_size if self.is_clique else self.graph.n
