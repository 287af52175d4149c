# Named graph catalogue
# Small graphs accepted wherever a pattern or graph is expected, built with networkx

import re
from typing import Callable, Dict, Optional, Sequence

import networkx as nx

from models.graph import SimpleGraph

NAMED_PATTERN = re.compile(r'^(?P<family>[KCP])(?P<size>\d+)$', re.IGNORECASE | re.ASCII)

# family -> (min size, max size)
FAMILY_RANGES: Dict[str, tuple] = {
    "K": (3, 8),
    "C": (3, 12),
    "P": (2, 12),
}


def from_networkx(G: nx.Graph) -> SimpleGraph:
    """Bitmask copy of a networkx graph whose nodes are 0..n-1"""
    return SimpleGraph.from_edges(G.number_of_nodes(), G.edges())


def complete_graph(n: int) -> SimpleGraph:
    return from_networkx(nx.complete_graph(n))


def cycle_graph(n: int) -> SimpleGraph:
    return from_networkx(nx.cycle_graph(n))


def path_graph(n: int) -> SimpleGraph:
    """Path on n vertices (n - 1 edges)"""
    return from_networkx(nx.path_graph(n))


def petersen_graph() -> SimpleGraph:
    return from_networkx(nx.petersen_graph())


def star_graph(leaves: int) -> SimpleGraph:
    """Centre is vertex 0"""
    return from_networkx(nx.star_graph(leaves))


def complete_multipartite_graph(sizes: Sequence[int]) -> SimpleGraph:
    """Blocks are consecutive index ranges in the order given"""
    return from_networkx(nx.complete_multipartite_graph(*sizes))


def complete_bipartite_graph(a: int, b: int) -> SimpleGraph:
    return from_networkx(nx.complete_bipartite_graph(a, b))


FAMILIES: Dict[str, Callable[[int], SimpleGraph]] = {
    "K": complete_graph,
    "C": cycle_graph,
    "P": path_graph,
}


def resolve_named_graph(name: str) -> Optional[SimpleGraph]:
    """Graph for 'K3'..'K8', 'C3'..'C12', 'P2'..'P12' or 'petersen'; None if not a catalogue name."""
    name = name.strip()
    if name.lower() == "petersen":
        return petersen_graph()
    match = NAMED_PATTERN.match(name)
    if not match:
        return None
    family = match.group('family').upper()
    size = int(match.group('size'))
    low, high = FAMILY_RANGES[family]
    if not low <= size <= high:
        return None
    return FAMILIES[family](size)
