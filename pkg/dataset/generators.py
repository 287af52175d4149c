"""
Seeded random inputs for randomized checks and the CLI.

All generators take a ``numpy.random.Generator`` so a single seed reproduces a
whole run.
"""

from typing import Tuple

import numpy as np

from models.graph import SimpleGraph
from models.partition import Partition
from models.weights import WeightVector


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_weights(rng: np.random.Generator, n: int, low: int = 0, high: int = 100) -> WeightVector:
    """n integer weights drawn uniformly from [low, high]"""
    return WeightVector.of(int(x) for x in rng.integers(low, high + 1, size=n))


def random_blocks(rng: np.random.Generator, n: int, parts: int) -> Partition:
    """Random assignment of vertices to at most ``parts`` blocks"""
    owner = rng.integers(0, parts, size=n)
    return Partition.of([[v for v in range(n) if owner[v] == b] for b in range(parts)], cap=parts)


def random_partite_graph(rng: np.random.Generator, n: int, parts: int,
                         keep_probability: float = 0.7) -> Tuple[SimpleGraph, Partition]:
    """A random ``parts``-partite graph: cross-block edges kept independently.

    The result is K_{parts+1}-free. Returns the graph and the block partition
    that generated it.
    """
    blocks = random_blocks(rng, n, parts)
    owner = blocks.block_of()
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if owner[u] != owner[v] and rng.random() < keep_probability:
                edges.append((u, v))
    return SimpleGraph.from_edges(n, edges), blocks


def random_complete_multipartite(rng: np.random.Generator, n: int,
                                 parts: int) -> Tuple[SimpleGraph, Partition]:
    return random_partite_graph(rng, n, parts, keep_probability=1.0)
