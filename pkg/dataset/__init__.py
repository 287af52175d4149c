# Dataset module initialization
# Named graphs and seeded random inputs

from .named_graphs import (
    from_networkx,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    star_graph,
    complete_bipartite_graph,
    complete_multipartite_graph,
    resolve_named_graph,
)
from .generators import make_rng, random_weights, random_partite_graph, random_complete_multipartite

__all__ = [
    'from_networkx',
    'complete_graph',
    'cycle_graph',
    'path_graph',
    'petersen_graph',
    'star_graph',
    'complete_bipartite_graph',
    'complete_multipartite_graph',
    'resolve_named_graph',
    'make_rng',
    'random_weights',
    'random_partite_graph',
    'random_complete_multipartite',
]
