"""
Structure detection on bitmask graphs: cliques, subgraph embeddings,
complete multipartite recognition and exact chromatic number of small patterns.

The raw-adjacency helpers (``has_clique_within``, ``closes_clique``,
``embeds_through_edge``) take a plain sequence of row masks so the oracle can
call them on a mutable working graph without rebuilding SimpleGraph values.
"""

import logging
from typing import Dict, List, Optional, Sequence

from config import config
from models.graph import SimpleGraph, bits, popcount
from models.partition import Partition
from models.pattern import ForbiddenPattern
from utils.error_handler import InvalidArgument, PatternTooLarge

logger = logging.getLogger(__name__)


# Cliques

def has_clique_within(adj: Sequence[int], mask: int, k: int) -> bool:
    """True iff the vertices of mask contain k pairwise adjacent vertices."""
    if k <= 0:
        return True
    if popcount(mask) < k:
        return False
    if k == 1:
        return True
    while mask:
        low = mask & -mask
        v = low.bit_length() - 1
        mask ^= low
        # only higher-indexed vertices remain, so each clique is seen once
        if popcount(mask) < k - 1:
            return False
        if has_clique_within(adj, mask & adj[v], k - 1):
            return True
    return False


def closes_clique(adj: Sequence[int], u: int, v: int, l: int) -> bool:
    """Whether adding edge uv to adj would create a K_l through that edge."""
    return has_clique_within(adj, adj[u] & adj[v], l - 2)


def contains_clique(g: SimpleGraph, l: int) -> bool:
    if l < 2:
        raise InvalidArgument(f"Clique size must be at least 2, got {l}")
    return has_clique_within(g.adj, g.full_mask, l)


# Subgraph embedding

def _embedding_order(h: SimpleGraph, seed: Sequence[int]) -> List[int]:
    """Pattern vertices ordered so each one touches as many placed vertices as possible."""
    order = list(seed)
    placed = 0
    for v in seed:
        placed |= 1 << v
    remaining = [v for v in range(h.n) if not placed >> v & 1]
    while remaining:
        v = max(remaining, key=lambda x: (popcount(h.adj[x] & placed), popcount(h.adj[x]), -x))
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def _extend(g_adj: Sequence[int], g_full: int, h: SimpleGraph, order: List[int],
            pos: int, image: List[int], used: int) -> bool:
    if pos == len(order):
        return True
    hv = order[pos]
    need = popcount(h.adj[hv])
    candidates = g_full & ~used
    for p in bits(h.adj[hv]):
        if image[p] >= 0:
            candidates &= g_adj[image[p]]
    for gv in bits(candidates):
        if popcount(g_adj[gv]) < need:
            continue
        image[hv] = gv
        if _extend(g_adj, g_full, h, order, pos + 1, image, used | (1 << gv)):
            return True
    image[hv] = -1
    return False


def _embeds(g_adj: Sequence[int], g_n: int, h: SimpleGraph, fixed: Dict[int, int]) -> bool:
    """Injective edge-preserving map of h into g extending the partial map fixed."""
    if h.n > g_n:
        return False
    image = [-1] * h.n
    used = 0
    for hv, gv in fixed.items():
        if used >> gv & 1 or popcount(g_adj[gv]) < popcount(h.adj[hv]):
            return False
        image[hv] = gv
        used |= 1 << gv
    for hv, gv in fixed.items():
        for p in bits(h.adj[hv]):
            if image[p] >= 0 and not g_adj[gv] >> image[p] & 1:
                return False
    order = _embedding_order(h, list(fixed))
    return _extend(g_adj, (1 << g_n) - 1, h, order, len(fixed), image, used)


def contains_subgraph(g: SimpleGraph, h: SimpleGraph) -> bool:
    """Non-induced subgraph containment of h in g."""
    if h.n > g.n or h.edge_count > g.edge_count:
        return False
    return _embeds(g.adj, g.n, h, {})


def embeds_through_edge(g_adj: Sequence[int], g_n: int, h: SimpleGraph, u: int, v: int) -> bool:
    """Whether some copy of h in g uses the edge uv (which must be present in g_adj)."""
    for a, b in h.edges():
        if _embeds(g_adj, g_n, h, {a: u, b: v}) or _embeds(g_adj, g_n, h, {a: v, b: u}):
            return True
    return False


def contains_subgraph_through_edge(g: SimpleGraph, h: SimpleGraph, u: int, v: int) -> bool:
    if not g.has_edge(u, v):
        raise InvalidArgument(f"({u}, {v}) is not an edge of the host graph")
    return embeds_through_edge(g.adj, g.n, h, u, v)


def contains_pattern(g: SimpleGraph, pattern: ForbiddenPattern) -> bool:
    if pattern.is_clique:
        return contains_clique(g, pattern.clique_size)
    return contains_subgraph(g, pattern.graph)


# Multipartite structure

def complete_multipartite_structure(g: SimpleGraph) -> Optional[Partition]:
    """Non-adjacency classes of g if g is complete multipartite, else None.

    g is complete multipartite iff "equal or non-adjacent" is an equivalence
    relation; each vertex's class is itself plus its non-neighbours.
    """
    full = g.full_mask
    classes = []
    covered = 0
    for v in range(g.n):
        cls = full & ~g.adj[v]
        for u in bits(cls):
            if full & ~g.adj[u] != cls:
                return None
        if not covered >> v & 1:
            classes.append(cls)
            covered |= cls
    return Partition.of((list(bits(c)) for c in classes), cap=len(classes))


# Chromatic number

def _colorable(h: SimpleGraph, order: List[int], k: int) -> bool:
    colors = [-1] * h.n

    def assign(pos: int, highest: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        taken = {colors[u] for u in bits(h.adj[v]) if colors[u] >= 0}
        # a fresh colour is only tried once: colours are interchangeable
        for c in range(min(highest + 2, k)):
            if c in taken:
                continue
            colors[v] = c
            if assign(pos + 1, max(highest, c)):
                return True
        colors[v] = -1
        return False

    return assign(0, -1)


def chromatic_number(h: SimpleGraph, cap: Optional[int] = None) -> int:
    """Exact chromatic number by iterative deepening over k."""
    cap = config.solver.chromatic_cap if cap is None else cap
    if h.n > cap:
        raise PatternTooLarge(
            f"Chromatic number search is capped at {cap} vertices, pattern has {h.n}",
            details={"n": h.n, "cap": cap},
        )
    if h.edge_count == 0:
        return 1
    order = sorted(range(h.n), key=lambda v: (-h.degree(v), v))
    for k in range(2, h.n + 1):
        if _colorable(h, order, k):
            logger.debug(f"chromatic number {k} for pattern on {h.n} vertices")
            return k
    return h.n


def pattern_chromatic_number(pattern: ForbiddenPattern) -> int:
    if pattern.is_clique:
        return pattern.clique_size
    return chromatic_number(pattern.graph)
