"""
Product-weight partition solver.

Maximizing the sum over unordered block pairs of w(P) w(P') is the same as
minimizing the sum of squared block weights, because for block sums s_i with
total W:

    sum_{i<j} s_i s_j = (W^2 - sum_i s_i^2) / 2

The exact solver runs on integer weights (every weight times the lcm of the
denominators) and fixes one block per level: the block holding the heaviest
vertex not yet placed. Blocks are therefore opened in descending first-touch
order and each partition is reached once. Candidate blocks come from a
meet-in-the-middle join of subset sums, limited to sums whose balanced lower
bound still beats the incumbent, and are tried nearest to balance first. The
last two blocks are settled directly by the same join. LPT and multiway
Karmarkar-Karp partitions seed the incumbent, and the search stops as soon as
it reaches the perfectly balanced bound.
"""

import heapq
import logging
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt, lcm
from typing import List, Optional, Sequence, Tuple

from config import config
from models.weights import WeightVector
from utils.error_handler import EmptyWeights, InvalidArgument

logger = logging.getLogger(__name__)

ZERO = Fraction(0)

# (scaled weight, vertex)
Item = Tuple[int, int]


def product_pair_sum(sums: Sequence[Fraction]) -> Fraction:
    """Sum of s_i * s_j over unordered pairs i < j, computed pair by pair"""
    total = ZERO
    for i in range(len(sums)):
        for j in range(i + 1, len(sums)):
            total += sums[i] * sums[j]
    return total


def product_identity_value(sums: Sequence[Fraction]) -> Fraction:
    """(W^2 - sum of squares) / 2; equal to product_pair_sum for any sums"""
    total = sum(sums, ZERO)
    return (total * total - sum((s * s for s in sums), ZERO)) / 2


def _square_sum(sums: Sequence[Fraction]) -> Fraction:
    return sum((s * s for s in sums), ZERO)


def balanced_square_bound(total: int, parts: int) -> int:
    """Least sum of squares of ``parts`` non-negative integers adding up to ``total``"""
    q, r = divmod(total, parts)
    return r * (q + 1) * (q + 1) + (parts - r) * q * q


@dataclass
class ProductSolution:
    """Blocks of original vertex indices with their weight sums.

    ``history`` holds the block sums of every complete partition the solver
    held as its incumbent, seeds first.
    """
    blocks: List[List[int]]
    sums: List[Fraction]
    value: Fraction
    exact: bool
    explored: int = 0
    seed: str = ""
    history: List[List[Fraction]] = field(default_factory=list)


def _finish(blocks: List[List[int]], w: WeightVector, exact: bool, explored: int = 0,
            seed: str = "", history: Optional[List[List[Fraction]]] = None) -> ProductSolution:
    blocks = [sorted(block) for block in blocks if block]
    sums = [w.block_weight(block) for block in blocks]
    return ProductSolution(blocks, sums, product_identity_value(sums), exact, explored, seed,
                           history or [])


def lpt_partition(w: WeightVector, parts: int) -> List[List[int]]:
    """Longest-processing-time greedy: heaviest remaining vertex to the lightest block"""
    k = max(1, min(parts, w.n))
    blocks: List[List[int]] = [[] for _ in range(k)]
    sums = [ZERO] * k
    for v in w.descending_order():
        target = min(range(k), key=lambda b: (sums[b], b))
        blocks[target].append(v)
        sums[target] += w[v]
    return blocks


def karmarkar_karp_partition(w: WeightVector, parts: int) -> List[List[int]]:
    """Multiway largest-differencing method.

    Each vertex starts as a k-tuple with one occupied block. The two tuples
    with the largest spread are merged by pairing the heaviest block of one
    with the lightest of the other, until one tuple remains.
    """
    k = max(1, min(parts, w.n))
    heap: List[Tuple[Fraction, int, Tuple[Tuple[Fraction, Tuple[int, ...]], ...]]] = []
    counter = 0
    for v in w.descending_order():
        entry = ((w[v], (v,)),) + ((ZERO, ()),) * (k - 1)
        heapq.heappush(heap, (-w[v], counter, entry))
        counter += 1

    while len(heap) > 1:
        _, _, first = heapq.heappop(heap)
        _, _, second = heapq.heappop(heap)
        merged = [
            (s1 + s2, m1 + m2)
            for (s1, m1), (s2, m2) in zip(first, reversed(second))
        ]
        merged.sort(key=lambda block: -block[0])
        spread = merged[0][0] - merged[-1][0]
        heapq.heappush(heap, (-spread, counter, tuple(merged)))
        counter += 1

    _, _, final = heap[0]
    return [list(members) for _, members in final]


def _subset_sums(values: Sequence[int]) -> List[Tuple[int, int]]:
    """(sum, mask) for every subset of ``values``, sorted"""
    sums = [(0, 0)]
    for i, value in enumerate(values):
        bit = 1 << i
        sums += [(s + value, m | bit) for s, m in sums]
    sums.sort()
    return sums


def _split_by_mask(items: Sequence[Item], mask: int) -> Tuple[List[Item], List[Item]]:
    inside, outside = [], []
    for i, item in enumerate(items):
        (inside if mask >> i & 1 else outside).append(item)
    return inside, outside


class _ProductSearch:
    """Block-at-a-time branch-and-bound over integer weights"""

    def __init__(self, items: Sequence[Item], scale: int):
        self.value_of = {vertex: value for value, vertex in items}
        self.scale = scale
        self.explored = 0
        self.history: List[List[Fraction]] = []

    def _record(self, blocks: List[List[int]]) -> None:
        self.history.append([
            Fraction(sum(self.value_of[v] for v in block), self.scale) for block in blocks
        ])

    def solve(self, items: List[Item], k: int, bound: int,
              top: bool = False) -> Optional[Tuple[int, List[List[int]]]]:
        """Least (square sum, blocks) for ``items`` in at most k blocks, if below ``bound``.

        ``items`` must be in descending weight order.
        """
        self.explored += 1
        total = sum(value for value, _ in items)
        if k == 1 or len(items) <= 1:
            square = total * total
            return (square, [[v for _, v in items]]) if square < bound else None
        if len(items) <= k:
            # with non-negative weights splitting never adds to the square sum
            square = sum(value * value for value, _ in items)
            return (square, [[v] for _, v in items]) if square < bound else None
        if balanced_square_bound(total, k) >= bound:
            return None
        if k == 2:
            return self._split_two(items, total, bound, top)
        return self._split_first(items, total, k, bound, top)

    def _split_two(self, items: List[Item], total: int, bound: int,
                   top: bool) -> Optional[Tuple[int, List[List[int]]]]:
        """Best two-way split from the subset sums of each half, scanned against each other"""
        half = len(items) // 2
        left = _subset_sums([value for value, _ in items[:half]])
        left_sums = [s for s, _ in left]
        target = total // 2
        floor = balanced_square_bound(total, 2)
        best_mask = None
        for b, right_mask in _subset_sums([value for value, _ in items[half:]]):
            j = bisect_right(left_sums, target - b)
            for i in (j - 1, j):
                if not 0 <= i < len(left):
                    continue
                side = left[i][0] + b
                square = side * side + (total - side) * (total - side)
                if square < bound:
                    bound = square
                    best_mask = left[i][1] | (right_mask << half)
            if bound == floor:
                break
        if best_mask is None:
            return None
        inside, outside = _split_by_mask(items, best_mask)
        blocks = [[v for _, v in inside], [v for _, v in outside]]
        if top:
            self._record(blocks)
        return bound, blocks

    def _split_first(self, items: List[Item], total: int, k: int, bound: int,
                     top: bool) -> Optional[Tuple[int, List[List[int]]]]:
        """Fix the block of the heaviest item, then solve the rest with one block fewer"""
        head_value, head = items[0]
        others = items[1:]
        # real relaxation: s^2 + (total - s)^2 / (k - 1) < bound  <=>  (k s - total)^2 < slack
        slack = (k - 1) * (k * bound - total * total)
        if slack <= 0:
            return None
        radius = isqrt(slack)
        lo = -(-(total - radius) // k)
        hi = (total + radius) // k

        half = len(others) // 2
        left = _subset_sums([value for value, _ in others[:half]])
        right = _subset_sums([value for value, _ in others[half:]])
        right_sums = [s for s, _ in right]
        candidates = []
        for a, left_mask in left:
            base = head_value + a
            if base > hi:
                break
            start = bisect_left(right_sums, lo - base)
            stop = bisect_right(right_sums, hi - base)
            for b, right_mask in right[start:stop]:
                s = base + b
                candidates.append((abs(k * s - total), s, left_mask | (right_mask << half)))
        candidates.sort()

        floor = balanced_square_bound(total, k)
        tried = set()
        best = None
        for _, s, mask in candidates:
            first = s * s
            if first + balanced_square_bound(total - s, k - 1) >= bound:
                continue
            inside, rest = _split_by_mask(others, mask)
            # blocks with the same weight multiset lead to the same completions
            key = (s, tuple(value for value, _ in inside))
            if key in tried:
                continue
            tried.add(key)
            found = self.solve(rest, k - 1, bound - first)
            if found is None:
                continue
            bound = first + found[0]
            best = (bound, [[head] + [v for _, v in inside]] + found[1])
            if top:
                self._record(best[1])
            if bound == floor:
                break
        return best


def _scaled_items(w: WeightVector) -> Tuple[List[Item], int]:
    scale = lcm(*(x.denominator for x in w))
    return [(int(w[v] * scale), v) for v in w.descending_order()], scale


def solve_product_partition(w: WeightVector, parts: int, heuristic_only: bool = False,
                            exact_cap: Optional[int] = None) -> ProductSolution:
    """Partition into at most ``parts`` blocks maximizing the pairwise product sum.

    The better of the LPT and Karmarkar-Karp partitions seeds the incumbent.
    With ``heuristic_only`` that seed is returned without searching; above
    ``exact_cap`` vertices the exact search still runs but may take long.
    """
    if w.n == 0:
        raise EmptyWeights("Product partition needs at least one vertex")
    if parts < 1:
        raise InvalidArgument(f"Number of parts must be at least 1, got {parts}")
    exact_cap = config.solver.product_exact_cap if exact_cap is None else exact_cap
    k = min(parts, w.n)

    seeds = [
        ("lpt", lpt_partition(w, k)),
        ("karmarkar-karp", karmarkar_karp_partition(w, k)),
    ]
    history = [[w.block_weight(b) for b in blocks] for _, blocks in seeds]
    seed_name, seed_blocks = min(
        seeds, key=lambda c: _square_sum([w.block_weight(b) for b in c[1]])
    )
    logger.info(f"product seed from {seed_name} for n={w.n}, parts={k}")
    if heuristic_only:
        return _finish(seed_blocks, w, exact=False, seed=seed_name, history=history)
    if w.n > exact_cap:
        logger.warning(f"n={w.n} exceeds the exact cap {exact_cap}; exact search may be slow")

    items, scale = _scaled_items(w)
    search = _ProductSearch(items, scale)
    seed_square = sum(int(w.block_weight(b) * scale) ** 2 for b in seed_blocks)
    found = search.solve(items, k, seed_square, top=True)
    blocks = seed_blocks if found is None else found[1]
    history.extend(search.history)
    logger.debug(f"product search explored {search.explored} nodes")
    return _finish(blocks, w, exact=True, explored=search.explored, seed=seed_name,
                   history=history)
