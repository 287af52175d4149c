"""
Ordered vertex partitions.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Tuple

from utils.error_handler import GraphValidationError


@dataclass(frozen=True)
class Partition:
    """Ordered disjoint blocks covering 0..n-1.

    Empty blocks are accepted on input and dropped. ``block_count_cap`` is the
    intended number of parts (l-1 for K_l, chi(H)-1 for a general pattern);
    None means uncapped.
    """

    blocks: Tuple[FrozenSet[int], ...]
    block_count_cap: Optional[int] = None

    def __post_init__(self):
        blocks = tuple(frozenset(block) for block in self.blocks if len(block) > 0)
        seen = set()
        for block in blocks:
            if seen & block:
                raise GraphValidationError(f"Blocks overlap on {sorted(seen & block)}")
            seen |= block
        if seen != set(range(len(seen))):
            raise GraphValidationError(
                f"Blocks must cover 0..{len(seen) - 1} exactly, got {sorted(seen)}"
            )
        if self.block_count_cap is not None and len(blocks) > self.block_count_cap:
            raise GraphValidationError(
                f"{len(blocks)} non-empty blocks exceed the cap of {self.block_count_cap}"
            )
        object.__setattr__(self, 'blocks', blocks)

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]], cap: Optional[int] = None) -> "Partition":
        return cls(tuple(frozenset(b) for b in blocks), cap)

    @property
    def n(self) -> int:
        return sum(len(block) for block in self.blocks)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(block) for block in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self) -> Tuple[int, ...]:
        """Block index of every vertex"""
        owner = [0] * self.n
        for index, block in enumerate(self.blocks):
            for v in block:
                owner[v] = index
        return tuple(owner)

    def canonical(self) -> Tuple[Tuple[int, ...], ...]:
        """Blocks as sorted tuples ordered by smallest member; order-free comparison key"""
        return tuple(sorted(tuple(sorted(block)) for block in self.blocks))

    def same_blocks(self, other: "Partition") -> bool:
        return self.canonical() == other.canonical()
