"""
Output helpers: exact rationals as "p/q" strings, 1-based vertex lists,
deterministic JSON and pandas-rendered tables.
"""

import json
from fractions import Fraction
from typing import Any, Iterable, List, Sequence, Tuple

import pandas as pd


def rational(value: Fraction) -> str:
    """Always "p/q", including integers ("416/1")"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def one_based_blocks(blocks: Iterable[Iterable[int]]) -> List[List[int]]:
    return [sorted(v + 1 for v in block) for block in blocks]


def one_based_edges(edges: Iterable[Tuple[int, int]]) -> List[List[int]]:
    return [[u + 1, v + 1] for u, v in edges]


def dump_json(payload: Any) -> str:
    """Stable JSON text: identical payloads give byte-identical output"""
    return json.dumps(payload, indent=2, ensure_ascii=False)


def render_table(rows: Sequence[dict], columns: Sequence[str] = None) -> str:
    if not rows:
        return "(no rows)"
    frame = pd.DataFrame(list(rows), columns=list(columns) if columns else None)
    return frame.to_string(index=False)
