"""
Value types for weighted Turán computations.
"""

from models.weights import WeightVector, to_fraction
from models.graph import SimpleGraph, WeightedGraph, MAX_VERTICES, bits, popcount, mask_of
from models.partition import Partition
from models.pattern import ForbiddenPattern, PatternKind
from models.objective import Objective

__all__ = [
    'WeightVector',
    'to_fraction',
    'SimpleGraph',
    'WeightedGraph',
    'MAX_VERTICES',
    'bits',
    'popcount',
    'mask_of',
    'Partition',
    'ForbiddenPattern',
    'PatternKind',
    'Objective',
]
