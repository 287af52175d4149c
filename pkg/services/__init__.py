# Services module for weighted Turán computations

from services.extremal_service import (
    ExtremalService,
    extremal_service,
    ExtremalResult,
    SizeVector,
    enumerate_size_vectors,
    partition_sum_objective,
    build_complete_multipartite,
    optimal_sum_partition,
    optimal_bipartition_threshold,
    optimal_product_partition,
    upgrade_to_multipartite,
    solve_extremal,
    ex_sum,
    ex_product,
    erdos_stone_bound,
)
from services.stability_service import (
    StabilityService,
    stability_service,
    PeelResult,
    StabilityReport,
    weight_relabel,
    greedy_peel,
    verify_stability,
)
from services.oracle_service import (
    OracleService,
    oracle_service,
    OracleResult,
    CertificationReport,
    brute_force_ex,
    certify,
    leading_term_ratios,
    ratios_non_increasing,
)

__all__ = [
    'ExtremalService',
    'extremal_service',
    'ExtremalResult',
    'SizeVector',
    'enumerate_size_vectors',
    'partition_sum_objective',
    'build_complete_multipartite',
    'optimal_sum_partition',
    'optimal_bipartition_threshold',
    'optimal_product_partition',
    'upgrade_to_multipartite',
    'solve_extremal',
    'ex_sum',
    'ex_product',
    'erdos_stone_bound',
    'StabilityService',
    'stability_service',
    'PeelResult',
    'StabilityReport',
    'weight_relabel',
    'greedy_peel',
    'verify_stability',
    'OracleService',
    'oracle_service',
    'OracleResult',
    'CertificationReport',
    'brute_force_ex',
    'certify',
    'leading_term_ratios',
    'ratios_non_increasing',
]
