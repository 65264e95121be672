"""Sum-free subsets of integer intervals and finite abelian groups.

Construct, verify, generate, enumerate and count sum-free sets at desk
scale: extremal classifications, exception sets, density formulas,
counting trends and maximal-set bounds.
"""

from .analysis import (
    DensityReport,
    StructureVerdict,
    WeightedDensityReport,
    coset_floor_check,
    decomposition_ratio,
    density_formula,
    density_report,
    even_order_leading_term,
    pair_maximal_groups,
    singleton_maximal_groups,
    structure_verdict,
    verify_index2_structure,
    weighted_density_check,
)
from .construct import (
    coset,
    extremal_intervals,
    lift_residues,
    middle_block,
    middle_third,
    odds,
    outer_bands,
    periodic_residues,
)
from .enumeration import (
    CountRecord,
    build_count_record,
    count_by_cardinality,
    count_maximal,
    count_sum_free,
    count_sum_free_sharded,
    count_two_wise,
    enumerate_maximal,
    enumerate_maximum,
    enumerate_naive,
    enumerate_sum_free,
)
from .errors import CapacityError, GenerationTimeout
from .generate import (
    ExtractionTrace,
    PrimePick,
    RandomGenConfig,
    extract_sum_free,
    find_dilator,
    find_prime,
    random_sum_free,
    residue_weights,
)
from .groups import (
    Element,
    GroupSpec,
    Subgroup,
    abelian_groups_of_order,
    generated_subgroup,
    group_from_json,
    index2_subgroups,
    make_group,
)
from .universe import (
    ElemSet,
    GroupUniverse,
    IntervalUniverse,
    Universe,
    count_schur_triples,
    is_a_free,
    is_difference_free,
    is_maximal_sum_free,
    is_sum_free,
    is_two_wise_sum_free,
)

__all__ = [
    "CapacityError",
    "CountRecord",
    "DensityReport",
    "ElemSet",
    "Element",
    "ExtractionTrace",
    "GenerationTimeout",
    "GroupSpec",
    "GroupUniverse",
    "IntervalUniverse",
    "PrimePick",
    "RandomGenConfig",
    "StructureVerdict",
    "Subgroup",
    "Universe",
    "WeightedDensityReport",
    "abelian_groups_of_order",
    "build_count_record",
    "coset",
    "coset_floor_check",
    "count_by_cardinality",
    "count_maximal",
    "count_schur_triples",
    "count_sum_free",
    "count_sum_free_sharded",
    "count_two_wise",
    "decomposition_ratio",
    "density_formula",
    "density_report",
    "enumerate_maximal",
    "enumerate_maximum",
    "enumerate_naive",
    "enumerate_sum_free",
    "even_order_leading_term",
    "extract_sum_free",
    "extremal_intervals",
    "find_dilator",
    "find_prime",
    "generated_subgroup",
    "group_from_json",
    "index2_subgroups",
    "is_a_free",
    "is_difference_free",
    "is_maximal_sum_free",
    "is_sum_free",
    "is_two_wise_sum_free",
    "lift_residues",
    "make_group",
    "middle_block",
    "middle_third",
    "odds",
    "outer_bands",
    "pair_maximal_groups",
    "periodic_residues",
    "random_sum_free",
    "residue_weights",
    "singleton_maximal_groups",
    "structure_verdict",
    "verify_index2_structure",
    "weighted_density_check",
]

__version__ = "0.1.0"
