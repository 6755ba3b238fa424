"""Genus one partitions and permutations: structure, reduction and counting."""
from .count import CountTable, binom, formula_table, full_count, j_count, narayana, reduced_count, totals
from .errors import DomainError, GenusOneError, NotationError
from .fourcolor import (
    Classification,
    ColoredPartition,
    ColoringPoints,
    SeparatingPoints,
    colored_genus_classify,
    coloring_to_separating,
    find_separating,
    induced_representation,
    is_separating,
    phi_map,
    phi_of_coloring,
    separating_points_of,
    separating_to_coloring,
    theta_of_separating,
)
from .oracle import ClassKey, brute_table, enumerate_permutations, extension_count, verify_suite
from .perm import (
    Cycle,
    Genus1Type,
    Permutation,
    TwistClass,
    back_points,
    classify_genus1,
    compose,
    cycle_decomposition,
    genus,
    hypermap_genus,
    identity,
    inverse,
    kreweras,
    num_cycles,
    parse_cycles,
    parse_permutation,
    transposition,
    twist_class,
    zeta,
)
from .reduce import (
    ReductionTrace,
    TrivialCycle,
    canonical_properties,
    canonical_representation,
    canonical_separating,
    is_reduced,
    reduce_fully,
    reduce_once,
    removable_cycles,
    split_at,
    trivial_cycles,
)
from .series import (
    BivariateSeries,
    coefficient,
    divide,
    expand_named,
    inv_sqrt,
    lift_reduced_to_full,
    partial_x,
    solve_D,
    substitute_x,
)
from .setpart import (
    SetPartition,
    enumerate_set_partitions,
    from_permutation,
    genus_of_partition,
    is_noncrossing,
    kreweras_dual,
    parse_partition,
    to_permutation,
)

__all__ = [
    "back_points",
    "binom",
    "BivariateSeries",
    "brute_table",
    "canonical_properties",
    "canonical_representation",
    "canonical_separating",
    "Classification",
    "classify_genus1",
    "ClassKey",
    "coefficient",
    "colored_genus_classify",
    "ColoredPartition",
    "coloring_to_separating",
    "ColoringPoints",
    "compose",
    "CountTable",
    "Cycle",
    "cycle_decomposition",
    "divide",
    "DomainError",
    "enumerate_permutations",
    "enumerate_set_partitions",
    "expand_named",
    "extension_count",
    "find_separating",
    "formula_table",
    "from_permutation",
    "full_count",
    "genus",
    "Genus1Type",
    "genus_of_partition",
    "GenusOneError",
    "hypermap_genus",
    "identity",
    "induced_representation",
    "inv_sqrt",
    "inverse",
    "is_noncrossing",
    "is_reduced",
    "is_separating",
    "j_count",
    "kreweras",
    "kreweras_dual",
    "lift_reduced_to_full",
    "narayana",
    "NotationError",
    "num_cycles",
    "parse_cycles",
    "parse_partition",
    "parse_permutation",
    "partial_x",
    "Permutation",
    "phi_map",
    "phi_of_coloring",
    "reduce_fully",
    "reduce_once",
    "reduced_count",
    "ReductionTrace",
    "removable_cycles",
    "separating_points_of",
    "separating_to_coloring",
    "SeparatingPoints",
    "SetPartition",
    "solve_D",
    "split_at",
    "substitute_x",
    "theta_of_separating",
    "to_permutation",
    "totals",
    "transposition",
    "trivial_cycles",
    "TrivialCycle",
    "twist_class",
    "TwistClass",
    "verify_suite",
    "zeta",
]

__version__ = "0.1.0"
