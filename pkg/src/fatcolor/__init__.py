"""Exact solver and verification toolkit for Fair-and-Tolerant (FAT) graph colorings."""

from .coloring import (
    Coloring,
    FatColoring,
    Rejection,
    canonicalize,
    is_coarser,
    is_proper,
    merge,
    verify_fat,
)
from .families import FamilySpec, generate, known_chi_fat
from .graph import Graph, edges_between, from_edge_list, neighbor_count, structure_report, volume
from .oracle import brute_force_oracle
from .poset import ColoringPoset, feasible_report, irreducibles, poset
from .solver import (
    BudgetExhausted,
    ChiFatResult,
    SearchBudget,
    alpha_zero_colorings,
    candidate_alphas,
    chi_fat,
    enumerate_all,
    solve_fixed,
)
from .spectral import (
    build_matrices,
    check_fat_spectral,
    eigenfunction_check,
    max_nl_multiplicity,
    nl_multiplicity,
    regular_shadow,
)

__version__ = "0.1.0"
