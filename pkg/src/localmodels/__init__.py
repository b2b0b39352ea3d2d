"""Combinatorics of local models: admissible sets in Iwahori-Weyl groups,
level-changing fibers, irreducible components and the quantum Bruhat graph.

Everything is exact integer arithmetic over split root data of types A-G.
"""

from .admissible import admissible_K, admissible_set, max_elements_min_reps, stratum
from .errors import DomainError, InternalInvariantError
from .fibers import fiber, fibers, hyperspecial_max_fast, max_in_coset, schubert_sweep, strata
from .finite_weyl import WeylElement, WeylGroup, bruhat_leq, coset_min, double_coset_reps, support
from .irreducibility import classify, component_reps, is_irreducible, supp_min_reps
from .iwahori_weyl import (
    AffineElement, AffineWeylGroup, acute_directions, aff_bruhat_leq, in_acute_cone,
    is_translation_min_rep, unique_conjugate_in_min_reps,
)
from .qbg import QBGraph, demazure, greedy_decomposition, max_wt_leq_oracle, wt, z_gamma
from .root_datum import CartanSpec, RootDatum, build_root_datum

__version__ = "0.1.0"

__all__ = [
    "CartanSpec", "RootDatum", "build_root_datum",
    "WeylElement", "WeylGroup", "bruhat_leq", "coset_min", "double_coset_reps", "support",
    "AffineElement", "AffineWeylGroup", "aff_bruhat_leq", "in_acute_cone", "acute_directions",
    "is_translation_min_rep", "unique_conjugate_in_min_reps",
    "admissible_set", "admissible_K", "max_elements_min_reps", "stratum",
    "QBGraph", "wt", "demazure", "greedy_decomposition", "z_gamma", "max_wt_leq_oracle",
    "component_reps", "is_irreducible", "supp_min_reps", "classify",
    "strata", "max_in_coset", "fiber", "fibers", "hyperspecial_max_fast", "schubert_sweep",
    "DomainError", "InternalInvariantError",
]
