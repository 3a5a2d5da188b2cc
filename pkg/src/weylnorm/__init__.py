"""Exact-arithmetic root systems of exceptional type, reduced decompositions
of co-rank one relative longest Weyl elements, and the symbolic
normalization-factor calculus over them."""

from .rootsystem import (
    Root, RootSystem, build_root_system, get_root_system, root_system_from_json,
)
from .weyl import (
    WeylElement, action_table, enumerate_weyl_group, inversion_set, length,
    longest_element, reduced_word_star, relative_element, relative_longest,
    simple_reflection,
)
from .decompose import (
    AlgorithmStep, DecompositionTrace, admissible_ways, run_algorithm,
    s_ab_partition, s_set, verify_properties_ABCD, verify_proposition,
)
from .normalization import (
    HOLOMORPHIC_VERIFIED, OBSTRUCTED, REQUIRES_REPRESENTATION_THEORY,
    FactorMultiset, FactorTable, LinearTerm, SteinbergDatum, check_main_theorem,
    check_main_theorem_twisted, discrepancy, factor_table, gcd_of_discrepancies,
    reduced_numerator, steinberg_datum,
)
from .reports import VerificationReport, run_paper_claims

__all__ = [
    "HOLOMORPHIC_VERIFIED", "OBSTRUCTED", "REQUIRES_REPRESENTATION_THEORY",
    "AlgorithmStep", "DecompositionTrace", "FactorMultiset", "FactorTable",
    "LinearTerm", "Root", "RootSystem", "SteinbergDatum", "VerificationReport",
    "WeylElement", "action_table", "admissible_ways", "build_root_system",
    "check_main_theorem", "check_main_theorem_twisted", "discrepancy",
    "enumerate_weyl_group", "factor_table", "gcd_of_discrepancies",
    "get_root_system", "inversion_set", "length", "longest_element",
    "reduced_numerator", "reduced_word_star", "relative_element",
    "relative_longest", "root_system_from_json", "run_algorithm", "run_paper_claims",
    "s_ab_partition", "s_set", "simple_reflection", "steinberg_datum",
    "verify_properties_ABCD", "verify_proposition",
]

__version__ = "0.1.0"
