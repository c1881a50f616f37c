"""Additive prime decompositions over the rational and Gaussian
integers: exact arithmetic, prime machinery, constructive solvers for
prime-column matrix systems, representability scans, and the reference
tables."""

from .diophantine import (
    BoundExceeded,
    SolutionMatrix,
    SystemKind,
    brute_force_matrices,
    brute_force_matrix,
    solve_four_columns,
    solve_min_columns,
    solve_square_columns,
)
from .gaussdecomp import (
    BaseCaseError,
    Decomposition,
    NormPolicy,
    ObstructionReport,
    ScanReport,
    box_targets,
    extend_with_inert,
    find_decomposition,
    four_term_decompose,
    obstruction_line_report,
    region_targets,
    scan_box,
    scan_representability,
    scan_targets,
    verify_decomposition,
    verify_diagonal_obstruction,
)
from .golden import (
    GoldenRow,
    GoldenValidation,
    RegenReport,
    load_golden,
    regenerate_tables,
    validate_golden,
)
from .primes import (
    PrimeClass,
    PrimeTable,
    classify_gaussian_prime,
    ensure_table,
    gaussian_primes_in,
    is_gaussian_prime,
    is_rational_prime,
    sector_gap_stats,
    two_squares,
)
from .ratdecomp import (
    HYPOTHESES,
    ChainResult,
    HypothesisReport,
    HypothesisSpec,
    HypothesisViolation,
    SearchExhausted,
    four_odd_primes,
    goldbach_pair,
    hypothesis_scan,
    min_odd_prime_terms,
    residue34_chain,
    split_into_odd_primes,
    split_into_residue34_primes,
)
from .zcore import (
    GaussianInt,
    Parity,
    Region,
    Unit,
    associates,
    congruent_mod_one_plus_i,
    in_region,
    parity,
    sector_associate,
    sector_form,
)

__version__ = "0.1.0"

__all__ = [
    "BaseCaseError",
    "BoundExceeded",
    "ChainResult",
    "Decomposition",
    "GaussianInt",
    "GoldenRow",
    "GoldenValidation",
    "HYPOTHESES",
    "HypothesisReport",
    "HypothesisSpec",
    "HypothesisViolation",
    "NormPolicy",
    "ObstructionReport",
    "Parity",
    "PrimeClass",
    "PrimeTable",
    "RegenReport",
    "Region",
    "ScanReport",
    "SearchExhausted",
    "SolutionMatrix",
    "SystemKind",
    "Unit",
    "associates",
    "box_targets",
    "brute_force_matrices",
    "brute_force_matrix",
    "classify_gaussian_prime",
    "congruent_mod_one_plus_i",
    "ensure_table",
    "extend_with_inert",
    "find_decomposition",
    "four_odd_primes",
    "four_term_decompose",
    "gaussian_primes_in",
    "goldbach_pair",
    "hypothesis_scan",
    "in_region",
    "is_gaussian_prime",
    "is_rational_prime",
    "load_golden",
    "min_odd_prime_terms",
    "obstruction_line_report",
    "parity",
    "regenerate_tables",
    "region_targets",
    "residue34_chain",
    "scan_box",
    "scan_representability",
    "scan_targets",
    "sector_associate",
    "sector_form",
    "sector_gap_stats",
    "solve_four_columns",
    "solve_min_columns",
    "solve_square_columns",
    "split_into_odd_primes",
    "split_into_residue34_primes",
    "two_squares",
    "validate_golden",
    "verify_decomposition",
    "verify_diagonal_obstruction",
    "__version__",
]
