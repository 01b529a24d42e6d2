"""Hilbert functions, Betti tables and regularity of standard determinantal
schemes from their degree matrices, and h-vectors of the arithmetically
Gorenstein divisors in |mH - K| on them. All arithmetic is exact."""

from .chains import Chain, KPolynomial, enumerate_chains, enumerate_raw, k_polynomial
from .degmatrix import (
    DegreeMatrix,
    ShiftPair,
    canonicalize,
    from_shifts,
    is_canonical,
    is_irreducible_admissible,
    is_reduced_admissible,
    is_smooth_admissible,
    shifts,
    validate,
)
from .errors import *  # noqa: F401,F403
from .exactpoly import HVector, IntPoly, binom_comb, binom_poly, difference, divide_exact
from .gorenstein import (
    AGHVector,
    ag_from_degree_matrix,
    ag_h_vector_general,
    ag_h_vector_piecewise,
    full_hilbert_function_Y,
    verify_decreasing_type,
    verify_symmetry,
)
from .hilbert import (
    BettiTable,
    HilbertSummary,
    betti_table,
    degree_trace_formula,
    h_vector,
    hilbert_function,
    reg_index,
    regularity_closed,
    regularity_max,
    summarize,
)

__version__ = "0.1.0"
