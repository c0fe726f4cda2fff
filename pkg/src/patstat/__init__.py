"""patstat: exact pattern-occurrence statistics in permutations and words.

Counts, inequality margins, variance/covariance leading coefficients and
extremal-pattern searches, all in exact integer/rational arithmetic, with
independent brute-force oracles for every closed form.
"""

from .errors import BudgetError, FitMismatchError, PatternError
from .exactmath import (
    BracketTable,
    binomial,
    brace,
    bracket,
    bracket_determinant,
    bracket_determinant_closed_form,
    bracket_table,
    factorial,
    multinomial,
    stirling2,
    superfactorial,
)
from .patterns import (
    PermPattern,
    SymmetryClass,
    WordPattern,
    count_word_patterns,
    enumerate_perm_patterns,
    enumerate_word_patterns,
    parse_pattern,
    symmetry_classes_of_pairs,
)
from .occur import (
    MomentReport,
    count_occurrences,
    exhaustive_moments_perm,
    exhaustive_moments_word,
    expectation_formula_perm,
    expectation_formula_word,
    sample_moments,
)
from .permineq import (
    CovarianceReport,
    ExtremalReport,
    InequalityReport,
    covariance_class_table,
    covariance_leading_coeff,
    cross_sum_perm,
    extremal_search,
    inequality_report,
    is_order_reversing,
    lhs_pair,
    lhs_perm,
    margin_perm,
    margin_ratio_table,
    normalized_lhs,
    normalized_rhs,
    rearrangement_lower_bound,
    rhs_perm,
    variance_leading_coeff,
    verify_no_order_reversal,
)
from .wordineq import (
    DecompositionCount,
    WordInequalityReport,
    cross_sum_word,
    f_function,
    h_function,
    lhs_word,
    margin_word,
    rhs_word,
    word_discriminant,
    word_extremal_search,
    word_inequality_report,
)
from .oracle import (
    ExactPolynomial,
    LatticePath,
    decomposition_count,
    decomposition_cross_count,
    enumerate_paths,
    fit_exact_polynomial,
    path_pair_lhs,
    paths_through,
)

__version__ = "0.1.0"
