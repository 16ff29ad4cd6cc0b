"""Identifiers of the published results cited in traces and diagnostics.

These strings are part of the report format; downstream tools match on
them, so they must not change between releases.
"""

MAIN_THEOREM = "Thm 1.1"
GEOMETRIC_COROLLARY = "Cor 1.2"
CRYSTALLOGRAPHIC = "Lemma 2.1(3)"
ACYLINDRICAL_BOUND = "Cor 4.8"
PRIME_SUM_BOUNDS = "Thm 4.9"
SPHERICAL_SEIFERT = "Prop 5.3"
HYPERBOLIC_BASE_SEIFERT = "Prop 5.5"
EUCLIDEAN_BASE_SEIFERT = "Prop 5.6"
BOUNDED_BASE = "Lemma 5.9"
BOUNDED_EUCLIDEAN_PIECE = "Prop 5.10"
BOUNDED_HYPERBOLIC_PIECE = "Prop 5.11"
HYPERBOLIC = "Prop 6.1"
TRIVIAL_PIECE = "Lemma 7.1"
TORUS_BUNDLE = "Prop 7.2"
DOUBLE_OF_K = "Prop 7.3"
EXCLUDED_PIECES = "Cor 7.4"
JSJ_REDUCTION = "Thm 8.1"
ACYLINDRICITY = "Prop 8.2"
MATCHING_FIBERS = "Prop 8.2(e)"
K_EIGEN_SLOPE = "Prop 8.2(f)"
NON_GEOMETRIC_PRIME = "Prop 9.1"
CLOSED_TABLE = "Table 1"
PIECE_TABLE = "Table 2"

# Every JSJ diagnostic cites exactly one of these.
JSJ_RULES = frozenset({
    BOUNDED_BASE, TRIVIAL_PIECE, DOUBLE_OF_K, EXCLUDED_PIECES, MATCHING_FIBERS, K_EIGEN_SLOPE,
})
