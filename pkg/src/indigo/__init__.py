"""Indigenous semirings: exact saturating counting arithmetic and its structure theory."""

from .core import (
    LAW_CHECK_BOUND,
    MANY,
    ZERO,
    BoundExceededError,
    ContextMismatchError,
    Elem,
    LawReport,
    SemiringCtx,
    fin,
    verify_laws,
)
from .graphs import (
    EXACT_SEARCH_BOUND,
    INFINITE,
    GraphInvariants,
    IndigenousGraph,
    build_graph,
    chromatic_number,
    clique_number,
    diameter,
    girth,
    invariants,
)
from .ideals import (
    IDEAL_ENUM_BOUND,
    Ideal,
    IdealSemiring,
    LocalizedSemiring,
    SpectrumView,
    enumerate_ideals,
    ideal_generated,
    ideal_product,
    ideal_semiring,
    ideal_sum,
    is_maximal,
    is_prime,
    is_subtractive,
    localize,
    nilpotency_index,
    radical,
    spectrum,
)
from .series import (
    NEG_INFINITY,
    ORACLE_BOUND,
    Poly,
    TruncSeries,
    factorization_oracle,
    idempotent_series_from_generators,
    make_poly,
    make_series,
    parse_poly,
    quadratic,
    quadratic_irreducible,
    ts_is_idempotent_window,
)

__version__ = "0.1.0"

__all__ = [
    "BoundExceededError",
    "ContextMismatchError",
    "Elem",
    "EXACT_SEARCH_BOUND",
    "GraphInvariants",
    "IDEAL_ENUM_BOUND",
    "INFINITE",
    "Ideal",
    "IdealSemiring",
    "IndigenousGraph",
    "LAW_CHECK_BOUND",
    "LawReport",
    "LocalizedSemiring",
    "MANY",
    "NEG_INFINITY",
    "ORACLE_BOUND",
    "Poly",
    "SemiringCtx",
    "SpectrumView",
    "TruncSeries",
    "ZERO",
    "build_graph",
    "chromatic_number",
    "clique_number",
    "diameter",
    "enumerate_ideals",
    "factorization_oracle",
    "fin",
    "girth",
    "ideal_generated",
    "ideal_product",
    "ideal_semiring",
    "ideal_sum",
    "idempotent_series_from_generators",
    "invariants",
    "is_maximal",
    "is_prime",
    "is_subtractive",
    "localize",
    "make_poly",
    "make_series",
    "nilpotency_index",
    "parse_poly",
    "quadratic",
    "quadratic_irreducible",
    "radical",
    "spectrum",
    "ts_is_idempotent_window",
    "verify_laws",
]
