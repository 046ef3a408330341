"""Exact arithmetic for Jordan-product-preserving matrix maps: reachability
certificates under x o y = (xy + yx)/2, and constructive classification of
the maps that preserve it (or its char-2-safe double, x <> y = xy + yx)."""

from .classifier import (
    CanonicalForm,
    ItemResult,
    OrientationSet,
    SuiteReport,
    classify,
    classify_rectangular,
    classify_with_report,
    forms_equivalent,
    preservation_suite,
)
from .counterexamples import (
    CounterexampleBundle,
    all_examples,
    block_embedding_example,
    char2_example,
    triangular_example,
)
from .errors import (
    InvariantViolation,
    JordanMapsError,
    NotJordanMultiplicative,
    UnsupportedInput,
    UnsupportedSize,
)
from .exact_fields import (
    Field,
    RingEndo,
    Scalar,
    endo_apply,
    endo_enumerate,
    field_make,
    galois_field,
    preset_field,
    prime_field,
    rational_field,
)
from .generation import (
    Certificate,
    LadderCoefficients,
    ReplayResult,
    certify_identity,
    ladder,
    p_sequence,
    reach_unit,
    replay,
    spread_units,
)
from .jordan_order import (
    IdempotentFamily,
    IdempotentRelations,
    idempotent_relations,
    jordan_le,
    jordan_perp,
    perp_complement,
    simultaneous_diagonalizer,
)
from .maps import (
    CIRC,
    DIAMOND,
    JordanMap,
    MultReport,
    Strategy,
    check_multiplicative,
    diamond_to_circ,
    eval_map,
)
from .matrices import (
    BOTH_ZERO,
    Mat,
    block_diag,
    is_idempotent,
    is_proportional,
    jordan_circ,
    jordan_diamond,
    mat_apply_endo,
    mat_identity,
    mat_inverse,
    mat_rank,
    mat_support,
    mat_transpose,
    mat_unit,
    mat_zero,
)

__version__ = "0.1.0"

__all__ = [
    "BOTH_ZERO",
    "CIRC",
    "CanonicalForm",
    "Certificate",
    "CounterexampleBundle",
    "DIAMOND",
    "Field",
    "IdempotentFamily",
    "IdempotentRelations",
    "InvariantViolation",
    "ItemResult",
    "JordanMap",
    "JordanMapsError",
    "LadderCoefficients",
    "Mat",
    "MultReport",
    "NotJordanMultiplicative",
    "OrientationSet",
    "ReplayResult",
    "RingEndo",
    "Scalar",
    "Strategy",
    "SuiteReport",
    "UnsupportedInput",
    "UnsupportedSize",
    "all_examples",
    "block_diag",
    "block_embedding_example",
    "certify_identity",
    "char2_example",
    "check_multiplicative",
    "classify",
    "classify_rectangular",
    "classify_with_report",
    "diamond_to_circ",
    "endo_apply",
    "endo_enumerate",
    "eval_map",
    "field_make",
    "forms_equivalent",
    "galois_field",
    "idempotent_relations",
    "is_idempotent",
    "is_proportional",
    "jordan_circ",
    "jordan_diamond",
    "jordan_le",
    "jordan_perp",
    "ladder",
    "mat_apply_endo",
    "mat_identity",
    "mat_inverse",
    "mat_rank",
    "mat_support",
    "mat_transpose",
    "mat_unit",
    "mat_zero",
    "p_sequence",
    "perp_complement",
    "preservation_suite",
    "preset_field",
    "prime_field",
    "rational_field",
    "reach_unit",
    "replay",
    "simultaneous_diagonalizer",
    "spread_units",
    "triangular_example",
    "__version__",
]
