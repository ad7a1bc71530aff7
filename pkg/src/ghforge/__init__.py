"""Generalized Hadamard matrices over additive groups of finite fields:
exact GF(p^n) arithmetic, the block constructions, and an independent
brute-force verifier.
"""

from .constructions import (
    DEFAULT_MAX_ORDER,
    PROVENANCE_CIRCULANT,
    PROVENANCE_CUBIC,
    PROVENANCE_EXTERNAL,
    PROVENANCE_LINEAR,
    PROVENANCE_QUADRATIC,
    GHMatrix,
    circulant,
    gh_cubic,
    gh_linear,
    gh_quadratic,
    max_order,
)
from .field import MAX_FIELD_ORDER, Field, FieldElement
from .functions import (
    ENUMERATION_LIMIT,
    FieldFunction,
    FunctionClass,
    FunctionCounts,
    classify_function,
    classify_functions,
    is_planar,
    is_type_ii,
    linear_family,
    quadratic_family,
)
from .matrix_io import (
    FORMAT_VERSION,
    MatrixFormatError,
    matrix_to_text,
    read_matrix,
    render_pretty,
    write_matrix,
)
from .verifier import PairFailure, VerificationReport, row_pair_histogram, verify_gh

__all__ = [
    "DEFAULT_MAX_ORDER",
    "ENUMERATION_LIMIT",
    "FORMAT_VERSION",
    "Field",
    "FieldElement",
    "FieldFunction",
    "FunctionClass",
    "FunctionCounts",
    "GHMatrix",
    "MAX_FIELD_ORDER",
    "MatrixFormatError",
    "PairFailure",
    "PROVENANCE_CIRCULANT",
    "PROVENANCE_CUBIC",
    "PROVENANCE_EXTERNAL",
    "PROVENANCE_LINEAR",
    "PROVENANCE_QUADRATIC",
    "VerificationReport",
    "circulant",
    "classify_function",
    "classify_functions",
    "gh_cubic",
    "gh_linear",
    "gh_quadratic",
    "is_planar",
    "is_type_ii",
    "linear_family",
    "matrix_to_text",
    "max_order",
    "quadratic_family",
    "read_matrix",
    "render_pretty",
    "row_pair_histogram",
    "verify_gh",
    "write_matrix",
]

__version__ = "0.1.0"
