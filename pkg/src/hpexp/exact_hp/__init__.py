"""Exact Hermite-Pade approximants to exp and the matrix X built from them."""

from .construct import (
    Type1Triple,
    Type2Triple,
    contact_order,
    remainder_series,
    type1_construct,
    type1_order_matrix,
    type1_remainder_series,
    type2_construct,
    type2_order_matrix,
)
from .scaled import (
    ScaledFamily,
    XMatrixEvaluator,
    assemble_X,
    det3,
    det_identity,
    ell,
    x_row_indices,
    evaluate_X,
    jump_matrix,
    remainder_precision,
    scale_family,
)
from .serialize import family_from_json, family_to_json, triple_from_json, triple_to_json

__all__ = [
    "ScaledFamily",
    "Type1Triple",
    "Type2Triple",
    "XMatrixEvaluator",
    "assemble_X",
    "contact_order",
    "det3",
    "det_identity",
    "ell",
    "evaluate_X",
    "family_from_json",
    "family_to_json",
    "jump_matrix",
    "remainder_precision",
    "remainder_series",
    "scale_family",
    "triple_from_json",
    "triple_to_json",
    "type1_construct",
    "type1_order_matrix",
    "type1_remainder_series",
    "type2_construct",
    "type2_order_matrix",
    "x_row_indices",
]
