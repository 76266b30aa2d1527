"""Outer parametrix, strong and near-curve asymptotics, and the Airy regime near z_1."""

from .branch import (
    BRANCH_FAMILIES,
    DELTA,
    ZERO_ANGLES,
    BranchTerms,
    branch_asym,
    branch_value,
    exp_ga_phi,
    h_tilde,
    predicted_zeros,
)
from .context import AsymptoticContext, FamilyTag, PointData, default_context
from .ntilde import det3, jump_P, jump_R, jump_residual, ntilde, ntilde_point, second_row
from .strong import (
    EXCLUDED_STRONG,
    TYPO_READINGS,
    curve_asym,
    curve_case,
    curve_value,
    strong_asym,
    strong_case,
    strong_value,
)

__all__ = [
    "BRANCH_FAMILIES", "DELTA", "EXCLUDED_STRONG", "TYPO_READINGS", "ZERO_ANGLES",
    "AsymptoticContext", "BranchTerms", "FamilyTag", "PointData", "branch_asym", "branch_value",
    "curve_asym", "curve_case", "curve_value", "default_context", "det3", "exp_ga_phi", "h_tilde",
    "jump_P", "jump_R", "jump_residual", "ntilde", "ntilde_point", "predicted_zeros", "second_row",
    "strong_asym", "strong_case", "strong_value",
]
