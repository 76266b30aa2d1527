"""Zero finding, exact-versus-asymptotic comparisons and the acceptance suite."""

from .acceptance import CRITERIA, CriterionResult, run_acceptance, run_check, zero_law
from .compare import ComparisonRecord, ComparisonReport, RegionMismatch, exact_value, run_comparison, typo_verdict
from .zeros import family_zeros, nearest_zeros, remainder_newton, remainder_zero_count, scaled_polynomial

__all__ = [
    "CRITERIA", "ComparisonRecord", "ComparisonReport", "CriterionResult", "RegionMismatch",
    "exact_value", "family_zeros", "nearest_zeros", "remainder_newton", "remainder_zero_count",
    "run_acceptance", "run_check", "run_comparison", "scaled_polynomial", "typo_verdict", "zero_law",
]
