"""Measures on the traced curves, their logarithmic potentials, phi_P, phi_R and f_1."""

from .closed import exp_2phi, exp_g_A, exp_g_B, exp_g_C, exp_g_P, exp_g_R
from .gfun import G_MEASURES, g_boundary, g_of, g_value
from .measures import EXPECTED_MASS, SUPPORTS, CurveRule, MeasureOnCurve, curve_rule, measure
from .phi import F1Map, PhiEvaluator, f1, f1_map, f1_prime, phi, phi_evaluator

__all__ = [
    "EXPECTED_MASS", "G_MEASURES", "SUPPORTS", "CurveRule", "F1Map", "MeasureOnCurve",
    "PhiEvaluator", "curve_rule", "exp_2phi", "exp_g_A", "exp_g_B", "exp_g_C", "exp_g_P",
    "exp_g_R", "f1", "f1_map", "f1_prime", "g_boundary", "g_of", "g_value", "measure", "phi",
    "phi_evaluator",
]
