"""Chern classes of complete-intersection threefolds and the c2 positivity certificate."""

from .chern import (
    bracket_split,
    chern_classes_ci,
    first_bracket,
    g_critical_point,
    g_landmarks,
    g_value,
    matches_p3_model,
)
from .reports import BracketSplit, ChernNumbers, Counterexample, GLandmarks, SweepResult
from .spec import CISpec
from .sweep import G_AT_N_NOTE, SweepBounds, specs_up_to, verify_c2_positive, verify_g_landmarks
from .symbolic import (
    bracket_identity_symbolic,
    chern_numbers_ci,
    ci_degree,
    g_critical_point_symbolic,
    total_chern_ci,
)

__all__ = [
    "CISpec",
    # Closed forms
    "chern_classes_ci",
    "g_value",
    "first_bracket",
    "bracket_split",
    "g_critical_point",
    "g_landmarks",
    "matches_p3_model",
    # sympy
    "total_chern_ci",
    "ci_degree",
    "chern_numbers_ci",
    "bracket_identity_symbolic",
    "g_critical_point_symbolic",
    # Sweep
    "SweepBounds",
    "specs_up_to",
    "verify_c2_positive",
    "verify_g_landmarks",
    "G_AT_N_NOTE",
    # Reports
    "BracketSplit",
    "ChernNumbers",
    "GLandmarks",
    "Counterexample",
    "SweepResult",
]
