"""P^3 blown up at n points and along the lines joining them: when is deg = 0 forced."""

from .config import CASE_TABLE, DEG, S_ALPHA, CaseLabel, CaseRule, Theorem3Config, case_for
from .constraints import (
    build_constraints,
    c1_squared_constraint,
    c2_constraint,
    case_constraints,
    raw_tuple_constraints,
    sign_constraints,
    sum_bound_constraint,
)
from .decide import averaging_certificate, decide_deg_zero, redundancy_check
from .model import instantiate_model, line_centers, model_cross_check
from .reports import AveragingCertificate, CrossCheckReport, DegreeDecision, RedundancyReport

__all__ = [
    # Configuration
    "Theorem3Config",
    "CaseLabel",
    "CaseRule",
    "CASE_TABLE",
    "case_for",
    "DEG",
    "S_ALPHA",
    # Constraints
    "build_constraints",
    "case_constraints",
    "raw_tuple_constraints",
    "c2_constraint",
    "c1_squared_constraint",
    "sum_bound_constraint",
    "sign_constraints",
    # Decisions
    "decide_deg_zero",
    "averaging_certificate",
    "redundancy_check",
    "DegreeDecision",
    "AveragingCertificate",
    "RedundancyReport",
    # Model
    "instantiate_model",
    "line_centers",
    "model_cross_check",
    "CrossCheckReport",
]
