"""Exact-rational intersection theory on iterated blowups of threefolds."""

from .blowup import blow_up_curve, blow_up_point, center_gamma, p3_model
from .classes import CurveClass, DivisorClass
from .exceptions import (
    CenterSpecError,
    ChowError,
    DegreeError,
    IntegralityError,
    ModelMismatchError,
    ParityError,
)
from .export import BlowupSummary, ModelSummary, describe_model, render_model
from .model import BlowupKind, BlowupRecord, CurveCenterSpec, ThreefoldModel
from .operations import (
    intersect,
    mul_divisors,
    pullback,
    pushforward,
    strict_transform,
    transfer,
    zero_section_class,
)
from .rational import Rational, as_fraction, format_rational, require_integer

__all__ = [
    # Model
    "ThreefoldModel",
    "BlowupKind",
    "BlowupRecord",
    "CurveCenterSpec",
    "DivisorClass",
    "CurveClass",
    # Constructors
    "p3_model",
    "blow_up_point",
    "blow_up_curve",
    "center_gamma",
    # Operations
    "mul_divisors",
    "intersect",
    "pullback",
    "pushforward",
    "transfer",
    "strict_transform",
    "zero_section_class",
    # Reports
    "BlowupSummary",
    "ModelSummary",
    "describe_model",
    "render_model",
    # Rationals
    "Rational",
    "as_fraction",
    "format_rational",
    "require_integer",
    # Exceptions
    "ChowError",
    "ModelMismatchError",
    "DegreeError",
    "CenterSpecError",
    "ParityError",
    "IntegralityError",
]
