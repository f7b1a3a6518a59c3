"""Property A checks and the deduction chains of the blowup theorems."""

from .example3 import example3_parity
from .exceptions import PreconditionError
from .property_a import decompose, property_a_report
from .remark2 import (
    Remark2Inputs,
    line_configuration,
    remark2_check,
    remark2_check_inputs,
    remark2_inputs_from_model,
)
from .reports import (
    DeductionTrace,
    Example3Result,
    PropertyAReport,
    Remark2Condition,
    Remark2Verdict,
    TauRange,
    Theorem1Reason,
    Theorem1Verdict,
    TraceStep,
)
from .theorem1 import subcase22_certificate, tau_admissible, theorem1_check, theorem1_trace
from .theorem2 import build_x2, theorem2_chain

__all__ = [
    # Property A
    "property_a_report",
    "decompose",
    "PropertyAReport",
    # Single blowup
    "theorem1_check",
    "theorem1_trace",
    "tau_admissible",
    "subcase22_certificate",
    "Theorem1Reason",
    "Theorem1Verdict",
    "TauRange",
    # Chains
    "build_x2",
    "theorem2_chain",
    "DeductionTrace",
    "TraceStep",
    # Line criterion
    "Remark2Inputs",
    "Remark2Condition",
    "Remark2Verdict",
    "line_configuration",
    "remark2_check",
    "remark2_check_inputs",
    "remark2_inputs_from_model",
    # Parity rule
    "example3_parity",
    "Example3Result",
    # Exceptions
    "PreconditionError",
]
