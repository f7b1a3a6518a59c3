"""threefold - exact intersection theory on blowups of threefolds"""

__version__ = "0.1.0"

# Re-export the entry points most scripts need
from threefold_chow import blow_up_curve, blow_up_point, intersect, p3_model
from threefold_scenario import parse_scenario, run_scenario

__all__ = [
    "p3_model",
    "blow_up_point",
    "blow_up_curve",
    "intersect",
    "parse_scenario",
    "run_scenario",
]
