# internal
from .scenario import Scenario
from .sweep import (
    SWEEP_PARAMETERS,
    SweepParameter,
    SweepPoint,
    SweepSpec,
    check_sweep_value,
)
from .comparison import (
    COMPARISON_METRICS,
    ComparisonRow,
    ComparisonTable,
)

__all__ = [
    "Scenario",
    "SWEEP_PARAMETERS",
    "SweepParameter",
    "SweepPoint",
    "SweepSpec",
    "check_sweep_value",
    "COMPARISON_METRICS",
    "ComparisonRow",
    "ComparisonTable",
]
