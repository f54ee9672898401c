# internal
from .engine import (
    apply_sweep_value,
    breakeven_intensity,
    breakeven_lifetime,
    compare,
    evaluate,
    sweep,
)
from .errors import ScenarioError
from .models import (
    ComparisonRow,
    ComparisonTable,
    Scenario,
    SweepPoint,
    SweepSpec,
)

__all__ = [
    "apply_sweep_value",
    "breakeven_intensity",
    "breakeven_lifetime",
    "compare",
    "evaluate",
    "sweep",
    "ScenarioError",
    "ComparisonRow",
    "ComparisonTable",
    "Scenario",
    "SweepPoint",
    "SweepSpec",
]
