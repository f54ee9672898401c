# standard
import math
from typing import Literal, Self

# third-party
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    model_validator,
)

# internal
from lca.models import LifecycleResult
from scenario.errors import ScenarioError
from .scenario import Scenario

SweepParameter = Literal["lifetime", "intensity", "utilization"]

SWEEP_PARAMETERS: tuple[SweepParameter, ...] = ("lifetime", "intensity", "utilization")


def check_sweep_value(parameter: SweepParameter, value: float) -> None:
    """
    Reject a value outside the domain of the swept parameter.
    """
    if not math.isfinite(value):
        raise ScenarioError(f"{parameter} value {value!r} is not finite")

    if parameter == "lifetime" and value <= 0:
        raise ScenarioError(f"lifetime value {value!r} must be positive")

    if parameter == "intensity" and value < 0:
        raise ScenarioError(f"intensity value {value!r} must not be negative")

    if parameter == "utilization" and not 0 <= value <= 1:
        raise ScenarioError(f"utilization value {value!r} must lie in [0, 1]")


class SweepSpec(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    parameter: SweepParameter
    values: tuple[float, ...] = Field(min_length=1)
    base: Scenario

    @model_validator(mode="after")
    def _values_fit_parameter(self) -> Self:
        for value in self.values:
            check_sweep_value(self.parameter, value)

        if self.parameter == "utilization" and len(self.base.profile_doc.profile.modes) != 2:
            raise ScenarioError("utilization sweeps need a two-mode (active, idle) power profile")

        return self


class SweepPoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float
    result: LifecycleResult
