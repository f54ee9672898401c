# third-party
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
)


class GridIntensity(BaseModel):
    """
    Carbon intensity of consumed electricity in kg CO2e per kWh.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    label: str = Field(min_length=1)
    value: float = Field(ge=0, allow_inf_nan=False)


class LifetimePolicy(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    service_life: float = Field(gt=0, allow_inf_nan=False)


class TrainingRunSpec(BaseModel):
    """
    Inputs of a training-run footprint: device-hours, average per-device draw in kW (host overhead
    included) and an optional site overhead multiplier.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    device_hours: float = Field(gt=0, allow_inf_nan=False)
    avg_device_power: float = Field(gt=0, allow_inf_nan=False)
    overhead_multiplier: float = Field(default=1.0, ge=1, allow_inf_nan=False)
    intensity: GridIntensity
    # metadata only (FLOPs, utilization); never enters the math
    compute_note: str | None = None


class FunctionalUnitSpec(BaseModel):
    """
    Delivered utility per year and the share of the physical system the service occupies.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    unit_name: str = Field(min_length=1)
    annual_units: float = Field(gt=0, allow_inf_nan=False)
    usage_share: float = Field(gt=0, le=1, allow_inf_nan=False)
