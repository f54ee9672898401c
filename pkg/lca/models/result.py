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
from lca.errors import InvariantViolation


class EmbodiedRow(BaseModel):
    """
    One line of an embodied breakdown. Area and factor are absent for an aggregate override row.
    """

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    component: str
    area_total: float | None
    factor_value: float | None
    kg_co2e: float


class EmbodiedBreakdown(BaseModel):
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    rows: tuple[EmbodiedRow, ...]
    total: float
    source: Literal["bom", "override"]

    @model_validator(mode="after")
    def _total_is_row_sum(self) -> Self:
        if self.total != math.fsum(row.kg_co2e for row in self.rows):
            raise InvariantViolation("breakdown-total", "total differs from the sum of its rows", field="total")

        return self


class LifecycleResult(BaseModel):
    """
    Annualized life-cycle footprint of one system under one usage context.
    """

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    embodied: EmbodiedBreakdown
    amortized_basis: float
    service_life: float
    average_power: float
    annual_energy: float
    annual_use_phase: float
    annual_embodied: float
    annual_total: float
    use_phase_share: float = Field(ge=0, le=1)

    @model_validator(mode="after")
    def _total_recomposes(self) -> Self:
        if self.annual_total != self.annual_use_phase + self.annual_embodied:
            raise InvariantViolation("annual-total", "annual_total != use phase + amortized embodied")

        return self

    @property
    def lifetime_total(self) -> float:
        return self.annual_total * self.service_life


class TrainingRunFootprint(BaseModel):
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    energy_kwh: float
    emissions_kg: float

    @property
    def emissions_t(self) -> float:
        return self.emissions_kg / 1000.0
