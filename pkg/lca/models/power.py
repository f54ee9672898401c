# standard
import math
from typing import Self

# third-party
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    model_validator,
)

# internal
from lca.errors import InvariantViolation

HOURS_PER_YEAR: float = 8760.0
FRACTION_SUM_TOLERANCE: float = 1e-9


class PowerMode(BaseModel):
    """
    An operating mode: constant draw in watts for a fraction of the year.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str = Field(min_length=1)
    power: float = Field(ge=0, allow_inf_nan=False)
    time_fraction: float = Field(ge=0, le=1, allow_inf_nan=False)


class PowerProfile(BaseModel):
    """
    Use-phase power draw as a duty cycle over operating modes.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    modes: tuple[PowerMode, ...] = Field(min_length=1)
    hours_per_year: float = Field(default=HOURS_PER_YEAR, gt=0, allow_inf_nan=False)

    @model_validator(mode="after")
    def _fractions_sum_to_one(self) -> Self:
        total: float = math.fsum(mode.time_fraction for mode in self.modes)

        if abs(total - 1.0) > FRACTION_SUM_TOLERANCE:
            raise InvariantViolation(
                "fraction-sum",
                f"mode time fractions sum to {total!r}, expected 1",
                field="modes",
            )

        return self
