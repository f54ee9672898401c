# standard
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
from .factor import ComponentClass, EmissionFactor


class ComponentSpec(BaseModel):
    """
    One bill-of-materials line: a component class, its per-unit area, how many units and the factor applied.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str = Field(min_length=1)
    component_class: ComponentClass
    unit_area: float = Field(gt=0, allow_inf_nan=False)
    count: int = Field(ge=1)
    factor: EmissionFactor
    unit_power: float | None = Field(default=None, ge=0, allow_inf_nan=False)

    @model_validator(mode="after")
    def _factor_matches_class(self) -> Self:
        if self.factor.applies_to != self.component_class:
            raise InvariantViolation(
                "factor-class",
                f"factor '{self.factor.id}' applies to {self.factor.applies_to}, component is {self.component_class}",
                field="factor",
            )

        return self


class SystemBom(BaseModel):
    """
    Bill of materials of a compute system.

    Exactly one source of embodied data is allowed: a non-empty component list, or an aggregate
    embodied_override when only a published total exists.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    system_name: str = Field(min_length=1)
    components: tuple[ComponentSpec, ...] = ()
    embodied_override: float | None = Field(default=None, ge=0, allow_inf_nan=False)

    @model_validator(mode="after")
    def _single_embodied_source(self) -> Self:
        if bool(self.components) == (self.embodied_override is not None):
            raise InvariantViolation(
                "embodied-source",
                "a system needs either components or an embodied_override, not both and not neither",
                field="components",
            )

        return self
