# standard
from typing import Literal

# third-party
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
)

ComponentClass = Literal["logic-ic", "memory-ic", "other-ic", "pcb"]

COMPONENT_CLASSES: tuple[ComponentClass, ...] = ("logic-ic", "memory-ic", "other-ic", "pcb")


class EmissionFactor(BaseModel):
    """
    Manufacturing emission factor in kg CO2e per cm² of die (ICs) or board (PCB) area.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    id: str = Field(min_length=1)
    value: float = Field(gt=0, allow_inf_nan=False)
    applies_to: ComponentClass
    source_note: str = ""
