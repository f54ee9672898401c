# standard
from typing import Self

# third-party
from pydantic import (
    BaseModel,
    ConfigDict,
    model_validator,
)

# internal
from lca.errors import InvariantViolation
from lca.models import GridIntensity
from profile_store.errors import UnknownGridLabel


class GridTable(BaseModel):
    """
    Grid intensities keyed by label.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    entries: tuple[GridIntensity, ...] = ()

    @model_validator(mode="after")
    def _unique_labels(self) -> Self:
        labels: list[str] = [entry.label for entry in self.entries]

        if len(labels) != len(set(labels)):
            raise InvariantViolation("grid-label-unique", "grid labels must be unique", field="entries")

        return self

    @property
    def labels(self) -> list[str]:
        return [entry.label for entry in self.entries]

    def lookup(self, label: str) -> GridIntensity:
        for entry in self.entries:
            if entry.label == label:
                return entry

        known: str = ", ".join(self.labels) or "none"

        raise UnknownGridLabel(f"grid label '{label}' not found (known: {known})")
