# third-party
from pydantic import BaseModel, ConfigDict, Field

# internal
from report.models import ReportKind
from scenario.models import SweepParameter


class _Request(BaseModel):
    model_config = ConfigDict(extra="forbid")


class GridRequest(_Request):
    """
    Grid selection shared by every report request: an explicit intensity wins over the grid label.
    """

    grid: str | None = None
    intensity: float | None = None
    format: ReportKind = "json"


class ScenarioRequest(GridRequest):
    lifetime: float | None = None
    paper_compat: bool = False


class EstimateRequest(ScenarioRequest):
    """
    Schema for a single-profile estimate.
    """

    profile: str


class CompareRequest(ScenarioRequest):
    """
    Schema for comparing profiles; the first one is the baseline.
    """

    profiles: list[str] = Field(min_length=2)


class SweepRequest(ScenarioRequest):
    profile: str
    parameter: SweepParameter
    values: list[float] = Field(min_length=1)


class TrainingRequest(GridRequest):
    """
    Schema for a training-run footprint; power is the average draw per device in kW.
    """

    device_hours: float
    power: float
    overhead: float = 1.0
    compute_note: str | None = None


class FunctionalUnitRequest(ScenarioRequest):
    profile: str
    units: float
    share: float = 1.0
    unit_name: str = "unit"
