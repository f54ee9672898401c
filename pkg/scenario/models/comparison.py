# pyright: reportUnknownMemberType=false

# third-party
import pandas as pd
from pydantic import (
    BaseModel,
    ConfigDict,
)

COMPARISON_METRICS: tuple[str, ...] = (
    "embodied_total",
    "annual_energy",
    "annual_use_phase",
    "annual_embodied",
    "annual_total",
)


class ComparisonRow(BaseModel):
    """
    One scenario's aligned metrics plus ratios against the first scenario (None when undefined).
    """

    model_config = ConfigDict(frozen=True)

    name: str
    embodied_total: float
    annual_energy: float
    annual_use_phase: float
    annual_embodied: float
    annual_total: float
    ratios: dict[str, float | None]


class ComparisonTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    baseline: str
    rows: tuple[ComparisonRow, ...]

    def to_frame(self) -> pd.DataFrame:
        """
        Flatten rows into a DataFrame with one `<metric>_ratio` column per metric.
        """
        records: list[dict[str, object]] = []

        for row in self.rows:
            record: dict[str, object] = {"scenario": row.name}
            record.update({metric: getattr(row, metric) for metric in COMPARISON_METRICS})
            record.update({f"{metric}_ratio": row.ratios[metric] for metric in COMPARISON_METRICS})
            records.append(record)

        return pd.DataFrame.from_records(records)
