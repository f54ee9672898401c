# standard
from typing import Literal

# third-party
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
)

ReportKind = Literal["table", "csv", "json", "markdown"]

REPORT_KINDS: tuple[ReportKind, ...] = ("table", "csv", "json", "markdown")


class ReportFormat(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: ReportKind = "table"


class ReportCell(BaseModel):
    """
    A full-precision value and its display string.
    """

    model_config = ConfigDict(frozen=True)

    value: float | int | str | bool | None
    display: str


class ReportSection(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    title: str
    columns: tuple[str, ...]
    rows: tuple[tuple[ReportCell, ...], ...]


class ReportDocument(BaseModel):
    """
    Format-neutral report content, rendered into one of the report kinds.
    """

    model_config = ConfigDict(frozen=True)

    command: str
    title: str
    header: tuple[tuple[str, ReportCell], ...]
    sections: tuple[ReportSection, ...]
    inputs_digest: str


class RenderedReport(BaseModel):
    """
    Schema for a rendered report; identical resolved inputs give an identical body.
    """

    model_config = ConfigDict(frozen=True)

    body: str
    format: ReportFormat
    inputs_digest: str = Field(min_length=64, max_length=64)
