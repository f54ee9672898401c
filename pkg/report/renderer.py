# pyright: reportUnknownMemberType=false

# standard
import json
import logging
from typing import Any

# third-party
import pandas as pd
from tabulate import tabulate

# internal
from report.models import (
    ReportDocument,
    ReportKind,
    ReportSection,
)

logger: logging.Logger = logging.getLogger(__name__)


def _display_rows(section: ReportSection) -> list[list[str]]:
    return [[cell.display for cell in row] for row in section.rows]


def _value_records(section: ReportSection, attribute: str) -> list[dict[str, Any]]:
    return [
        {column: getattr(cell, attribute) for column, cell in zip(section.columns, row)} for row in section.rows
    ]


def _header_line(key: str, display: str) -> str:
    return f"{key}: {display}"


def render_table(document: ReportDocument) -> str:
    lines: list[str] = [document.title, "=" * len(document.title)]
    lines.extend(_header_line(key, cell.display) for key, cell in document.header)
    lines.append(_header_line("inputs digest", document.inputs_digest))

    for section in document.sections:
        lines.extend(["", section.title, "-" * len(section.title)])
        lines.append(
            tabulate(
                _display_rows(section),
                headers=list(section.columns),
                tablefmt="simple",
                disable_numparse=True,
            )
        )

    return "\n".join(lines) + "\n"


def render_markdown(document: ReportDocument) -> str:
    lines: list[str] = [f"# {document.title}", ""]
    lines.extend(f"- **{key}**: {cell.display}" for key, cell in document.header)
    lines.append(f"- **inputs digest**: `{document.inputs_digest}`")

    for section in document.sections:
        lines.extend(["", f"## {section.title}", ""])
        lines.append(
            tabulate(
                _display_rows(section),
                headers=list(section.columns),
                tablefmt="pipe",
                disable_numparse=True,
            )
        )

    return "\n".join(lines) + "\n"


def render_csv(document: ReportDocument) -> str:
    """
    Full-precision CSV. A single-section report is one wide table; several sections are
    flattened to long form (section, row, column, value).
    """
    if len(document.sections) == 1:
        section: ReportSection = document.sections[0]
        df: pd.DataFrame = pd.DataFrame.from_records(_value_records(section, "value"), columns=list(section.columns))
    else:
        records: list[dict[str, Any]] = [
            {"section": section.name, "row": index, "column": column, "value": cell.value}
            for section in document.sections
            for index, row in enumerate(section.rows)
            for column, cell in zip(section.columns, row)
        ]
        df = pd.DataFrame.from_records(records, columns=["section", "row", "column", "value"])

    return df.to_csv(index=False, lineterminator="\n")


def render_json(document: ReportDocument) -> str:
    payload: dict[str, Any] = {
        "command": document.command,
        "title": document.title,
        "inputs": {key: cell.value for key, cell in document.header},
        "inputs_digest": document.inputs_digest,
        "sections": {section.name: _value_records(section, "value") for section in document.sections},
        "display": {
            "inputs": {key: cell.display for key, cell in document.header},
            "sections": {section.name: _value_records(section, "display") for section in document.sections},
        },
    }

    return json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=2, allow_nan=False) + "\n"


def render(document: ReportDocument, kind: ReportKind) -> str:
    """
    Render a report document into the requested kind.
    """
    logger.debug("rendering %s report as %s", document.command, kind)

    match kind:
        case "table":
            return render_table(document)
        case "markdown":
            return render_markdown(document)
        case "csv":
            return render_csv(document)
        case "json":
            return render_json(document)
