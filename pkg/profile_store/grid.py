# pyright: reportUnknownMemberType=false

# standard
import io
import logging
import math
import re
from typing import Any

# third-party
import pandas as pd

# internal
from lca.models import GridIntensity
from profile_store.errors import GridTableError
from profile_store.models import GridTable

logger: logging.Logger = logging.getLogger(__name__)

GRID_TABLE_HEADER: list[str] = ["label", "kg_co2e_per_kwh"]

_PARSER_LINE: re.Pattern[str] = re.compile(r"line (\d+)")


def _is_missing(value: Any) -> bool:
    return bool(pd.isna(value)) or (isinstance(value, str) and not value.strip())


def load_grid_table(text: str) -> GridTable:
    """
    Parse a `label,kg_co2e_per_kwh` CSV table into a validated GridTable.

    Errors carry the 1-based line of the offending row.
    """
    if not text.strip():
        return GridTable()

    try:
        df: pd.DataFrame = pd.read_csv(
            io.StringIO(text),
            header=None,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=False,
        )
    except pd.errors.EmptyDataError:
        return GridTable()
    except pd.errors.ParserError as e:
        match: re.Match[str] | None = _PARSER_LINE.search(str(e))

        raise GridTableError(
            f"malformed row ({str(e).strip()})",
            line=int(match.group(1)) if match else None,
        ) from e

    # header is row 0
    if [str(value).strip() for value in df.iloc[0].tolist()] != GRID_TABLE_HEADER:
        raise GridTableError(f"header must be {','.join(GRID_TABLE_HEADER)}", line=1)

    entries: list[GridIntensity] = []
    seen: dict[str, int] = {}

    # blank lines are kept as rows, so row positions are line numbers
    for line, (raw_label, raw_value) in enumerate(zip(df[0].iloc[1:], df[1].iloc[1:]), start=2):
        if _is_missing(raw_label) and _is_missing(raw_value):
            continue

        if _is_missing(raw_label) or _is_missing(raw_value):
            raise GridTableError("malformed row: expected label,kg_co2e_per_kwh", line=line)

        label: str = str(raw_label).strip()

        try:
            value: float = float(raw_value)
        except ValueError as e:
            raise GridTableError(f"value {raw_value!r} is not a number", line=line) from e

        if not math.isfinite(value):
            raise GridTableError(f"value {raw_value!r} is not finite", line=line)

        if value < 0:
            raise GridTableError(f"negative value {value!r} for '{label}'", line=line)

        if label in seen:
            raise GridTableError(f"duplicate label '{label}' (first on line {seen[label]})", line=line)

        seen[label] = line
        entries.append(GridIntensity(label=label, value=value))

    logger.debug("loaded %d grid intensities", len(entries))

    return GridTable(entries=tuple(entries))
