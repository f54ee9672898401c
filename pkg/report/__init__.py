# internal
from .commands import Reporter
from .models import (
    REPORT_KINDS,
    RenderedReport,
    ReportFormat,
    ReportKind,
)

__all__ = [
    "Reporter",
    "REPORT_KINDS",
    "RenderedReport",
    "ReportFormat",
    "ReportKind",
]
