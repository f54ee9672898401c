# internal
from .document import (
    CURRENT_SCHEMA_VERSION,
    SUPPORTED_SCHEMA_VERSIONS,
    ProfileDocument,
)
from .factor_set import FactorSet
from .grid_table import GridTable

__all__ = [
    "CURRENT_SCHEMA_VERSION",
    "SUPPORTED_SCHEMA_VERSIONS",
    "ProfileDocument",
    "FactorSet",
    "GridTable",
]
