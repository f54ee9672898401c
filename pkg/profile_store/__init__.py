# internal
from .codec import (
    parse_factor_set,
    parse_profile,
    serialize_factor_set,
    serialize_profile,
)
from .errors import (
    GridTableError,
    ProfileSyntaxError,
    ProfileValidationError,
    UnknownFactorError,
    UnknownGridLabel,
    UnsupportedSchemaVersion,
)
from .grid import load_grid_table
from .manager import ProfileStore
from .models import (
    FactorSet,
    GridTable,
    ProfileDocument,
)

__all__ = [
    "parse_factor_set",
    "parse_profile",
    "serialize_factor_set",
    "serialize_profile",
    "GridTableError",
    "ProfileSyntaxError",
    "ProfileValidationError",
    "UnknownFactorError",
    "UnknownGridLabel",
    "UnsupportedSchemaVersion",
    "load_grid_table",
    "ProfileStore",
    "FactorSet",
    "GridTable",
    "ProfileDocument",
]
