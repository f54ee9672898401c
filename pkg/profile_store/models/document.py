# standard
from typing import Self

# third-party
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    model_validator,
)

# internal
from lca.models import (
    LifetimePolicy,
    PowerProfile,
    SystemBom,
)
from profile_store.errors import UnsupportedSchemaVersion

SUPPORTED_SCHEMA_VERSIONS: tuple[int, ...] = (1,)
CURRENT_SCHEMA_VERSION: int = 1


class ProfileDocument(BaseModel):
    """
    A hardware profile: the system BOM, its use-phase power profile and default service life.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    schema_version: int = CURRENT_SCHEMA_VERSION
    system: SystemBom
    profile: PowerProfile
    default_lifetime: LifetimePolicy
    provenance: str = ""
    factor_set: str | None = None
    compat_embodied: float | None = Field(default=None, ge=0, allow_inf_nan=False)

    @model_validator(mode="after")
    def _supported_version(self) -> Self:
        if self.schema_version not in SUPPORTED_SCHEMA_VERSIONS:
            raise UnsupportedSchemaVersion(
                f"schema_version {self.schema_version} is not supported (supported: {SUPPORTED_SCHEMA_VERSIONS})"
            )

        return self
