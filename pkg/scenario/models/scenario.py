# third-party
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
)

# internal
from lca.models import GridIntensity, LifetimePolicy
from profile_store.models import ProfileDocument


class Scenario(BaseModel):
    """
    A named binding of a hardware profile to a grid, an optional lifetime override and the paper-compat switch.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str = Field(min_length=1)
    profile_doc: ProfileDocument
    intensity: GridIntensity
    lifetime: LifetimePolicy | None = None
    paper_compat: bool = False
    site_overhead: float = Field(default=1.0, ge=1, allow_inf_nan=False)

    @property
    def effective_lifetime(self) -> LifetimePolicy:
        return self.lifetime or self.profile_doc.default_lifetime
