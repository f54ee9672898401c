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
from lca.errors import InvariantViolation
from lca.models import EmissionFactor
from profile_store.errors import UnknownFactorError


class FactorSet(BaseModel):
    """
    Versioned collection of emission factors, addressed by factor id.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str = Field(min_length=1)
    vintage: str = ""
    factors: tuple[EmissionFactor, ...] = ()

    @model_validator(mode="after")
    def _unique_ids(self) -> Self:
        ids: list[str] = [factor.id for factor in self.factors]
        duplicates: list[str] = sorted({factor_id for factor_id in ids if ids.count(factor_id) > 1})

        if duplicates:
            raise InvariantViolation("factor-id-unique", f"duplicate factor ids {duplicates}", field="factors")

        return self

    def resolve(self, factor_id: str) -> EmissionFactor:
        """
        Look up a factor by id.
        """
        for factor in self.factors:
            if factor.id == factor_id:
                return factor

        raise UnknownFactorError(f"factor '{factor_id}' is not defined in factor set '{self.name}'")
