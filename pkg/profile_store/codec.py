# pyright: reportUnknownMemberType=false
# pyright: reportUnknownVariableType=false
# pyright: reportUnknownArgumentType=false

# standard
import logging
from collections.abc import Mapping
from typing import Any

# third-party
import yaml
from pydantic import ValidationError

# internal
from lca.models import EmissionFactor
from profile_store.errors import (
    ProfileSyntaxError,
    ProfileValidationError,
    UnknownFactorError,
    UnsupportedSchemaVersion,
)
from profile_store.models import (
    SUPPORTED_SCHEMA_VERSIONS,
    FactorSet,
    ProfileDocument,
)

logger: logging.Logger = logging.getLogger(__name__)

# document keys that differ from model field names
_DOCUMENT_FIELD_NAMES: dict[str, str] = {
    "component_class": "class",
    "system_name": "name",
}


def _field_path(loc: tuple[int | str, ...], prefix: str = "") -> str:
    path: str = prefix

    for part in loc:
        if isinstance(part, int):
            path += f"[{part}]"
        else:
            name: str = _DOCUMENT_FIELD_NAMES.get(part, part)
            path += f".{name}" if path else name

    return path or "<document>"


def _validation_error(error: ValidationError, prefix: str = "") -> ProfileValidationError:
    """
    Convert the first pydantic error into a ProfileValidationError naming the document field.
    """
    first: Any = error.errors(include_url=False)[0]

    return ProfileValidationError(_field_path(tuple(first["loc"]), prefix), str(first["msg"]))


def _load_mapping(text: str) -> dict[str, Any]:
    try:
        loaded: Any = yaml.safe_load(text)
    except yaml.MarkedYAMLError as e:
        mark: Any = e.problem_mark or e.context_mark
        problem: str = e.problem or str(e)

        if mark is None:
            raise ProfileSyntaxError(problem) from e

        raise ProfileSyntaxError(problem, line=mark.line + 1, column=mark.column + 1) from e
    except yaml.YAMLError as e:
        raise ProfileSyntaxError(str(e)) from e

    if not isinstance(loaded, dict):
        raise ProfileSyntaxError("document must be a key-value mapping at the top level", line=1, column=1)

    return loaded


def _check_schema_version(raw: Mapping[str, Any]) -> int:
    if "schema_version" not in raw:
        raise ProfileValidationError("schema_version", "field required")

    version: Any = raw["schema_version"]

    if isinstance(version, bool) or not isinstance(version, int) or version not in SUPPORTED_SCHEMA_VERSIONS:
        raise UnsupportedSchemaVersion(
            f"schema_version {version!r} is not supported (supported: {list(SUPPORTED_SCHEMA_VERSIONS)})"
        )

    return version


def _parse_factors(raw_factors: Any, prefix: str) -> tuple[EmissionFactor, ...]:
    if raw_factors is None:
        return ()

    if not isinstance(raw_factors, list):
        raise ProfileValidationError(prefix, "must be a list of factors")

    factors: list[EmissionFactor] = []

    for index, raw_factor in enumerate(raw_factors):
        try:
            factors.append(EmissionFactor.model_validate(raw_factor))
        except ValidationError as e:
            raise _validation_error(e, f"{prefix}[{index}]") from e

    return tuple(factors)


def parse_factor_set(text: str) -> FactorSet:
    """
    Parse and validate a factor-set document.
    """
    raw: dict[str, Any] = _load_mapping(text)
    _check_schema_version(raw)
    factors: tuple[EmissionFactor, ...] = _parse_factors(raw.get("factors"), "factors")

    try:
        return FactorSet(
            name=raw.get("name", ""),
            vintage=raw.get("vintage", ""),
            factors=factors,
        )
    except ValidationError as e:
        raise _validation_error(e) from e


def serialize_factor_set(factor_set: FactorSet) -> str:
    payload: dict[str, Any] = {
        "schema_version": max(SUPPORTED_SCHEMA_VERSIONS),
        "name": factor_set.name,
        "vintage": factor_set.vintage,
        "factors": [factor.model_dump() for factor in factor_set.factors],
    }

    return _dump(payload)


class _FactorResolver:
    """
    Resolves component factor ids against inline factors, then the referenced factor set.
    """

    def __init__(self, inline: tuple[EmissionFactor, ...], factor_set: FactorSet | None, set_name: str | None) -> None:
        self.inline: dict[str, EmissionFactor] = {factor.id: factor for factor in inline}
        self.factor_set: FactorSet | None = factor_set
        self.set_name: str | None = set_name

        if len(self.inline) != len(inline):
            raise ProfileValidationError("factors", "factor ids must be unique")

    def resolve(self, factor_id: str, field: str) -> EmissionFactor:
        from_inline: EmissionFactor | None = self.inline.get(factor_id)
        from_set: EmissionFactor | None = None

        if self.factor_set is not None:
            try:
                from_set = self.factor_set.resolve(factor_id)
            except UnknownFactorError:
                from_set = None

        if from_inline is not None and from_set is not None and from_inline != from_set:
            raise ProfileValidationError(
                field,
                f"factor '{factor_id}' is defined differently inline and in factor set '{self.set_name}'",
            )

        resolved: EmissionFactor | None = from_inline or from_set

        if resolved is None:
            where: str = f"inline factors or factor set '{self.set_name}'" if self.set_name else "inline factors"

            raise UnknownFactorError(f"{field}: factor '{factor_id}' not found in {where}")

        return resolved


def _component_payload(raw_component: Any, field: str, resolver: _FactorResolver) -> dict[str, Any]:
    if not isinstance(raw_component, dict):
        raise ProfileValidationError(field, "component must be a key-value mapping")

    payload: dict[str, Any] = {
        ("component_class" if key == "class" else key): value for key, value in raw_component.items()
    }

    if "factor" not in payload:
        raise ProfileValidationError(f"{field}.factor", "field required")

    if not isinstance(payload["factor"], str):
        raise ProfileValidationError(f"{field}.factor", "must be a factor id")

    payload["factor"] = resolver.resolve(payload["factor"], f"{field}.factor")

    return payload


def parse_profile(text: str, factor_sets: Mapping[str, FactorSet] | None = None) -> ProfileDocument:
    """
    Parse and fully validate a profile document.

    Component factor ids resolve against the document's inline `factors` first and then against the
    factor set named by `factor_set`, looked up in factor_sets.
    """
    raw: dict[str, Any] = _load_mapping(text)
    _check_schema_version(raw)

    set_name: Any = raw.get("factor_set")

    if set_name is not None and not isinstance(set_name, str):
        raise ProfileValidationError("factor_set", "must be a factor set name")

    factor_set: FactorSet | None = (factor_sets or {}).get(set_name) if set_name else None
    inline: tuple[EmissionFactor, ...] = _parse_factors(raw.get("factors"), "factors")
    resolver: _FactorResolver = _FactorResolver(inline, factor_set, set_name)

    raw_system: Any = raw.get("system")

    if not isinstance(raw_system, dict):
        raise ProfileValidationError("system", "field required as a key-value mapping")

    system: dict[str, Any] = {
        ("system_name" if key == "name" else key): value for key, value in raw_system.items() if key != "components"
    }
    raw_components: Any = raw_system.get("components") or []

    if not isinstance(raw_components, list):
        raise ProfileValidationError("system.components", "must be a list of components")

    system["components"] = [
        _component_payload(raw_component, f"system.components[{index}]", resolver)
        for index, raw_component in enumerate(raw_components)
    ]

    payload: dict[str, Any] = {key: value for key, value in raw.items() if key != "factors"}
    payload["system"] = system

    try:
        document: ProfileDocument = ProfileDocument.model_validate(payload)
    except ValidationError as e:
        raise _validation_error(e) from e

    logger.debug("parsed profile document for %s", document.system.system_name)

    return document


def _referenced_factors(document: ProfileDocument) -> list[EmissionFactor]:
    by_id: dict[str, EmissionFactor] = {}

    for component in document.system.components:
        known: EmissionFactor | None = by_id.get(component.factor.id)

        if known is not None and known != component.factor:
            raise ProfileValidationError(
                "factors",
                f"two different factors share the id '{component.factor.id}'",
            )

        by_id[component.factor.id] = component.factor

    return [by_id[factor_id] for factor_id in sorted(by_id)]


def serialize_profile(document: ProfileDocument) -> str:
    """
    Serialize a profile document to its text form, inlining every referenced factor.
    """
    system: dict[str, Any] = {"name": document.system.system_name}

    if document.system.components:
        system["components"] = []

        for component in document.system.components:
            entry: dict[str, Any] = {
                "name": component.name,
                "class": component.component_class,
                "unit_area": component.unit_area,
                "count": component.count,
                "factor": component.factor.id,
            }

            if component.unit_power is not None:
                entry["unit_power"] = component.unit_power

            system["components"].append(entry)

    if document.system.embodied_override is not None:
        system["embodied_override"] = document.system.embodied_override

    payload: dict[str, Any] = {
        "schema_version": document.schema_version,
        "provenance": document.provenance,
    }

    if document.factor_set is not None:
        payload["factor_set"] = document.factor_set

    if document.compat_embodied is not None:
        payload["compat_embodied"] = document.compat_embodied

    payload["system"] = system
    payload["profile"] = {
        "hours_per_year": document.profile.hours_per_year,
        "modes": [mode.model_dump() for mode in document.profile.modes],
    }
    payload["default_lifetime"] = {"service_life": document.default_lifetime.service_life}

    factors: list[EmissionFactor] = _referenced_factors(document)

    if factors:
        payload["factors"] = [factor.model_dump() for factor in factors]

    return _dump(payload)


def _dump(payload: dict[str, Any]) -> str:
    return yaml.safe_dump(
        payload,
        sort_keys=False,
        allow_unicode=True,
        default_flow_style=False,
        width=100,
    )
