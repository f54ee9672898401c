# standard
from pathlib import Path

# third-party
import pytest
import yaml

# internal
from lca.models import SystemBom
from profile_store import (
    FactorSet,
    ProfileDocument,
    ProfileStore,
    ProfileSyntaxError,
    ProfileValidationError,
    UnknownFactorError,
    UnsupportedSchemaVersion,
    parse_factor_set,
    parse_profile,
    serialize_factor_set,
    serialize_profile,
)

MINIMAL_PROFILE: str = """\
schema_version: 1
system:
  name: board
  components:
    - name: PCB
      class: pcb
      unit_area: 100.0
      count: 1
      factor: pcb-test
profile:
  modes:
    - name: active
      power: 100.0
      time_fraction: {active}
    - name: idle
      power: 10.0
      time_fraction: {idle}
default_lifetime:
  service_life: 4.0
factors:
  - id: pcb-test
    applies_to: pcb
    value: 0.06
"""


def _preset_text(store: ProfileStore, name: str) -> str:
    return Path(store.profile_path(name)).read_text(encoding="utf-8")


def test_parse_cpu_preset(cpu_doc: ProfileDocument) -> None:
    assert cpu_doc.schema_version == 1
    assert cpu_doc.factor_set == "pcf-2023"
    assert cpu_doc.compat_embodied == 1200.0
    assert len(cpu_doc.system.components) == 4
    assert [(mode.power, mode.time_fraction) for mode in cpu_doc.profile.modes] == [(555.0, 0.75), (200.0, 0.25)]
    assert cpu_doc.default_lifetime.service_life == 5.0
    assert cpu_doc.system.components[0].unit_area == 8.12
    assert cpu_doc.system.components[0].factor.value == 3.0
    assert "16 layers" in cpu_doc.provenance


def test_parse_gpu_preset(gpu_doc: ProfileDocument) -> None:
    assert gpu_doc.system.embodied_override == 200.0
    assert gpu_doc.system.components == ()
    assert [(mode.power, mode.time_fraction) for mode in gpu_doc.profile.modes] == [(700.0, 0.75), (250.0, 0.25)]


def test_parse_minimal_profile_with_inline_factor() -> None:
    document: ProfileDocument = parse_profile(MINIMAL_PROFILE.format(active=0.5, idle=0.5))

    assert document.system.components[0].factor.id == "pcb-test"
    assert document.profile.hours_per_year == 8760.0


def test_fraction_sum_violation_names_the_invariant() -> None:
    with pytest.raises(ProfileValidationError, match="fraction-sum") as excinfo:
        parse_profile(MINIMAL_PROFILE.format(active=0.8, idle=0.3))

    assert excinfo.value.field == "profile"


def test_invalid_field_is_named() -> None:
    text: str = MINIMAL_PROFILE.format(active=0.5, idle=0.5).replace("count: 1", "count: 0")

    with pytest.raises(ProfileValidationError) as excinfo:
        parse_profile(text)

    assert excinfo.value.field == "system.components[0].count"


def test_syntax_error_reports_position() -> None:
    with pytest.raises(ProfileSyntaxError) as excinfo:
        parse_profile("schema_version: 1\nsystem: board\n  name: x\n")

    assert excinfo.value.line == 3
    assert excinfo.value.column is not None
    assert str(excinfo.value).startswith("line 3, column ")


def test_document_must_be_a_mapping() -> None:
    with pytest.raises(ProfileSyntaxError):
        parse_profile("- 1\n- 2\n")


def test_unknown_factor_id() -> None:
    text: str = MINIMAL_PROFILE.format(active=0.5, idle=0.5).replace("factor: pcb-test", "factor: pcb-missing")

    with pytest.raises(UnknownFactorError, match="pcb-missing"):
        parse_profile(text)


@pytest.mark.parametrize("version", ["2", "0", "'1'", "true"])
def test_unsupported_schema_version(version: str) -> None:
    text: str = MINIMAL_PROFILE.format(active=0.5, idle=0.5).replace("schema_version: 1", f"schema_version: {version}")

    with pytest.raises(UnsupportedSchemaVersion):
        parse_profile(text)


def test_missing_schema_version() -> None:
    text: str = MINIMAL_PROFILE.format(active=0.5, idle=0.5).replace("schema_version: 1\n", "")

    with pytest.raises(ProfileValidationError) as excinfo:
        parse_profile(text)

    assert excinfo.value.field == "schema_version"


def test_factor_resolves_against_named_set(store: ProfileStore) -> None:
    text: str = _preset_text(store, "sapphire-rapids-8468")

    with pytest.raises(UnknownFactorError, match="pcf-2023"):
        parse_profile(text)

    document: ProfileDocument = parse_profile(text, store.factor_sets)

    assert {component.factor.id for component in document.system.components} == {
        "logic-ic-intel7",
        "memory-ic-dram",
        "other-ic-generic",
        "pcb-16-layer",
    }


def test_inline_factor_conflicting_with_set(store: ProfileStore) -> None:
    text: str = _preset_text(store, "sapphire-rapids-8468") + (
        "factors:\n  - id: pcb-16-layer\n    applies_to: pcb\n    value: 0.07\n"
    )

    with pytest.raises(ProfileValidationError, match="defined differently"):
        parse_profile(text, store.factor_sets)


def test_serialize_keeps_full_precision(cpu_doc: ProfileDocument) -> None:
    text: str = serialize_profile(cpu_doc)
    raw: dict = yaml.safe_load(text)

    assert raw["system"]["components"][0]["unit_area"] == 8.12
    assert parse_profile(text) == cpu_doc


@pytest.mark.parametrize("preset", ["sapphire-rapids-8468", "h100-sxm5-dgx-node"])
def test_preset_round_trip_is_byte_stable(store: ProfileStore, preset: str) -> None:
    normalized: str = serialize_profile(parse_profile(_preset_text(store, preset), store.factor_sets))

    assert serialize_profile(parse_profile(normalized)) == normalized
    assert serialize_profile(parse_profile(normalized, store.factor_sets)) == normalized


def test_empty_bom_fails_on_reparse(gpu_doc: ProfileDocument) -> None:
    empty: ProfileDocument = gpu_doc.model_copy(
        update={"system": SystemBom.model_construct(system_name="empty", components=(), embodied_override=None)}
    )

    with pytest.raises(ProfileValidationError, match="embodied-source"):
        parse_profile(serialize_profile(empty))


def test_factor_set_round_trip(store: ProfileStore) -> None:
    factor_set: FactorSet = store.load_factor_set("pcf-2023")

    assert factor_set.resolve("pcb-16-layer").value == 0.06
    assert parse_factor_set(serialize_factor_set(factor_set)) == factor_set

    with pytest.raises(UnknownFactorError):
        factor_set.resolve("missing")


def test_factor_set_rejects_duplicate_ids() -> None:
    text: str = (
        "schema_version: 1\nname: dup\nfactors:\n"
        "  - {id: a, applies_to: pcb, value: 0.1}\n"
        "  - {id: a, applies_to: pcb, value: 0.2}\n"
    )

    with pytest.raises(ProfileValidationError, match="factor-id-unique"):
        parse_factor_set(text)
