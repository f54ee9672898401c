# standard
import math

# third-party
from hypothesis import given, settings
from hypothesis import strategies as st

# internal
from lca.models import (
    COMPONENT_CLASSES,
    ComponentSpec,
    EmissionFactor,
    LifetimePolicy,
    PowerMode,
    PowerProfile,
    SystemBom,
)
from profile_store import ProfileDocument, parse_profile, serialize_profile

# letters, digits and a few separators; yaml quoting of such text is exercised, not escaping
names = st.text(alphabet="abcdefghijklmnopqrstuvwxyzABCDEFGHIJ0123456789 -_.", min_size=1, max_size=16)
free_text = st.text(alphabet="abcdefghijklmnopqrstuvwxyz0123456789 ,.-()", max_size=60)
magnitudes = st.floats(min_value=1e-6, max_value=1e6, allow_nan=False, allow_infinity=False)


@st.composite
def factors(draw: st.DrawFn) -> dict[str, EmissionFactor]:
    return {
        component_class: EmissionFactor(
            id=f"{component_class}-{draw(st.integers(min_value=0, max_value=99))}",
            value=draw(magnitudes),
            applies_to=component_class,
            source_note=draw(free_text),
        )
        for component_class in COMPONENT_CLASSES
    }


@st.composite
def systems(draw: st.DrawFn) -> SystemBom:
    name: str = draw(names)

    if draw(st.booleans()):
        return SystemBom(system_name=name, embodied_override=draw(st.floats(min_value=0.0, max_value=1e6)))

    by_class: dict[str, EmissionFactor] = draw(factors())
    components: list[ComponentSpec] = []

    for _ in range(draw(st.integers(min_value=1, max_value=5))):
        component_class = draw(st.sampled_from(COMPONENT_CLASSES))
        components.append(
            ComponentSpec(
                name=draw(names),
                component_class=component_class,
                unit_area=draw(magnitudes),
                count=draw(st.integers(min_value=1, max_value=4096)),
                factor=by_class[component_class],
                unit_power=draw(st.none() | st.floats(min_value=0.0, max_value=1e3)),
            )
        )

    return SystemBom(system_name=name, components=tuple(components))


@st.composite
def power_profiles(draw: st.DrawFn) -> PowerProfile:
    weights: list[float] = draw(st.lists(st.floats(min_value=0.01, max_value=10.0), min_size=1, max_size=4))
    total: float = math.fsum(weights)

    return PowerProfile(
        modes=tuple(
            PowerMode(
                name=draw(names),
                power=draw(st.floats(min_value=0.0, max_value=1e4)),
                time_fraction=weight / total,
            )
            for weight in weights
        ),
        hours_per_year=draw(st.sampled_from([8760.0, 8784.0])),
    )


@st.composite
def documents(draw: st.DrawFn) -> ProfileDocument:
    return ProfileDocument(
        system=draw(systems()),
        profile=draw(power_profiles()),
        default_lifetime=LifetimePolicy(service_life=draw(st.floats(min_value=0.5, max_value=30.0))),
        provenance=draw(free_text),
        factor_set=draw(st.none() | st.just("unpublished-set")),
        compat_embodied=draw(st.none() | st.floats(min_value=0.0, max_value=1e6)),
    )


@settings(deadline=None, max_examples=500)
@given(document=documents())
def test_parse_inverts_serialize(document: ProfileDocument) -> None:
    text: str = serialize_profile(document)

    assert parse_profile(text) == document
    assert serialize_profile(parse_profile(text)) == text
