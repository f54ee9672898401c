# standard
import logging
import math
from collections.abc import Mapping

# internal
from lca.errors import InvariantViolation
from lca.models import (
    FRACTION_SUM_TOLERANCE,
    ComponentSpec,
    EmbodiedBreakdown,
    EmbodiedRow,
    FunctionalUnitSpec,
    GridIntensity,
    LifecycleResult,
    LifetimePolicy,
    PowerProfile,
    SystemBom,
    TrainingRunFootprint,
    TrainingRunSpec,
)

logger: logging.Logger = logging.getLogger(__name__)

OVERRIDE_ROW_NAME: str = "Aggregate embodied estimate"


def component_embodied(component: ComponentSpec) -> float:
    """
    Embodied kg CO2e of one BOM line: unit area x count x factor.
    """
    if component.factor.applies_to != component.component_class:
        raise InvariantViolation("factor-class", f"factor '{component.factor.id}' does not match", field="factor")

    return component.unit_area * component.count * component.factor.value


def system_embodied(bom: SystemBom) -> EmbodiedBreakdown:
    """
    Embodied breakdown of a system, one row per component, or a single synthetic row for an override.
    """
    if bom.embodied_override is not None:
        return EmbodiedBreakdown(
            rows=(
                EmbodiedRow(
                    component=OVERRIDE_ROW_NAME,
                    area_total=None,
                    factor_value=None,
                    kg_co2e=bom.embodied_override,
                ),
            ),
            total=bom.embodied_override,
            source="override",
        )

    if not bom.components:
        raise InvariantViolation("embodied-source", "empty bill of materials without override", field="components")

    rows: tuple[EmbodiedRow, ...] = tuple(
        EmbodiedRow(
            component=component.name,
            area_total=component.unit_area * component.count,
            factor_value=component.factor.value,
            kg_co2e=component_embodied(component),
        )
        for component in bom.components
    )

    return EmbodiedBreakdown(
        rows=rows,
        total=math.fsum(row.kg_co2e for row in rows),
        source="bom",
    )


def bom_active_power(bom: SystemBom) -> float | None:
    """
    Sum of declared per-unit active power over the BOM, or None when no component declares one.
    """
    declared: list[float] = [
        component.unit_power * component.count for component in bom.components if component.unit_power is not None
    ]

    return math.fsum(declared) if declared else None


def average_power(profile: PowerProfile) -> float:
    """
    Duty-cycle weighted mean draw in watts.
    """
    total_fraction: float = math.fsum(mode.time_fraction for mode in profile.modes)

    if abs(total_fraction - 1.0) > FRACTION_SUM_TOLERANCE:
        raise InvariantViolation("fraction-sum", f"time fractions sum to {total_fraction!r}", field="modes")

    return math.fsum(mode.power * mode.time_fraction for mode in profile.modes)


def annual_energy(profile: PowerProfile) -> float:
    """
    Annual electricity in kWh.
    """
    return average_power(profile) * profile.hours_per_year / 1000.0


def use_phase_emissions(energy: float, intensity: GridIntensity) -> float:
    if energy < 0:
        raise InvariantViolation("energy-nonnegative", f"energy {energy!r} kWh is negative", field="energy")

    return energy * intensity.value


def amortize_embodied(embodied: float, lifetime: LifetimePolicy) -> float:
    if embodied < 0:
        raise InvariantViolation("embodied-nonnegative", f"embodied {embodied!r} kg is negative", field="embodied")

    if lifetime.service_life <= 0:
        raise InvariantViolation("service-life", "service life must be positive", field="service_life")

    return embodied / lifetime.service_life


def lifecycle_total(
    bom: SystemBom,
    profile: PowerProfile,
    intensity: GridIntensity,
    lifetime: LifetimePolicy,
    embodied_basis: float | None = None,
    site_overhead: float = 1.0,
) -> LifecycleResult:
    """
    Compose embodied, use-phase and amortization into the annual footprint.

    embodied_basis replaces the breakdown total as the amortized value (the breakdown itself is
    still reported); site_overhead scales annual energy PUE-style.
    """
    if site_overhead < 1:
        raise InvariantViolation("site-overhead", f"overhead {site_overhead!r} is below 1", field="site_overhead")

    breakdown: EmbodiedBreakdown = system_embodied(bom)
    basis: float = breakdown.total if embodied_basis is None else embodied_basis
    energy: float = annual_energy(profile)

    if site_overhead != 1.0:
        energy = energy * site_overhead

    use_phase: float = use_phase_emissions(energy, intensity)
    embodied_share: float = amortize_embodied(basis, lifetime)
    total: float = use_phase + embodied_share

    logger.debug(
        "lifecycle %s: energy=%r kWh use=%r kg embodied/a=%r kg total=%r kg",
        bom.system_name,
        energy,
        use_phase,
        embodied_share,
        total,
    )

    return LifecycleResult(
        embodied=breakdown,
        amortized_basis=basis,
        service_life=lifetime.service_life,
        average_power=average_power(profile),
        annual_energy=energy,
        annual_use_phase=use_phase,
        annual_embodied=embodied_share,
        annual_total=total,
        use_phase_share=use_phase / total if total > 0 else 0.0,
    )


def training_run_footprint(spec: TrainingRunSpec) -> TrainingRunFootprint:
    energy: float = spec.device_hours * spec.avg_device_power * spec.overhead_multiplier

    return TrainingRunFootprint(
        energy_kwh=energy,
        emissions_kg=energy * spec.intensity.value,
    )


def implied_device_power(energy_kwh: float, device_hours: float) -> float:
    """
    Average kW per device implied by a published (device-hours, kWh) pair.
    """
    if device_hours <= 0:
        raise InvariantViolation("device-hours", "device hours must be positive", field="device_hours")

    return energy_kwh / device_hours


def implied_intensity(emissions_kg: float, energy_kwh: float) -> float:
    """
    Grid intensity implied by a published (kWh, kg CO2e) pair.
    """
    if energy_kwh <= 0:
        raise InvariantViolation("energy-positive", "energy must be positive", field="energy_kwh")

    return emissions_kg / energy_kwh


def allocate_share(total: float, usage_share: float) -> float:
    if not 0 < usage_share <= 1:
        raise InvariantViolation("usage-share", f"share {usage_share!r} outside (0, 1]", field="usage_share")

    return total * usage_share


def allocate_tenants(total: float, shares: Mapping[str, float]) -> dict[str, float]:
    """
    Split a footprint across tenants of a shared system; shares must sum to 1.
    """
    share_sum: float = math.fsum(shares.values())

    if abs(share_sum - 1.0) > FRACTION_SUM_TOLERANCE:
        raise InvariantViolation("share-sum", f"tenant shares sum to {share_sum!r}, expected 1", field="shares")

    return {tenant: allocate_share(total, share) for tenant, share in shares.items()}


def per_functional_unit(result: LifecycleResult, functional_unit: FunctionalUnitSpec) -> float:
    if functional_unit.annual_units <= 0:
        raise InvariantViolation("annual-units", "annual units must be positive", field="annual_units")

    return allocate_share(result.annual_total, functional_unit.usage_share) / functional_unit.annual_units
