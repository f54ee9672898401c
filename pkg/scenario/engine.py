# standard
import logging
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

# internal
from lca import lifecycle_total
from lca.models import (
    GridIntensity,
    LifecycleResult,
    LifetimePolicy,
    PowerMode,
    PowerProfile,
)
from profile_store.models import ProfileDocument
from scenario.errors import ScenarioError
from scenario.models import (
    COMPARISON_METRICS,
    ComparisonRow,
    ComparisonTable,
    Scenario,
    SweepParameter,
    SweepPoint,
    SweepSpec,
    check_sweep_value,
)

logger: logging.Logger = logging.getLogger(__name__)

BREAKEVEN_TOLERANCE_KG: float = 1e-6


def evaluate(scenario: Scenario) -> LifecycleResult:
    """
    Evaluate a scenario. In paper-compat mode the document's rounded published embodied figure, when it
    has one, is amortized instead of the exact breakdown total.
    """
    document: ProfileDocument = scenario.profile_doc
    embodied_basis: float | None = document.compat_embodied if scenario.paper_compat else None

    logger.debug("evaluating scenario %s (paper_compat=%s)", scenario.name, scenario.paper_compat)

    return lifecycle_total(
        bom=document.system,
        profile=document.profile,
        intensity=scenario.intensity,
        lifetime=scenario.effective_lifetime,
        embodied_basis=embodied_basis,
        site_overhead=scenario.site_overhead,
    )


def _with_utilization(profile: PowerProfile, utilization: float) -> PowerProfile:
    # time moves between the first (active) and last (idle) mode
    active, idle = profile.modes

    return PowerProfile(
        modes=(
            PowerMode(name=active.name, power=active.power, time_fraction=utilization),
            PowerMode(name=idle.name, power=idle.power, time_fraction=1.0 - utilization),
        ),
        hours_per_year=profile.hours_per_year,
    )


def apply_sweep_value(base: Scenario, parameter: SweepParameter, value: float) -> Scenario:
    """
    Derive the scenario of one sweep point.
    """
    check_sweep_value(parameter, value)

    if parameter == "lifetime":
        return base.model_copy(update={"lifetime": LifetimePolicy(service_life=value)})

    if parameter == "intensity":
        return base.model_copy(update={"intensity": GridIntensity(label=f"{value!r} kg/kWh", value=value)})

    if len(base.profile_doc.profile.modes) != 2:
        raise ScenarioError("utilization sweeps need a two-mode (active, idle) power profile")

    document: ProfileDocument = base.profile_doc.model_copy(
        update={"profile": _with_utilization(base.profile_doc.profile, value)}
    )

    return base.model_copy(update={"profile_doc": document})


def sweep(spec: SweepSpec, max_workers: int | None = None) -> list[SweepPoint]:
    """
    Evaluate every sweep value; points may run in parallel, results keep input order.
    """
    scenarios: list[Scenario] = [apply_sweep_value(spec.base, spec.parameter, value) for value in spec.values]

    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        results: list[LifecycleResult] = list(executor.map(evaluate, scenarios))

    return [SweepPoint(value=value, result=result) for value, result in zip(spec.values, results)]


def _ratio(value: float, baseline: float) -> float | None:
    if baseline == 0:
        return 1.0 if value == 0 else None

    return value / baseline


def compare(scenarios: Sequence[Scenario]) -> ComparisonTable:
    """
    Align scenarios metric by metric, with ratios against the first scenario.
    """
    if len(scenarios) < 2:
        raise ScenarioError(f"comparison needs at least 2 scenarios, got {len(scenarios)}")

    metrics: list[dict[str, float]] = []

    for scenario in scenarios:
        result: LifecycleResult = evaluate(scenario)
        metrics.append(
            {
                "embodied_total": result.amortized_basis,
                "annual_energy": result.annual_energy,
                "annual_use_phase": result.annual_use_phase,
                "annual_embodied": result.annual_embodied,
                "annual_total": result.annual_total,
            }
        )

    baseline: dict[str, float] = metrics[0]
    rows: tuple[ComparisonRow, ...] = tuple(
        ComparisonRow(
            name=scenario.name,
            ratios={metric: _ratio(values[metric], baseline[metric]) for metric in COMPARISON_METRICS},
            **values,
        )
        for scenario, values in zip(scenarios, metrics)
    )

    return ComparisonTable(baseline=scenarios[0].name, rows=rows)


def breakeven_intensity(scenario: Scenario) -> float:
    """
    Grid intensity at which annual use-phase emissions equal the annual amortized embodied share.

    The value is checked by re-evaluating the scenario at it.
    """
    result: LifecycleResult = evaluate(scenario)

    if result.annual_energy <= 0:
        raise ScenarioError(f"scenario '{scenario.name}' consumes no energy; break-even intensity is undefined")

    intensity: float = result.annual_embodied / result.annual_energy
    check: LifecycleResult = evaluate(
        scenario.model_copy(update={"intensity": GridIntensity(label="break-even", value=intensity)})
    )
    residual: float = abs(check.annual_use_phase - check.annual_embodied)

    if residual >= BREAKEVEN_TOLERANCE_KG:
        raise ScenarioError(f"break-even re-evaluation is off by {residual!r} kg")

    logger.debug("break-even intensity for %s: %r kg/kWh (residual %r kg)", scenario.name, intensity, residual)

    return intensity


def breakeven_lifetime(scenario: Scenario) -> float:
    """
    Service life in years at which the amortized embodied share equals annual use-phase emissions.
    """
    result: LifecycleResult = evaluate(scenario)

    if result.annual_use_phase <= 0:
        raise ScenarioError(f"scenario '{scenario.name}' has no use-phase emissions; break-even lifetime is undefined")

    return result.amortized_basis / result.annual_use_phase
