# pyright: reportUnknownMemberType=false

# standard
import logging
from collections.abc import Sequence
from pathlib import Path
from typing import Any

# third-party
import pandas as pd

# internal
from lca import (
    allocate_share,
    bom_active_power,
    per_functional_unit,
    training_run_footprint,
)
from lca.models import (
    FunctionalUnitSpec,
    GridIntensity,
    LifecycleResult,
    LifetimePolicy,
    TrainingRunFootprint,
    TrainingRunSpec,
)
from profile_store import ProfileStore
from profile_store.models import GridTable, ProfileDocument
from report.config import default_grid_label
from report.digest import digest_inputs
from report.models import (
    RenderedReport,
    ReportCell,
    ReportDocument,
    ReportFormat,
    ReportKind,
    ReportSection,
)
from report.renderer import render
from report.rounding import (
    display_factor,
    display_fixed,
    display_intensity,
    display_kg,
    display_kg_per_year,
    display_kwh,
    display_percent,
    display_plain,
    display_ratio,
    display_significant,
)
from scenario import (
    ComparisonTable,
    Scenario,
    ScenarioError,
    SweepPoint,
    SweepSpec,
    breakeven_intensity,
    breakeven_lifetime,
    compare,
    evaluate,
    sweep,
)
from scenario.models import SweepParameter

logger: logging.Logger = logging.getLogger(__name__)

CUSTOM_GRID_LABEL: str = "custom"


def _cell(value: Any, display: str | None = None) -> ReportCell:
    return ReportCell(value=value, display=str(value) if display is None else display)


def _metric_row(metric: str, value: float | None, display: str, unit: str) -> tuple[ReportCell, ...]:
    return (_cell(metric), _cell(value, display), _cell(unit))


def _intensity_display(intensity: GridIntensity) -> str:
    return f"{display_plain(intensity.value)} kg CO2e/kWh"


def _on_off(flag: bool) -> ReportCell:
    return _cell(flag, "on" if flag else "off")


class Reporter:
    def __init__(self, store: ProfileStore, grid_table: GridTable) -> None:
        """
        Initialize Reporter with the profile store and grid table every command resolves against.
        """
        self.store: ProfileStore = store
        self.grid_table: GridTable = grid_table

    def resolve_intensity(self, grid_label: str | None = None, intensity: float | None = None) -> GridIntensity:
        """
        An explicit intensity wins over a grid label; the label defaults to the configured grid.
        """
        if intensity is not None:
            return GridIntensity(label=CUSTOM_GRID_LABEL, value=intensity)

        return self.grid_table.lookup(grid_label or default_grid_label)

    def _scenario(
        self,
        document: ProfileDocument,
        intensity: GridIntensity,
        lifetime: float | None,
        paper_compat: bool,
    ) -> Scenario:
        return Scenario(
            name=document.system.system_name,
            profile_doc=document,
            intensity=intensity,
            lifetime=LifetimePolicy(service_life=lifetime) if lifetime is not None else None,
            paper_compat=paper_compat,
        )

    def _scenario_header(self, scenario: Scenario) -> list[tuple[str, ReportCell]]:
        lifetime: float = scenario.effective_lifetime.service_life

        return [
            ("grid", _cell(scenario.intensity.label)),
            ("grid intensity", _cell(scenario.intensity.value, _intensity_display(scenario.intensity))),
            ("lifetime", _cell(lifetime, f"{display_plain(lifetime)} a")),
            ("paper-compat", _on_off(scenario.paper_compat)),
        ]

    def _finish(
        self,
        command: str,
        title: str,
        header: list[tuple[str, ReportCell]],
        sections: list[ReportSection],
        inputs: dict[str, Any],
        report_format: ReportKind,
    ) -> RenderedReport:
        digest: str = digest_inputs({"command": command, **inputs})
        document: ReportDocument = ReportDocument(
            command=command,
            title=title,
            header=tuple(header),
            sections=tuple(sections),
            inputs_digest=digest,
        )

        return RenderedReport(
            body=render(document, report_format),
            format=ReportFormat(kind=report_format),
            inputs_digest=digest,
        )

    def cmd_estimate(
        self,
        profile_ref: str | Path,
        grid_label: str | None = None,
        lifetime: float | None = None,
        paper_compat: bool = False,
        report_format: ReportKind = "table",
        intensity: float | None = None,
    ) -> RenderedReport:
        """
        Embodied breakdown plus the annual block of one profile.
        """
        document: ProfileDocument = self.store.load_profile(profile_ref)
        grid: GridIntensity = self.resolve_intensity(grid_label, intensity)
        scenario: Scenario = self._scenario(document, grid, lifetime, paper_compat)
        result: LifecycleResult = evaluate(scenario)

        embodied_rows: list[tuple[ReportCell, ...]] = [
            (
                _cell(row.component),
                _cell(row.area_total, "" if row.area_total is None else display_kg(row.area_total)),
                _cell(row.factor_value, "" if row.factor_value is None else display_factor(row.factor_value)),
                _cell(row.kg_co2e, display_kg(row.kg_co2e)),
            )
            for row in result.embodied.rows
        ]
        embodied_rows.append(
            (
                _cell("Total carbon footprint (CF)"),
                _cell(None, ""),
                _cell(None, ""),
                _cell(result.embodied.total, display_kg(result.embodied.total)),
            )
        )

        annual_rows: list[tuple[ReportCell, ...]] = [
            _metric_row("average power", result.average_power, display_fixed(result.average_power, 2), "W"),
            _metric_row("annual energy", result.annual_energy, display_kwh(result.annual_energy), "kWh/a"),
            _metric_row(
                "use phase",
                result.annual_use_phase,
                display_kg_per_year(result.annual_use_phase),
                "kg CO2e/a",
            ),
            _metric_row("amortized basis", result.amortized_basis, display_kg(result.amortized_basis), "kg CO2e"),
            _metric_row(
                "embodied share",
                result.annual_embodied,
                display_kg_per_year(result.annual_embodied),
                "kg CO2e/a",
            ),
            _metric_row("annual total", result.annual_total, display_kg_per_year(result.annual_total), "kg CO2e/a"),
            _metric_row("use-phase share", result.use_phase_share, display_percent(result.use_phase_share), "%"),
            _metric_row(
                "lifetime total",
                result.lifetime_total,
                display_kg_per_year(result.lifetime_total),
                "kg CO2e",
            ),
        ]

        for metric, compute, show, unit in (
            ("break-even intensity", breakeven_intensity, display_intensity, "kg CO2e/kWh"),
            ("break-even lifetime", breakeven_lifetime, lambda value: display_fixed(value, 2), "a"),
        ):
            try:
                value: float | None = compute(scenario)
            except ScenarioError as e:
                logger.info("%s not reported: %s", metric, e)
                value = None

            annual_rows.append(_metric_row(metric, value, "n/a" if value is None else show(value), unit))

        active_power: float | None = bom_active_power(document.system)

        if active_power is not None:
            annual_rows.append(
                _metric_row("component active power", active_power, display_fixed(active_power, 1), "W"),
            )

        header: list[tuple[str, ReportCell]] = [("profile", _cell(document.system.system_name))]
        header.extend(self._scenario_header(scenario))

        return self._finish(
            command="estimate",
            title=f"Life-cycle carbon footprint: {document.system.system_name}",
            header=header,
            sections=[
                ReportSection(
                    name="embodied",
                    title="Embodied emissions",
                    columns=("component", "area_cm2", "factor_kg_per_cm2", "kg_co2e"),
                    rows=tuple(embodied_rows),
                ),
                ReportSection(
                    name="annual",
                    title="Annual footprint",
                    columns=("metric", "value", "unit"),
                    rows=tuple(annual_rows),
                ),
            ],
            inputs={"scenario": scenario.model_dump(mode="json")},
            report_format=report_format,
        )

    def cmd_compare(
        self,
        profile_refs: Sequence[str | Path],
        grid_label: str | None = None,
        lifetime: float | None = None,
        paper_compat: bool = False,
        report_format: ReportKind = "table",
        intensity: float | None = None,
    ) -> RenderedReport:
        """
        Side-by-side comparison with ratios against the first profile.
        """
        if len(profile_refs) < 2:
            raise ScenarioError(f"compare needs at least 2 profiles, got {len(profile_refs)}")

        grid: GridIntensity = self.resolve_intensity(grid_label, intensity)
        scenarios: list[Scenario] = [
            self._scenario(self.store.load_profile(ref), grid, lifetime, paper_compat) for ref in profile_refs
        ]
        table: ComparisonTable = compare(scenarios)
        frame: pd.DataFrame = table.to_frame()

        rows: list[tuple[ReportCell, ...]] = []

        for record in frame.to_dict(orient="records"):
            cells: list[ReportCell] = [_cell(record["scenario"])]

            for column in frame.columns[1:]:
                raw: Any = record[column]
                value: float | None = None if pd.isna(raw) else float(raw)

                if column.endswith("_ratio"):
                    cells.append(_cell(value, display_ratio(value)))
                elif column == "annual_energy":
                    cells.append(_cell(value, display_kwh(value or 0.0)))
                else:
                    cells.append(_cell(value, display_kg_per_year(value or 0.0)))

            rows.append(tuple(cells))

        header: list[tuple[str, ReportCell]] = [("baseline", _cell(table.baseline))]
        header.extend(self._scenario_header(scenarios[0]))

        return self._finish(
            command="compare",
            title="Comparison: " + " vs ".join(scenario.name for scenario in scenarios),
            header=header,
            sections=[
                ReportSection(
                    name="comparison",
                    title="Comparison (ratios against the first profile)",
                    columns=tuple(str(column) for column in frame.columns),
                    rows=tuple(rows),
                )
            ],
            inputs={"scenarios": [scenario.model_dump(mode="json") for scenario in scenarios]},
            report_format=report_format,
        )

    def cmd_sweep(
        self,
        profile_ref: str | Path,
        parameter: SweepParameter,
        values: Sequence[float],
        grid_label: str | None = None,
        lifetime: float | None = None,
        paper_compat: bool = False,
        report_format: ReportKind = "table",
        intensity: float | None = None,
    ) -> RenderedReport:
        """
        One row per swept value.
        """
        if not values:
            raise ScenarioError("sweep needs at least one value")

        document: ProfileDocument = self.store.load_profile(profile_ref)
        grid: GridIntensity = self.resolve_intensity(grid_label, intensity)
        base: Scenario = self._scenario(document, grid, lifetime, paper_compat)
        spec: SweepSpec = SweepSpec(parameter=parameter, values=tuple(values), base=base)
        points: list[SweepPoint] = sweep(spec)

        rows: tuple[tuple[ReportCell, ...], ...] = tuple(
            (
                _cell(point.value, display_plain(point.value)),
                _cell(point.result.annual_energy, display_kwh(point.result.annual_energy)),
                _cell(point.result.annual_use_phase, display_kg_per_year(point.result.annual_use_phase)),
                _cell(point.result.annual_embodied, display_kg_per_year(point.result.annual_embodied)),
                _cell(point.result.annual_total, display_kg_per_year(point.result.annual_total)),
                _cell(point.result.use_phase_share, display_percent(point.result.use_phase_share)),
            )
            for point in points
        )

        header: list[tuple[str, ReportCell]] = [
            ("profile", _cell(document.system.system_name)),
            ("parameter", _cell(parameter)),
        ]
        header.extend(self._scenario_header(base))

        return self._finish(
            command="sweep",
            title=f"Sweep over {parameter}: {document.system.system_name}",
            header=header,
            sections=[
                ReportSection(
                    name="sweep",
                    title=f"Annual footprint by {parameter}",
                    columns=(
                        parameter,
                        "annual_energy_kwh",
                        "annual_use_phase_kg",
                        "annual_embodied_kg",
                        "annual_total_kg",
                        "use_phase_share",
                    ),
                    rows=rows,
                )
            ],
            inputs={"spec": spec.model_dump(mode="json")},
            report_format=report_format,
        )

    def cmd_training(
        self,
        device_hours: float,
        power_kw: float,
        overhead: float = 1.0,
        grid_label: str | None = None,
        report_format: ReportKind = "table",
        intensity: float | None = None,
        compute_note: str | None = None,
    ) -> RenderedReport:
        """
        Energy and emissions of one training run.
        """
        spec: TrainingRunSpec = TrainingRunSpec(
            device_hours=device_hours,
            avg_device_power=power_kw,
            overhead_multiplier=overhead,
            intensity=self.resolve_intensity(grid_label, intensity),
            compute_note=compute_note,
        )
        footprint: TrainingRunFootprint = training_run_footprint(spec)

        rows: tuple[tuple[ReportCell, ...], ...] = (
            _metric_row("device hours", spec.device_hours, display_fixed(spec.device_hours, 0), "h"),
            _metric_row("average device power", spec.avg_device_power, display_plain(spec.avg_device_power), "kW"),
            _metric_row("overhead multiplier", spec.overhead_multiplier, display_plain(spec.overhead_multiplier), ""),
            _metric_row("energy", footprint.energy_kwh, display_kwh(footprint.energy_kwh), "kWh"),
            _metric_row("emissions", footprint.emissions_kg, display_kg_per_year(footprint.emissions_kg), "kg CO2e"),
            _metric_row("emissions (t)", footprint.emissions_t, display_fixed(footprint.emissions_t, 1), "t CO2e"),
        )

        header: list[tuple[str, ReportCell]] = [
            ("grid", _cell(spec.intensity.label)),
            ("grid intensity", _cell(spec.intensity.value, _intensity_display(spec.intensity))),
        ]

        if compute_note:
            header.append(("compute note", _cell(compute_note)))

        return self._finish(
            command="training",
            title="Training-run footprint",
            header=header,
            sections=[
                ReportSection(
                    name="training",
                    title="Training run",
                    columns=("metric", "value", "unit"),
                    rows=rows,
                )
            ],
            inputs={"spec": spec.model_dump(mode="json")},
            report_format=report_format,
        )

    def cmd_fu(
        self,
        profile_ref: str | Path,
        annual_units: float,
        usage_share: float = 1.0,
        unit_name: str = "unit",
        grid_label: str | None = None,
        lifetime: float | None = None,
        paper_compat: bool = False,
        report_format: ReportKind = "table",
        intensity: float | None = None,
    ) -> RenderedReport:
        """
        Footprint per functional unit, next to the annual total it derives from.
        """
        functional_unit: FunctionalUnitSpec = FunctionalUnitSpec(
            unit_name=unit_name,
            annual_units=annual_units,
            usage_share=usage_share,
        )
        document: ProfileDocument = self.store.load_profile(profile_ref)
        grid: GridIntensity = self.resolve_intensity(grid_label, intensity)
        scenario: Scenario = self._scenario(document, grid, lifetime, paper_compat)
        result: LifecycleResult = evaluate(scenario)
        per_unit: float = per_functional_unit(result, functional_unit)
        allocated: float = allocate_share(result.annual_total, functional_unit.usage_share)

        rows: tuple[tuple[ReportCell, ...], ...] = (
            _metric_row("annual total", result.annual_total, display_kg_per_year(result.annual_total), "kg CO2e/a"),
            _metric_row("usage share", functional_unit.usage_share, display_percent(functional_unit.usage_share), "%"),
            _metric_row("allocated", allocated, display_kg_per_year(allocated), "kg CO2e/a"),
            _metric_row(
                "annual units",
                functional_unit.annual_units,
                display_plain(functional_unit.annual_units),
                f"{unit_name}/a",
            ),
            _metric_row("per unit", per_unit, display_significant(per_unit), f"kg CO2e per {unit_name}"),
        )

        header: list[tuple[str, ReportCell]] = [
            ("profile", _cell(document.system.system_name)),
            ("functional unit", _cell(unit_name)),
        ]
        header.extend(self._scenario_header(scenario))

        return self._finish(
            command="fu",
            title=f"Footprint per {unit_name}: {document.system.system_name}",
            header=header,
            sections=[
                ReportSection(
                    name="functional_unit",
                    title="Functional-unit allocation",
                    columns=("metric", "value", "unit"),
                    rows=rows,
                )
            ],
            inputs={
                "scenario": scenario.model_dump(mode="json"),
                "functional_unit": functional_unit.model_dump(mode="json"),
            },
            report_format=report_format,
        )
