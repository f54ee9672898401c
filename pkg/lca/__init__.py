# internal
from .calculator import (
    allocate_share,
    allocate_tenants,
    amortize_embodied,
    annual_energy,
    average_power,
    bom_active_power,
    component_embodied,
    implied_device_power,
    implied_intensity,
    lifecycle_total,
    per_functional_unit,
    system_embodied,
    training_run_footprint,
    use_phase_emissions,
)
from .errors import (
    CarbonAccountingError,
    InvariantViolation,
)

__all__ = [
    "allocate_share",
    "allocate_tenants",
    "amortize_embodied",
    "annual_energy",
    "average_power",
    "bom_active_power",
    "component_embodied",
    "implied_device_power",
    "implied_intensity",
    "lifecycle_total",
    "per_functional_unit",
    "system_embodied",
    "training_run_footprint",
    "use_phase_emissions",
    "CarbonAccountingError",
    "InvariantViolation",
]
