# internal
from .factor import (
    COMPONENT_CLASSES,
    ComponentClass,
    EmissionFactor,
)
from .bom import (
    ComponentSpec,
    SystemBom,
)
from .power import (
    FRACTION_SUM_TOLERANCE,
    HOURS_PER_YEAR,
    PowerMode,
    PowerProfile,
)
from .usage import (
    FunctionalUnitSpec,
    GridIntensity,
    LifetimePolicy,
    TrainingRunSpec,
)
from .result import (
    EmbodiedBreakdown,
    EmbodiedRow,
    LifecycleResult,
    TrainingRunFootprint,
)

__all__ = [
    "COMPONENT_CLASSES",
    "ComponentClass",
    "EmissionFactor",
    "ComponentSpec",
    "SystemBom",
    "FRACTION_SUM_TOLERANCE",
    "HOURS_PER_YEAR",
    "PowerMode",
    "PowerProfile",
    "FunctionalUnitSpec",
    "GridIntensity",
    "LifetimePolicy",
    "TrainingRunSpec",
    "EmbodiedBreakdown",
    "EmbodiedRow",
    "LifecycleResult",
    "TrainingRunFootprint",
]
