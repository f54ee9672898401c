# internal
from lca.errors import CarbonAccountingError


class ScenarioError(CarbonAccountingError):
    pass
