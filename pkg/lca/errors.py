class CarbonAccountingError(ValueError):
    """
    Base class for every domain error raised by the carbon accounting packages.
    """


class InvariantViolation(CarbonAccountingError):
    """
    A named invariant of a domain type or operation does not hold.
    """

    def __init__(self, invariant: str, message: str, field: str | None = None) -> None:
        self.invariant: str = invariant
        self.field: str | None = field
        location: str = f" ({field})" if field else ""

        super().__init__(f"[{invariant}]{location} {message}")
