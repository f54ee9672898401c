# internal
from lca.errors import CarbonAccountingError


class ProfileSyntaxError(CarbonAccountingError):
    """
    The document text is not well-formed; line and column are 1-based.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None) -> None:
        self.line: int | None = line
        self.column: int | None = column
        position: str = f"line {line}, column {column}: " if line is not None else ""

        super().__init__(f"{position}{message}")


class ProfileValidationError(CarbonAccountingError):
    def __init__(self, field: str, message: str) -> None:
        self.field: str = field

        super().__init__(f"{field}: {message}")


class UnsupportedSchemaVersion(CarbonAccountingError):
    pass


class UnknownFactorError(CarbonAccountingError):
    pass


class GridTableError(CarbonAccountingError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line: int | None = line
        position: str = f"line {line}: " if line is not None else ""

        super().__init__(f"{position}{message}")


class UnknownGridLabel(CarbonAccountingError):
    pass
