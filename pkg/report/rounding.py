# standard
from decimal import ROUND_HALF_UP, Decimal, localcontext


def _exact(value: float) -> Decimal:
    exact: Decimal = Decimal(repr(value))

    if not exact.is_finite():
        raise ValueError(f"cannot display non-finite value {value!r}")

    return exact


def round_half_up(value: float, places: int) -> Decimal:
    """
    Round the shortest decimal form of a float half-up to a fixed number of places.
    """
    exact: Decimal = _exact(value)

    with localcontext() as context:
        # enough digits for every integer digit plus the requested places
        context.prec = max(context.prec, exact.adjusted() + places + 2)

        return exact.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP)


def display_fixed(value: float, places: int) -> str:
    return f"{round_half_up(value, places):,}"


def display_kg(value: float) -> str:
    """
    Embodied breakdown register: kg CO2e to one decimal.
    """
    return display_fixed(value, 1)


def display_kg_per_year(value: float) -> str:
    return display_fixed(value, 0)


def display_kwh(value: float) -> str:
    return display_fixed(value, 0)


def display_percent(share: float) -> str:
    return f"{round_half_up(share * 100, 0)}%"


def display_ratio(value: float | None) -> str:
    return "n/a" if value is None else display_fixed(value, 2)


def display_intensity(value: float) -> str:
    return display_fixed(value, 5)


def display_factor(value: float) -> str:
    # at least one decimal, otherwise as written (3.0, 1.8, 0.06)
    exact: Decimal = _exact(value)
    exponent: int | str = exact.as_tuple().exponent

    if isinstance(exponent, int) and exponent < -1:
        return str(exact)

    return str(exact.quantize(Decimal("0.1")))


def display_significant(value: float, digits: int = 3) -> str:
    """
    Round half-up to a number of significant digits, for small per-unit values.
    """
    exact: Decimal = _exact(value)

    if exact == 0:
        return "0"

    quantum: Decimal = Decimal(1).scaleb(exact.adjusted() - digits + 1)
    rounded: Decimal = exact.quantize(quantum, rounding=ROUND_HALF_UP)

    # carried into the next power of ten (0.9999 -> 1.000)
    if rounded.adjusted() != exact.adjusted():
        rounded = rounded.quantize(quantum.scaleb(1), rounding=ROUND_HALF_UP)

    return format(rounded, "f")


def display_plain(value: float) -> str:
    return f"{value:g}"
