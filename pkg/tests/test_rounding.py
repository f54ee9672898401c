# standard
from decimal import Decimal

# third-party
import pytest

# internal
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
    round_half_up,
)


def test_round_half_up_uses_shortest_decimal_form() -> None:
    # binary 2.675 is slightly below 2.675; the displayed figure still rounds up
    assert round_half_up(2.675, 2) == Decimal("2.68")
    assert round_half_up(0.125, 2) == Decimal("0.13")
    assert display_fixed(2.5, 0) == "3"
    assert display_fixed(-2.5, 0) == "-3"


@pytest.mark.parametrize(
    ("value", "expected"),
    [
        (24.36, "24.4"),
        (1105.92, "1,105.9"),
        (10.8, "10.8"),
        (35.724, "35.7"),
        (1176.804, "1,176.8"),
        (1200.0, "1,200.0"),
    ],
)
def test_display_kg(value: float, expected: str) -> None:
    assert display_kg(value) == expected


def test_annual_registers() -> None:
    assert display_kwh(4084.35) == "4,084"
    assert display_kwh(5146.5) == "5,147"
    assert display_kg_per_year(1633.74) == "1,634"
    assert display_kg_per_year(257.325) == "257"
    assert display_kg_per_year(240.0) == "240"
    assert display_percent(1633.74 / 1873.74) == "87%"


def test_ratio_and_intensity() -> None:
    assert display_ratio(5146.5 / 4084.35) == "1.26"
    assert display_ratio(None) == "n/a"
    assert display_intensity(0.4) == "0.40000"
    assert display_intensity(235.3608 / 4084.35) == "0.05763"


@pytest.mark.parametrize(("value", "expected"), [(3.0, "3.0"), (1.8, "1.8"), (0.06, "0.06"), (12.0, "12.0")])
def test_display_factor(value: float, expected: str) -> None:
    assert display_factor(value) == expected


@pytest.mark.parametrize(
    ("value", "expected"),
    [(0.0093687, "0.00937"), (1873.74 / 1874, "1.00"), (0.0, "0"), (123456.0, "123000"), (0.5, "0.500")],
)
def test_display_significant(value: float, expected: str) -> None:
    assert display_significant(value) == expected


def test_display_plain() -> None:
    assert display_plain(5.0) == "5"
    assert display_plain(0.4327) == "0.4327"


def test_rounding_beyond_default_decimal_precision() -> None:
    assert display_kwh(1e28) == "10,000,000,000,000,000,000,000,000,000"
    assert display_kg(1e27) == "1,000,000,000,000,000,000,000,000,000.0"
    assert round_half_up(1.2345e30, 0) == Decimal("1234500000000000000000000000000")


@pytest.mark.parametrize("value", [float("inf"), float("-inf"), float("nan")])
def test_non_finite_values_are_rejected(value: float) -> None:
    with pytest.raises(ValueError, match="non-finite"):
        display_fixed(value, 0)

    with pytest.raises(ValueError, match="non-finite"):
        display_significant(value)
