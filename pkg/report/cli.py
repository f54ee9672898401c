# standard
import argparse
import logging
import sys
from collections.abc import Sequence
from typing import Any, NoReturn

# internal
from lca.errors import CarbonAccountingError
from profile_store import ProfileStore
from report.commands import Reporter
from report.models import REPORT_KINDS, RenderedReport
from scenario.models import SWEEP_PARAMETERS

PROG: str = "compute-carbon"

EXIT_OK: int = 0
EXIT_VALIDATION: int = 1
EXIT_IO: int = 2


class UsageError(CarbonAccountingError):
    """
    Command-line misuse (unknown option, missing argument, empty value list).
    """


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def _add_global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    """
    Global flags, accepted before or after the subcommand. Subparsers suppress defaults so they do
    not overwrite a flag given before the subcommand.
    """

    def default(value: Any) -> Any:
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--format", choices=REPORT_KINDS, default=default("table"), help="report format")
    parser.add_argument("--grid", default=default(None), help="grid intensity label")
    parser.add_argument("--grids", default=default(None), help="grid table CSV (label,kg_co2e_per_kwh)")
    parser.add_argument("--intensity", type=float, default=default(None), help="explicit kg CO2e per kWh")
    parser.add_argument("--paper-compat", action="store_true", default=default(False))
    parser.add_argument("--data-dir", default=default(None), help="overrides COMPUTE_CARBON_DATA")
    parser.add_argument("-v", "--verbose", action="count", default=default(0))


def _parse_values(text: str) -> list[float]:
    values: list[float] = []

    for item in text.split(","):
        if not item.strip():
            continue

        try:
            values.append(float(item))
        except ValueError as e:
            raise UsageError(f"sweep value {item.strip()!r} is not a number") from e

    return values


def build_parser() -> argparse.ArgumentParser:
    parser: argparse.ArgumentParser = _ArgumentParser(
        prog=PROG,
        description="Life-cycle carbon accounting for compute systems.",
    )
    _add_global_options(parser, suppress=False)
    subparsers: Any = parser.add_subparsers(dest="command", required=True)

    estimate: argparse.ArgumentParser = subparsers.add_parser("estimate", help="footprint of one profile")
    estimate.add_argument("profile", help="preset name or profile file")
    estimate.add_argument("--lifetime", type=float, default=None, help="service life override in years")

    compare: argparse.ArgumentParser = subparsers.add_parser("compare", help="compare two or more profiles")
    compare.add_argument("profiles", nargs="+")
    compare.add_argument("--lifetime", type=float, default=None)

    sweep: argparse.ArgumentParser = subparsers.add_parser("sweep", help="sensitivity sweep over one parameter")
    sweep.add_argument("profile")
    sweep.add_argument("--parameter", choices=SWEEP_PARAMETERS, required=True)
    sweep.add_argument("--values", required=True, help="comma-separated values, e.g. 3,5")
    sweep.add_argument("--lifetime", type=float, default=None)

    training: argparse.ArgumentParser = subparsers.add_parser("training", help="training-run footprint")
    training.add_argument("--device-hours", type=float, required=True)
    training.add_argument("--power", type=float, required=True, help="average kW per device")
    training.add_argument("--overhead", type=float, default=1.0, help="site overhead multiplier")
    training.add_argument("--compute-note", default=None)

    fu: argparse.ArgumentParser = subparsers.add_parser("fu", help="footprint per functional unit")
    fu.add_argument("profile")
    fu.add_argument("--units", type=float, required=True, help="functional units per year")
    fu.add_argument("--share", type=float, default=1.0, help="usage share of the system in (0, 1]")
    fu.add_argument("--unit-name", default="unit")
    fu.add_argument("--lifetime", type=float, default=None)

    presets: argparse.ArgumentParser = subparsers.add_parser("presets", help="list bundled profile presets")

    for subparser in (estimate, compare, sweep, training, fu, presets):
        _add_global_options(subparser, suppress=True)

    return parser


def _configure_logging(verbosity: int) -> None:
    level: int = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG

    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def run(args: argparse.Namespace) -> str:
    """
    Execute a parsed command and return the report body.
    """
    store: ProfileStore = ProfileStore(args.data_dir)

    if args.command == "presets":
        return "".join(f"{name}\n" for name in store.index_presets())

    reporter: Reporter = Reporter(store, store.load_grid_table(args.grids))
    common: dict[str, Any] = {
        "grid_label": args.grid,
        "report_format": args.format,
        "intensity": args.intensity,
    }
    report: RenderedReport

    match args.command:
        case "estimate":
            report = reporter.cmd_estimate(
                args.profile,
                lifetime=args.lifetime,
                paper_compat=args.paper_compat,
                **common,
            )
        case "compare":
            if len(args.profiles) < 2:
                raise UsageError("compare needs at least 2 profiles")

            report = reporter.cmd_compare(
                args.profiles,
                lifetime=args.lifetime,
                paper_compat=args.paper_compat,
                **common,
            )
        case "sweep":
            values: list[float] = _parse_values(args.values)

            if not values:
                raise UsageError("sweep needs at least one value")

            report = reporter.cmd_sweep(
                args.profile,
                args.parameter,
                values,
                lifetime=args.lifetime,
                paper_compat=args.paper_compat,
                **common,
            )
        case "training":
            report = reporter.cmd_training(
                args.device_hours,
                args.power,
                overhead=args.overhead,
                compute_note=args.compute_note,
                **common,
            )
        case "fu":
            report = reporter.cmd_fu(
                args.profile,
                annual_units=args.units,
                usage_share=args.share,
                unit_name=args.unit_name,
                lifetime=args.lifetime,
                paper_compat=args.paper_compat,
                **common,
            )
        case _:
            raise UsageError(f"unknown command {args.command!r}")

    return report.body


def _fail(kind: str, error: BaseException) -> None:
    message: str = "; ".join(line.strip() for line in str(error).splitlines() if line.strip())
    sys.stderr.write(f"{PROG}: error kind={kind} message={message}\n")


def main(argv: Sequence[str] | None = None) -> int:
    """
    CLI entry point: 0 on success, 1 on usage or validation errors, 2 on I/O errors.
    """
    try:
        args: argparse.Namespace = build_parser().parse_args(argv)
        _configure_logging(args.verbose)
        body: str = run(args)
    except UsageError as e:
        _fail("usage", e)
        return EXIT_VALIDATION
    except OSError as e:
        _fail("io", e)
        return EXIT_IO
    except ValueError as e:
        _fail("validation", e)
        return EXIT_VALIDATION

    sys.stdout.write(body)

    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
