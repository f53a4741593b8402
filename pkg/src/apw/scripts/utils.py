import contextlib
import csv
import sys

import click

from apw.config import CONFIG
from apw.exceptions import AnalysisError
from apw.fixedpoint import FixedPointStream
from apw.substitution import load_spec
from apw.utils import IntRangeType

CSV_VERSION = 1


@contextlib.contextmanager
def exit_on_analysis_error():
    """
    Print a one-line diagnostic naming the failed gate and exit with
    status 1 if an AnalysisError is raised.

    Arguments rejected by the library with a ValueError are reported as
    usage errors instead, which exit with status 2.
    """
    try:
        yield
    except AnalysisError as exc:
        click.echo(f"{exc.error}: {exc.detail}", err=True)
        sys.exit(1)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def load_stream(spec_path, seed: str = None) -> FixedPointStream:
    """
    Load a substitution from a specification file and return the fixed
    point starting with `seed`, or with the first available seed
    """
    substitution = load_spec(spec_path)
    return FixedPointStream.from_symbol(substitution, seed)


def format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.3f}"

    return str(value)


def write_csv(command: str, columns: list, rows, output: str = "-"):
    """
    Write rows as CSV preceded by a version comment and a header row.

    :param rows: Iterable of sequences with one value per column
    """
    with click.open_file(output, "w") as file_:
        file_.write(f"# apw {command} v{CSV_VERSION}\n")

        writer = csv.writer(file_, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_value(value) for value in row])


def spec_argument(func):
    return click.argument(
        "spec_path",
        type=click.Path(exists=True, file_okay=True, dir_okay=False)
    )(func)


def debug_option(func):
    return click.option(
        "--debug/--no-debug", default=False, envvar="APW_DEBUG",
        help=(
            "Enable debug mode. Any unhandled exception will launch a "
            "debugger."
        )
    )(func)


def seed_option(func):
    return click.option(
        "--seed",
        help=(
            "Letter the fixed point starts with. Defaults to the first "
            "letter whose image begins with itself."
        ),
        type=str, default=None
    )(func)


def window_option(section: str):
    """
    Option for the prefix length used as evidence, defaulting to the
    window of the given configuration section
    """
    def decorator(func):
        return click.option(
            "--window",
            help="Length of the fixed point prefix to scan",
            type=click.IntRange(min=1),
            default=lambda: int(CONFIG[section]["window"]),
            show_default=f"[{section}] window"
        )(func)

    return decorator


def grid_options(func):
    func = click.option(
        "--k-range",
        help="Block counts to test, written as START:STOP",
        type=IntRangeType(min=1),
        default=lambda: f"1:{CONFIG['grid']['k_stop']}"
    )(func)
    func = click.option(
        "--n-range",
        help="Starting positions to test, written as START:STOP",
        type=IntRangeType(),
        default=lambda: f"0:{CONFIG['grid']['n_stop']}"
    )(func)
    return func


def jobs_option(func):
    return click.option(
        "--jobs",
        help="Number of worker threads used for the grid",
        type=click.IntRange(min=1),
        default=lambda: int(CONFIG["scan"]["jobs"])
    )(func)


def output_options(func):
    func = click.option(
        "--format", "output_format",
        help="Output format",
        type=click.Choice(["csv", "text"]),
        default="csv"
    )(func)
    func = click.option(
        "--output",
        help="File to write the results to. Defaults to stdout.",
        type=click.Path(dir_okay=False, writable=True),
        default="-"
    )(func)
    return func
