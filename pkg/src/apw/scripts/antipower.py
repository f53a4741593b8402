"""
Find the shortest block length of a k-anti-power at a single position of
a fixed point
"""
import click

from apw.antipower import AntiPowerQuery, AntiPowerResult, min_block_length
from apw.scripts.utils import (debug_option, exit_on_analysis_error,
                               format_value, load_stream, seed_option,
                               spec_argument)
from apw.utils import debugger_enabled


def find_anti_power(spec_path, n: int, k: int, ell_max: int,
                    seed: str = None) -> AntiPowerResult:
    stream = load_stream(spec_path, seed)
    return min_block_length(stream, AntiPowerQuery(n=n, k=k, ell_max=ell_max))


def format_result(result: AntiPowerResult) -> str:
    if not result.found:
        return "min_ell=none ratio=none"

    return f"min_ell={result.min_ell} ratio={format_value(result.ratio)}"


@click.command()
@spec_argument
@seed_option
@click.option(
    "-n", "--position", "n",
    help="Starting position of the anti-power",
    type=click.IntRange(min=0), default=0, show_default=True
)
@click.option(
    "-k", "--blocks", "k",
    help="Number of blocks",
    type=click.IntRange(min=1), required=True
)
@click.option(
    "--ell-max",
    help="Largest block length to try",
    type=click.IntRange(min=1), required=True
)
@debug_option
def cli(spec_path, seed, n, k, ell_max, debug):
    main(
        spec_path=spec_path, n=n, k=k, ell_max=ell_max, seed=seed,
        debug=debug
    )


def main(spec_path, n, k, ell_max, seed=None, debug=False):
    with debugger_enabled(debug), exit_on_analysis_error():
        click.echo(
            format_result(
                find_anti_power(
                    spec_path=spec_path, n=n, k=k, ell_max=ell_max,
                    seed=seed
                )
            )
        )


if __name__ == "__main__":
    cli()
