"""
Compute minimal anti-power block lengths over a grid of starting positions
and block counts
"""
import click

from apw.antipower import scan
from apw.scripts.antipower import format_result
from apw.scripts.utils import (debug_option, exit_on_analysis_error,
                               grid_options, jobs_option, load_stream,
                               output_options, seed_option, spec_argument,
                               write_csv)
from apw.utils import debugger_enabled

COLUMNS = ["n", "k", "min_ell", "ratio"]


def scan_grid(spec_path, n_range, k_range, ell_max: int, seed: str = None,
              jobs: int = 1) -> list:
    """
    Return an AntiPowerResult for every (n, k) of the grid, ordered by n
    and then by k
    """
    stream = load_stream(spec_path, seed)
    return scan(stream, n_range, k_range, ell_max=ell_max, jobs=jobs)


@click.command()
@spec_argument
@seed_option
@grid_options
@click.option(
    "--ell-max",
    help="Largest block length to try",
    type=click.IntRange(min=1), required=True
)
@jobs_option
@output_options
@debug_option
def cli(spec_path, seed, n_range, k_range, ell_max, jobs, output,
        output_format, debug):
    main(
        spec_path=spec_path, n_range=n_range, k_range=k_range,
        ell_max=ell_max, seed=seed, jobs=jobs, output=output,
        output_format=output_format, debug=debug
    )


def main(spec_path, n_range, k_range, ell_max, seed=None, jobs=1,
         output="-", output_format="csv", debug=False):
    with debugger_enabled(debug), exit_on_analysis_error():
        results = scan_grid(
            spec_path=spec_path, n_range=n_range, k_range=k_range,
            ell_max=ell_max, seed=seed, jobs=jobs
        )

        if output_format == "csv":
            write_csv(
                "scan", COLUMNS,
                (
                    (result.n, result.k, result.min_ell, result.ratio)
                    for result in results
                ),
                output=output
            )
        else:
            with click.open_file(output, "w") as file_:
                for result in results:
                    file_.write(
                        f"n={result.n} k={result.k} "
                        f"{format_result(result)}\n"
                    )


if __name__ == "__main__":
    cli()
