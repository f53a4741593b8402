"""
Measure the smallest integer constant C such that every cell of a grid has
an anti-power with block length at most C*k
"""
import click

from apw.scripts.utils import (debug_option, exit_on_analysis_error,
                               grid_options, jobs_option, load_stream,
                               seed_option, spec_argument)
from apw.theorem import empirical_constant
from apw.utils import debugger_enabled


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
@debug_option
def cli(spec_path, seed, n_range, k_range, ell_max, jobs, debug):
    main(
        spec_path=spec_path, n_range=n_range, k_range=k_range,
        ell_max=ell_max, seed=seed, jobs=jobs, debug=debug
    )


def main(spec_path, n_range, k_range, ell_max, seed=None, jobs=1,
         debug=False):
    with debugger_enabled(debug), exit_on_analysis_error():
        stream = load_stream(spec_path, seed)
        constant = empirical_constant(
            stream, n_range, k_range, ell_cap=ell_max, jobs=jobs
        )
        click.echo(f"C_empirical={constant}")


if __name__ == "__main__":
    cli()
