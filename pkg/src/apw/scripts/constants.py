"""
Derive N', the proof constant C = (N' + 1) * m and optionally check the
congruence of long factors modulo powers of m
"""
import click
import toml

from apw.recognizability import check_power_recognizability, derive_N_prime
from apw.scripts.utils import (debug_option, exit_on_analysis_error,
                               load_stream, seed_option, spec_argument,
                               window_option)
from apw.theorem import proof_constant
from apw.utils import debugger_enabled


def derive_constants(spec_path, window: int, seed: str = None,
                     max_length: int = None, max_power: int = None,
                     powers=(), power_window: int = None) -> dict:
    """
    Return the derived constants as a flat dictionary.

    For every i in `powers` the dictionary also tells whether factors of
    length N' * m^i have all of their occurrences congruent modulo m^i
    within `power_window` letters.
    """
    stream = load_stream(spec_path, seed)
    report = derive_N_prime(
        stream, window=window, L_max=max_length, l_max=max_power
    )

    constants = report.as_dict()
    constants["C"] = proof_constant(stream, report)
    constants["p_desubstitutes"] = bool(report.p_desubstitutes)

    for i in powers:
        verdict = check_power_recognizability(
            stream, i, report.N_prime * stream.m ** i,
            power_window or window
        )
        constants[f"power_{i}_congruent"] = verdict.holds

    return constants


@click.command()
@spec_argument
@seed_option
@window_option("recognizability")
@click.option(
    "--max-length",
    help="Longest factor length tried when estimating N",
    type=click.IntRange(min=1), default=None
)
@click.option(
    "--max-power",
    help="Highest power tried when estimating N1",
    type=click.IntRange(min=1), default=None
)
@click.option(
    "--power", "powers",
    help=(
        "Check that factors of length N' * m^i occur only at positions "
        "congruent modulo m^i. Can be given multiple times."
    ),
    type=click.IntRange(min=1), multiple=True
)
@click.option(
    "--power-window",
    help="Prefix length used for the congruence checks",
    type=click.IntRange(min=1), default=None
)
@debug_option
def cli(spec_path, seed, window, max_length, max_power, powers,
        power_window, debug):
    main(
        spec_path=spec_path, window=window, seed=seed,
        max_length=max_length, max_power=max_power, powers=powers,
        power_window=power_window, debug=debug
    )


def main(spec_path, window, seed=None, max_length=None, max_power=None,
         powers=(), power_window=None, debug=False):
    with debugger_enabled(debug), exit_on_analysis_error():
        constants = derive_constants(
            spec_path=spec_path, window=window, seed=seed,
            max_length=max_length, max_power=max_power, powers=powers,
            power_window=power_window
        )
        click.echo(toml.dumps(constants), nl=False)


if __name__ == "__main__":
    cli()
