"""
Estimate the recognizability constants N and N1 of a substitution from a
prefix of its fixed point
"""
import click

from apw.recognizability import (check_aligned_congruence, estimate_N1,
                                 estimate_recognizability_constant)
from apw.scripts.utils import (debug_option, exit_on_analysis_error,
                               load_stream, seed_option, spec_argument,
                               window_option)
from apw.utils import debugger_enabled


def estimate_constants(spec_path, window: int, seed: str = None,
                       max_length: int = None, max_power: int = None) -> list:
    """
    Estimate N and N1 and return the report as lines of text
    """
    stream = load_stream(spec_path, seed)
    substitution = stream.substitution

    constant = estimate_recognizability_constant(
        stream, L_max=max_length, window=window
    )
    lines = [f"N={constant.value} window={window}"]

    counterexample = constant.counterexample
    if counterexample:
        lines.append(
            f"counterexample: "
            f"{substitution.format_word(counterexample.factor)} at "
            f"{counterexample.first} and {counterexample.second}"
        )

    lines.append(
        f"N1={estimate_N1(stream, l_max=max_power, window=window)}"
    )

    verdict = check_aligned_congruence(stream, constant.value, window)
    lines.append(
        f"congruent mod {stream.m} from length {verdict.bound}: "
        f"{'yes' if verdict.holds else 'no'}"
    )

    return lines


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
@debug_option
def cli(spec_path, seed, window, max_length, max_power, debug):
    main(
        spec_path=spec_path, window=window, seed=seed,
        max_length=max_length, max_power=max_power, debug=debug
    )


def main(spec_path, window, seed=None, max_length=None, max_power=None,
         debug=False):
    with debugger_enabled(debug), exit_on_analysis_error():
        for line in estimate_constants(
                spec_path=spec_path, window=window, seed=seed,
                max_length=max_length, max_power=max_power):
            click.echo(line)


if __name__ == "__main__":
    cli()
