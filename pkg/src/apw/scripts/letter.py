"""
Print letters of a fixed point at arbitrary positions without materializing
the prefix before them
"""
import click

from apw.scripts.utils import (debug_option, exit_on_analysis_error,
                               load_stream, seed_option, spec_argument)
from apw.utils import debugger_enabled


def letters_at(spec_path, positions, seed: str = None) -> list:
    """
    Return the symbol at each position
    """
    stream = load_stream(spec_path, seed)
    return [
        stream.substitution.symbols[stream.letter_at(position)]
        for position in positions
    ]


@click.command()
@spec_argument
@seed_option
@click.argument(
    "positions", nargs=-1, required=True, type=click.IntRange(min=0)
)
@debug_option
def cli(spec_path, seed, positions, debug):
    main(spec_path=spec_path, positions=positions, seed=seed, debug=debug)


def main(spec_path, positions, seed=None, debug=False):
    with debugger_enabled(debug), exit_on_analysis_error():
        for symbol in letters_at(spec_path, positions, seed=seed):
            click.echo(symbol)


if __name__ == "__main__":
    cli()
