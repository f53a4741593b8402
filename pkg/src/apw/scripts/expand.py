"""
Print a prefix of the fixed point of a substitution
"""
import click

from apw.scripts.utils import (debug_option, exit_on_analysis_error,
                               load_stream, seed_option, spec_argument)
from apw.utils import debugger_enabled


def expand_fixed_point(spec_path, length: int, seed: str = None) -> str:
    """
    Return the prefix of the given length using the specification's
    symbols
    """
    stream = load_stream(spec_path, seed)
    return stream.substitution.format_word(stream.prefix(length))


@click.command()
@spec_argument
@seed_option
@click.option(
    "-n", "--length",
    help="Length of the prefix",
    type=click.IntRange(min=0), required=True
)
@debug_option
def cli(spec_path, seed, length, debug):
    main(spec_path=spec_path, length=length, seed=seed, debug=debug)


def main(spec_path, length, seed=None, debug=False):
    with debugger_enabled(debug), exit_on_analysis_error():
        click.echo(
            expand_fixed_point(spec_path=spec_path, length=length, seed=seed)
        )


if __name__ == "__main__":
    cli()
