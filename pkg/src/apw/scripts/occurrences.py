"""
List the occurrences of a factor within a prefix of a fixed point
"""
import click

from apw.fixedpoint import occurrences
from apw.scripts.utils import (debug_option, exit_on_analysis_error,
                               load_stream, seed_option, spec_argument,
                               window_option)
from apw.utils import debugger_enabled


def find_occurrences(spec_path, factor: str, window: int,
                     seed: str = None) -> list:
    """
    Return the ascending start positions of `factor`, written with the
    specification's symbols, within the first `window` letters
    """
    stream = load_stream(spec_path, seed)
    word = stream.substitution.parse_word(factor)

    return list(occurrences(stream, word, window))


@click.command()
@spec_argument
@click.argument("factor")
@seed_option
@window_option("fixedpoint")
@debug_option
def cli(spec_path, factor, seed, window, debug):
    main(
        spec_path=spec_path, factor=factor, window=window, seed=seed,
        debug=debug
    )


def main(spec_path, factor, window, seed=None, debug=False):
    with debugger_enabled(debug), exit_on_analysis_error():
        for position in find_occurrences(
                spec_path, factor, window=window, seed=seed):
            click.echo(position)


if __name__ == "__main__":
    cli()
