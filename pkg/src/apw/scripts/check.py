"""
Check a substitution specification: uniformity, primitivity, available
fixed point seeds and aperiodicity of the fixed point
"""
import click

from apw.config import CONFIG
from apw.exceptions import NotPrimitive, PeriodicInput
from apw.fixedpoint import (FixedPointStream, aperiodicity_check,
                            shared_factor_set)
from apw.gates import aperiodicity_limit
from apw.scripts.utils import (debug_option, exit_on_analysis_error,
                               seed_option, spec_argument, window_option)
from apw.substitution import fixed_point_seeds, is_primitive, load_spec
from apw.utils import debugger_enabled


def check_substitution(spec_path, seed: str = None, window: int = None,
                       require_primitive: bool = False,
                       require_aperiodic: bool = False,
                       compare_seeds: bool = False) -> str:
    """
    Check a specification file and return a one-line summary

    :param spec_path: Path to the specification file
    :param seed: Seed of the fixed point checked for aperiodicity
    :param window: Prefix length used for the aperiodicity check
    :param require_primitive: Raise NotPrimitive if the substitution
                              isn't primitive
    :param require_aperiodic: Raise PeriodicInput if the fixed point is
                              eventually periodic
    :param compare_seeds: Also check whether the fixed points of all seeds
                          have the same factors within the window
    """
    if window is None:
        window = int(CONFIG["fixedpoint"]["window"])

    substitution = load_spec(spec_path)
    verdict = is_primitive(substitution)

    if require_primitive and not verdict:
        raise NotPrimitive(
            f"No power of the incidence matrix of {spec_path} is positive"
        )

    parts = [f"uniform m={substitution.m}"]
    if verdict:
        parts.append(f"primitive (n={verdict.exponent})")
    else:
        parts.append("not primitive")

    seeds = fixed_point_seeds(substitution)
    parts.append(
        "seeds: " + ",".join(substitution.symbols[seed_] for seed_ in seeds)
    )

    if seeds and substitution.m >= 2:
        stream = FixedPointStream.from_symbol(substitution, seed)
        result = aperiodicity_check(
            stream, n_max=aperiodicity_limit(window), window=window
        )

        if result.periodic:
            if require_aperiodic:
                raise PeriodicInput(
                    f"Fixed point from '{stream.seed_symbol}' has at most "
                    f"{result.length} factors of length {result.length}"
                )
            parts.append(f"periodic at length {result.length}")
        else:
            parts.append(f"aperiodic up to {result.length}")

        if compare_seeds and len(seeds) > 1:
            length = aperiodicity_limit(window)
            streams = [
                FixedPointStream(substitution, seed_) for seed_ in seeds
            ]
            if shared_factor_set(streams, length, window):
                parts.append(f"seeds share factors of length {length}")
            else:
                parts.append(f"seeds differ in factors of length {length}")

    return "; ".join(parts)


@click.command()
@spec_argument
@seed_option
@window_option("fixedpoint")
@click.option(
    "--require-primitive/--no-require-primitive", default=False,
    help="Fail if the substitution is not primitive"
)
@click.option(
    "--require-aperiodic/--no-require-aperiodic", default=False,
    help="Fail if the fixed point is eventually periodic"
)
@click.option(
    "--compare-seeds/--no-compare-seeds", default=False,
    help="Compare the factors of the fixed points of all seeds"
)
@debug_option
def cli(spec_path, seed, window, require_primitive, require_aperiodic,
        compare_seeds, debug):
    main(
        spec_path=spec_path, seed=seed, window=window,
        require_primitive=require_primitive,
        require_aperiodic=require_aperiodic, compare_seeds=compare_seeds,
        debug=debug
    )


def main(spec_path, seed=None, window=None, require_primitive=False,
         require_aperiodic=False, compare_seeds=False, debug=False):
    with debugger_enabled(debug), exit_on_analysis_error():
        click.echo(
            check_substitution(
                spec_path=spec_path, seed=seed, window=window,
                require_primitive=require_primitive,
                require_aperiodic=require_aperiodic,
                compare_seeds=compare_seeds
            )
        )


if __name__ == "__main__":
    cli()
