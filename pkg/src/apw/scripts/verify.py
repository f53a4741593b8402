"""
Verify the anti-power bound C*k with the derived proof constant over a grid
of starting positions and block counts
"""
import click

from apw.recognizability import derive_N_prime
from apw.scripts.utils import (debug_option, exit_on_analysis_error,
                               format_value, grid_options, jobs_option,
                               load_stream, output_options, seed_option,
                               spec_argument, window_option, write_csv)
from apw.theorem import TheoremReport, proof_constant, verify_bound
from apw.utils import debugger_enabled

COLUMNS = ["n", "k", "i", "block_len", "min_ell", "ratio", "ok"]


def verify_grid(spec_path, n_range, k_range, window: int, seed: str = None,
                constant: int = None, construction: bool = True,
                jobs: int = 1) -> TheoremReport:
    """
    Derive the constants and verify the bound on every cell of the grid

    :param constant: Constant C to verify instead of the proof constant
    :param construction: Whether to check the explicit witness blocks as well
    """
    stream = load_stream(spec_path, seed)
    report = derive_N_prime(stream, window=window)

    if constant is None:
        constant = proof_constant(stream, report)

    return verify_bound(
        stream, n_range, k_range, constant,
        N_prime=report.N_prime if construction else None, jobs=jobs
    )


def format_summary(report: TheoremReport) -> str:
    return (
        f"C={report.C} N_prime={format_value(report.N_prime)} "
        f"cells={len(report.rows)} violations={len(report.violations)} "
        f"construction_failures={len(report.construction_failures)} "
        f"C_empirical={report.C_empirical}"
    )


@click.command()
@spec_argument
@seed_option
@grid_options
@window_option("recognizability")
@click.option(
    "--constant",
    help="Constant C to verify. Defaults to the derived proof constant.",
    type=click.IntRange(min=1), default=None
)
@click.option(
    "--construction/--no-construction", default=True,
    help="Check the explicit witness blocks as well"
)
@jobs_option
@output_options
@debug_option
def cli(spec_path, seed, n_range, k_range, window, constant, construction,
        jobs, output, output_format, debug):
    main(
        spec_path=spec_path, n_range=n_range, k_range=k_range,
        window=window, seed=seed, constant=constant,
        construction=construction, jobs=jobs, output=output,
        output_format=output_format, debug=debug
    )


def main(spec_path, n_range, k_range, window, seed=None, constant=None,
         construction=True, jobs=1, output="-", output_format="csv",
         debug=False):
    with debugger_enabled(debug), exit_on_analysis_error():
        report = verify_grid(
            spec_path=spec_path, n_range=n_range, k_range=k_range,
            window=window, seed=seed, constant=constant,
            construction=construction, jobs=jobs
        )

        if output_format == "csv":
            write_csv(
                "verify", COLUMNS,
                (
                    (
                        row.n, row.k, row.i, row.block_len, row.min_ell,
                        row.ratio, row.ok
                    )
                    for row in report.rows
                ),
                output=output
            )
        else:
            with click.open_file(output, "w") as file_:
                file_.write(format_summary(report) + "\n")
                for n, k in report.violations:
                    file_.write(f"violation: n={n} k={k}\n")
                for n, k in report.construction_failures:
                    file_.write(f"construction failure: n={n} k={k}\n")


if __name__ == "__main__":
    cli()
