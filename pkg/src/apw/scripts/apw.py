"""
Entry point grouping the anti-power analysis commands under 'apw'
"""
import click

from apw.scripts import (antipower, check, constants, empirical, expand,
                         letter, occurrences, recog, scan, verify)

COMMANDS = {
    "check": check,
    "expand": expand,
    "letter": letter,
    "occurrences": occurrences,
    "antipower": antipower,
    "scan": scan,
    "recog": recog,
    "constants": constants,
    "verify": verify,
    "empirical": empirical,
}


@click.group()
def cli():
    """
    Anti-powers in fixed points of uniform substitutions
    """


for name, module in COMMANDS.items():
    cli.add_command(module.cli, name=name)


if __name__ == "__main__":
    cli()
