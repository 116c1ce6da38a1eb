"""Main Typer application."""

import logging
from typing import Annotated

import typer

from bvh.commands import cohomology, delta, extension, hh, info, lie, verify
from bvh.commands.common import execute
from bvh.config import settings
from bvh.models import Command
from bvh.schemas import Report, RunConfig

COMMANDS = {
    Command.INFO: info.compute,
    Command.COHOMOLOGY: cohomology.compute,
    Command.DELTA: delta.compute,
    Command.HH: hh.compute,
    Command.HH1_LIE: lie.compute,
    Command.EXTENSION_DELTA: extension.compute,
    Command.VERIFY: verify.compute,
}

# Create Typer application
app = typer.Typer(
    name=settings.PROJECT_NAME,
    help="BV operators on group cohomology and the Lie algebra HH^1(kG) over F_p.",
    no_args_is_help=True,
    add_completion=False,
)


@app.callback()
def main(
    log_level: Annotated[
        str, typer.Option("--log-level", help="Logging level")
    ] = settings.LOG_LEVEL,
):
    """Configure logging once for the whole process."""
    logging.basicConfig(
        level=log_level.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


# Include commands
app.command("info")(info.info)
app.command("cohomology")(cohomology.cohomology)
app.command("delta")(delta.delta)
app.command("hh")(hh.hh)
app.command("hh1-lie")(lie.hh1_lie)
app.command("extension-delta")(extension.extension_delta)
app.command("verify")(verify.verify)


def execute_command(cfg: RunConfig) -> tuple[Report, int]:
    """Library entry: the report for a config and the exit status the CLI would use."""
    report = execute(cfg, COMMANDS[cfg.command])
    return report, 0 if report.passed else 1


if __name__ == "__main__":
    app()
