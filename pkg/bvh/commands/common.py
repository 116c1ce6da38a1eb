"""Options shared by every command and the run loop from config to report."""

import logging
from collections.abc import Callable
from pathlib import Path
from typing import Annotated, Optional

import typer
from pydantic import ValidationError

from bvh.catalog import construct_group
from bvh.config import settings
from bvh.errors import BVHError
from bvh.groups import Group, center
from bvh.models import Command, OutputFormat
from bvh.report import emit_report
from bvh.schemas import Report, RunConfig
from bvh.store import store

logger = logging.getLogger(__name__)

Compute = Callable[[RunConfig, Group], Report]

GroupOption = Annotated[
    str,
    typer.Option(
        "--group", "-g", help="Catalog spec such as dihedral:8, or @file.json"
    ),
]
PrimeOption = Annotated[int, typer.Option("--p", help="Coefficient prime")]
MaxDegreeOption = Annotated[
    int, typer.Option("--max-degree", help="Highest cohomological degree (at most 5)")
]
ElementOption = Annotated[
    Optional[str],
    typer.Option("--element", help="Central element: label, generator or alias"),
]
HeavyOption = Annotated[
    bool, typer.Option("--heavy", help="Allow linear algebra above the heavy threshold")
]
FormatOption = Annotated[OutputFormat, typer.Option("--format", help="Report format")]
SeedOption = Annotated[int, typer.Option("--seed", help="Seed for sampled checks")]
OutputOption = Annotated[
    Optional[Path], typer.Option("--output", "-o", help="Write the report to a file")
]

DEFAULT_PRIME = settings.DEFAULT_PRIME
DEFAULT_SEED = settings.DEFAULT_SEED


def central_elements(cfg: RunConfig, group: Group) -> list[int]:
    """The element named by --element, or every nontrivial central element."""
    if cfg.element is not None:
        return [group.element(cfg.element)]
    return list(center(group).nonidentity)


def new_report(cfg: RunConfig, group: Group) -> Report:
    return Report(command=cfg.command, group=group.name, p=cfg.p)


def execute(cfg: RunConfig, compute: Compute) -> Report:
    """Build the group, apply the heavy flag and compute the report."""
    group = construct_group(cfg.group)
    store.configure(heavy=cfg.heavy)
    logger.info(f"Running {cfg.command.value} on {group.name} over F_{cfg.p}")
    return compute(cfg, group)


def run(command: Command, compute: Compute, output: Optional[Path], **options) -> None:
    """Validate options, compute, emit; exit 1 on failed checks and 2 on errors."""
    try:
        cfg = RunConfig(command=command, **options)
        report = execute(cfg, compute)
    except ValidationError as e:
        typer.echo(f"error: {e.errors()[0]['msg']}", err=True)
        raise typer.Exit(code=2)
    except BVHError as e:
        logger.error(f"{command.value} failed: {e.detail}")
        typer.echo(f"error: {e.detail}", err=True)
        raise typer.Exit(code=e.exit_code)

    text = emit_report(report, cfg.output_format)
    if output is not None:
        output.write_text(text, encoding="utf-8")
    else:
        typer.echo(text, nl=False)
    if not report.passed:
        raise typer.Exit(code=1)
