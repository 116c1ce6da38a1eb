"""`bvh cohomology`: dimensions of H^n(G, F_p) and named classes."""

from bvh.cohomology import identify_named_classes, poincare_dims
from bvh.commands.common import (
    DEFAULT_PRIME,
    FormatOption,
    GroupOption,
    HeavyOption,
    MaxDegreeOption,
    OutputOption,
    PrimeOption,
    new_report,
    run,
)
from bvh.errors import UnsupportedGroupError
from bvh.groups import Group
from bvh.models import Command, OutputFormat
from bvh.schemas import CohomologyReport, Report, RunConfig


def compute(cfg: RunConfig, group: Group) -> Report:
    dims = poincare_dims(group, cfg.p, cfg.max_degree)
    try:
        named = {
            name: list(c.coordinates)
            for name, c in identify_named_classes(group, cfg.p, cfg.max_degree).items()
        }
    except UnsupportedGroupError:
        named = {}
    report = new_report(cfg, group)
    report.results["cohomology"] = CohomologyReport(
        group=group.name, p=cfg.p, dimensions=dims, named_classes=named
    ).model_dump(mode="json")
    return report


def cohomology(
    group: GroupOption,
    p: PrimeOption = DEFAULT_PRIME,
    max_degree: MaxDegreeOption = 3,
    heavy: HeavyOption = False,
    output_format: FormatOption = OutputFormat.TEXT,
    output: OutputOption = None,
):
    """dim H^n(G, F_p) for n up to --max-degree."""
    run(Command.COHOMOLOGY, compute, output, group=group, p=p, max_degree=max_degree,
        heavy=heavy, output_format=output_format)
