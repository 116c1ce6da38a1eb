"""`bvh delta`: matrices of Δ_g per degree."""

from bvh.commands.common import (
    DEFAULT_PRIME,
    ElementOption,
    FormatOption,
    GroupOption,
    HeavyOption,
    MaxDegreeOption,
    OutputOption,
    PrimeOption,
    central_elements,
    new_report,
    run,
)
from bvh.delta import delta_matrix
from bvh.groups import Group
from bvh.models import Command, OutputFormat
from bvh.schemas import DeltaMatrixReport, Report, RunConfig


def compute(cfg: RunConfig, group: Group) -> Report:
    matrices = []
    for g in central_elements(cfg, group):
        for n in range(1, cfg.max_degree + 1):
            dm = delta_matrix(group, cfg.p, g, n)
            matrices.append(DeltaMatrixReport(
                group=group.name,
                p=cfg.p,
                element=group.label(g),
                degree=n,
                rank=dm.rank,
                matrix=dm.matrix.tolist(),
                source_dimension=dm.source_dimension,
                target_dimension=dm.target_dimension,
                image=[list(c.coordinates) for c in dm.image()],
            ).model_dump(mode="json"))
    report = new_report(cfg, group)
    report.results["delta"] = matrices
    return report


def delta(
    group: GroupOption,
    p: PrimeOption = DEFAULT_PRIME,
    max_degree: MaxDegreeOption = 3,
    element: ElementOption = None,
    heavy: HeavyOption = False,
    output_format: FormatOption = OutputFormat.TEXT,
    output: OutputOption = None,
):
    """Δ_g: H^n -> H^{n-1} for each central g (or --element), n = 1..--max-degree."""
    run(Command.DELTA, compute, output, group=group, p=p, max_degree=max_degree,
        element=element, heavy=heavy, output_format=output_format)
