"""`bvh extension-delta`: Δ_g of a 2-cocycle against commutators in its extension."""

from bvh.cochains import Cochain, extension_from_cocycle
from bvh.cohomology import cohomology_space, identify_named_classes
from bvh.commands.common import (
    DEFAULT_PRIME,
    ElementOption,
    FormatOption,
    GroupOption,
    HeavyOption,
    OutputOption,
    PrimeOption,
    central_elements,
    new_report,
    run,
)
from bvh.delta import delta_from_extension
from bvh.errors import UnsupportedGroupError
from bvh.groups import Group
from bvh.models import Command, OutputFormat
from bvh.schemas import ExtensionDeltaReport, Report, RunConfig


def extension_cocycles(group: Group, p: int) -> dict[str, Cochain]:
    """Named degree-2 classes first, then a basis of H^2.

    For a dihedral group the named class z gives the quaternion cover.
    """
    cocycles = {}
    try:
        named = identify_named_classes(group, p, max_degree=2)
    except UnsupportedGroupError:
        named = {}
    for name, c in named.items():
        if c.degree == 2:
            cocycles[name] = c.representative
    for i, phi in enumerate(cohomology_space(group, p, 2).representatives):
        cocycles[f"basis[{i}]"] = phi
    return cocycles


def compute(cfg: RunConfig, group: Group) -> Report:
    elements = central_elements(cfg, group)
    comparisons = []
    for name, alpha in extension_cocycles(group, cfg.p).items():
        ext = extension_from_cocycle(group, alpha)
        for g in elements:
            result = delta_from_extension(ext, g)
            comparisons.append(ExtensionDeltaReport(
                group=group.name,
                extension=name,
                p=cfg.p,
                element=group.label(g),
                hom_values={group.label(h): result.hom(h) for h in result.commutators},
                commutators={group.label(h): c for h, c in result.commutators.items()},
                agrees=result.agrees,
                mismatches=[group.label(h) for h in result.mismatches],
            ).model_dump(mode="json"))
    report = new_report(cfg, group)
    report.results["extensions"] = comparisons
    report.passed = all(c["agrees"] for c in comparisons)
    return report


def extension_delta(
    group: GroupOption,
    p: PrimeOption = DEFAULT_PRIME,
    element: ElementOption = None,
    heavy: HeavyOption = False,
    output_format: FormatOption = OutputFormat.TEXT,
    output: OutputOption = None,
):
    """Compare h ↦ α(g,h) - α(h,g) with [ĝ, ĥ] in the extension defined by α."""
    run(Command.EXTENSION_DELTA, compute, output, group=group, p=p, element=element,
        heavy=heavy, output_format=output_format)
