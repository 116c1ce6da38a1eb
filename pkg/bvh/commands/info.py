"""`bvh info`: group invariants."""

from bvh.commands.common import (
    DEFAULT_PRIME,
    FormatOption,
    GroupOption,
    OutputOption,
    PrimeOption,
    new_report,
    run,
)
from bvh.groups import (
    Group,
    center,
    centraliser,
    conjugacy_classes,
    derived_subgroup,
    frattini_subgroup,
    prime_power,
)
from bvh.models import Command, OutputFormat
from bvh.schemas import GroupInfoReport, Report, RunConfig


def compute(cfg: RunConfig, group: Group) -> Report:
    pk = prime_power(group.order)
    classes = conjugacy_classes(group)
    reps = classes.representatives
    info = GroupInfoReport(
        name=group.name,
        order=group.order,
        prime=pk[0] if pk else None,
        abelian=group.is_abelian(),
        generators={name: group.label(a) for name, a in group.generators.items()},
        named_elements={name: group.label(a) for name, a in group.named.items()},
        center_order=center(group).order,
        derived_order=derived_subgroup(group).order,
        frattini_order=frattini_subgroup(group).order if pk else None,
        class_representatives=[group.label(r) for r in reps],
        class_sizes=[len(classes.class_elements[r]) for r in reps],
        centraliser_orders=[centraliser(group, r).order for r in reps],
    )
    report = new_report(cfg, group)
    report.results["group"] = info.model_dump(mode="json")
    return report


def info(
    group: GroupOption,
    p: PrimeOption = DEFAULT_PRIME,
    output_format: FormatOption = OutputFormat.TEXT,
    output: OutputOption = None,
):
    """Order, center, derived and Frattini subgroups, conjugacy classes."""
    run(Command.INFO, compute, output, group=group, p=p, output_format=output_format)
