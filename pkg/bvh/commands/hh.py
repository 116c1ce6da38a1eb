"""`bvh hh`: HH^n(kG) through the centraliser decomposition."""

import itertools
import logging

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
from bvh.groups import Group, conjugacy_classes, prime_power
from bvh.hochschild import (
    HHElement,
    HHSpace,
    check_hypothesis_cent,
    hh_basis,
    hh_space,
    sw_product,
)
from bvh.linalg import row_reduce
from bvh.models import Command, OutputFormat
from bvh.schemas import HHReport, Report, RunConfig

logger = logging.getLogger(__name__)


def _flatten(space: HHSpace, x: HHElement) -> dict[int, int]:
    """Coordinates of x in the concatenated component bases of its space."""
    out, offset = {}, 0
    for g, component in space.components.items():
        c = x.component(g)
        if c is not None:
            out.update({offset + i: a for i, a in enumerate(c.coordinates) if a})
        offset += component.dimension
    return out


def product_rank(group: Group, p: int) -> int:
    """Rank of the SW product HH^1 ⊗ HH^1 -> HH^2."""
    basis = hh_basis(hh_space(group, p, 1))
    target = hh_space(group, p, 2)
    products = (_flatten(target, sw_product(x, y))
                for x, y in itertools.product(basis, repeat=2))
    return row_reduce(products, target.dimension, p).dimension


def compute(cfg: RunConfig, group: Group) -> Report:
    degrees = [hh_space(group, cfg.p, n).to_report() for n in range(cfg.max_degree + 1)]
    hypothesis = []
    pk = prime_power(group.order)
    if pk is not None and pk[0] == cfg.p:
        reps = conjugacy_classes(group).representatives
        for g, h in itertools.product(reps, repeat=2):
            hypothesis.extend(check_hypothesis_cent(group, g, h, cfg.p))
    else:
        logger.info(
            f"Skipping the centraliser hypothesis: {group.name} is not a {cfg.p}-group"
        )
    report = new_report(cfg, group)
    report.results["hh"] = HHReport(
        group=group.name, p=cfg.p, degrees=degrees, hypothesis=hypothesis
    ).model_dump(mode="json")
    if cfg.max_degree >= 2:
        report.results["product_rank_1x1"] = product_rank(group, cfg.p)
    return report


def hh(
    group: GroupOption,
    p: PrimeOption = DEFAULT_PRIME,
    max_degree: MaxDegreeOption = 2,
    heavy: HeavyOption = False,
    output_format: FormatOption = OutputFormat.TEXT,
    output: OutputOption = None,
):
    """HH^n(kG) per component, the centraliser hypothesis and HH^1 products."""
    run(Command.HH, compute, output, group=group, p=p, max_degree=max_degree,
        heavy=heavy, output_format=output_format)
