"""`bvh verify`: the full invariant suite."""

from bvh.commands.common import (
    DEFAULT_PRIME,
    DEFAULT_SEED,
    FormatOption,
    GroupOption,
    HeavyOption,
    MaxDegreeOption,
    OutputOption,
    PrimeOption,
    SeedOption,
    new_report,
    run,
)
from bvh.groups import Group
from bvh.models import CheckStatus, Command, OutputFormat
from bvh.schemas import Report, RunConfig
from bvh.verification import VerificationSuite


def compute(cfg: RunConfig, group: Group) -> Report:
    report = new_report(cfg, group)
    report.checks = VerificationSuite.run(group, cfg.p, cfg.max_degree, cfg.seed)
    counts = {status.value: 0 for status in CheckStatus}
    for check in report.checks:
        counts[check.status.value] += 1
    report.results["summary"] = counts
    report.passed = counts[CheckStatus.FAILED.value] == 0
    return report


def verify(
    group: GroupOption,
    p: PrimeOption = DEFAULT_PRIME,
    max_degree: MaxDegreeOption = 3,
    heavy: HeavyOption = False,
    seed: SeedOption = DEFAULT_SEED,
    output_format: FormatOption = OutputFormat.TEXT,
    output: OutputOption = None,
):
    """Run every invariant check; exit status 1 if any check fails."""
    run(Command.VERIFY, compute, output, group=group, p=p, max_degree=max_degree,
        heavy=heavy, seed=seed, output_format=output_format)
