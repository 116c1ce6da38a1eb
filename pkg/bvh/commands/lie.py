"""`bvh hh1-lie`: the Lie algebra HH¹(kG), its series and witnesses."""

from bvh.commands.common import (
    DEFAULT_PRIME,
    FormatOption,
    GroupOption,
    OutputOption,
    PrimeOption,
    new_report,
    run,
)
from bvh.groups import Group, prime_power
from bvh.lie import (
    build_hh1_lie,
    construct_nonnilpotent_witness,
    construct_nonsoluble_witness,
    derived_series_analysis,
    extraspecial_expectation,
    verify_lie_axioms,
)
from bvh.models import CheckStatus, Command, OutputFormat
from bvh.schemas import CheckResult, Report, RunConfig


def compute(cfg: RunConfig, group: Group) -> Report:
    lie = build_hh1_lie(group, cfg.p)
    report = new_report(cfg, group)
    report.results["algebra"] = lie.algebra.to_document().model_dump(mode="json")
    axioms = verify_lie_axioms(lie.algebra)
    report.checks.append(axioms)
    if axioms.status is CheckStatus.FAILED:
        report.passed = False
        return report

    analysis = derived_series_analysis(lie.algebra)
    report.results["analysis"] = analysis.model_dump(mode="json")
    pk = prime_power(group.order)
    if pk is None or pk[0] != cfg.p:
        return report
    witness = construct_nonsoluble_witness(group, cfg.p, lie)
    report.results["witness"] = witness.model_dump(mode="json")
    nonnilpotent = construct_nonnilpotent_witness(group, cfg.p, lie)
    report.results["nonnilpotent"] = {
        "h": group.label(nonnilpotent.h),
        "x": nonnilpotent.x.tolist(),
        "y": nonnilpotent.y.tolist(),
    }
    report.checks.append(CheckResult(
        name="not-nilpotent",
        status=CheckStatus.PASSED if nonnilpotent.verified else CheckStatus.FAILED,
        detail="[x, y] = y",
    ))
    if witness.elements:
        report.checks.append(CheckResult(
            name=f"witness-{witness.kind.value}",
            status=CheckStatus.PASSED if witness.verified else CheckStatus.FAILED,
            detail="; ".join(witness.relations),
        ))
    expected = extraspecial_expectation(group)
    if expected is not None:
        report.results["extraspecial_expected_length"] = expected
        report.checks.append(CheckResult(
            name="extraspecial-derived-length",
            status=(CheckStatus.PASSED if analysis.derived_length == expected
                    else CheckStatus.FAILED),
            detail=f"expected {expected}, found {analysis.derived_length}",
        ))
    report.passed = all(c.status is not CheckStatus.FAILED for c in report.checks)
    return report


def hh1_lie(
    group: GroupOption,
    p: PrimeOption = DEFAULT_PRIME,
    output_format: FormatOption = OutputFormat.TEXT,
    output: OutputOption = None,
):
    """Structure constants of HH¹(kG), derived and lower central series, witnesses."""
    run(Command.HH1_LIE, compute, output, group=group, p=p, output_format=output_format)
