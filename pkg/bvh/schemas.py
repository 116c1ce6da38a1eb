"""Pydantic schemas for group input, cochain documents and CLI reports."""

from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from bvh.config import settings
from bvh.models import CheckStatus, Command, HypothesisClause, OutputFormat, WitnessKind


def _check_prime(p: int) -> int:
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"p must be prime, got {p}")
    return p


# ============= Input Schemas =============


class RawGroupDocument(BaseModel):
    """Raw Cayley table input with 0-based element indices."""

    name: str = Field(..., description="Group name used in reports")
    order: int = Field(..., gt=0, description="Number of elements")
    identity: int = Field(0, ge=0, description="Index of the identity element")
    mul: list[list[int]] = Field(
        ..., description="Multiplication table, mul[a][b] = ab"
    )
    labels: Optional[list[str]] = Field(None, description="Per-element labels")


class CochainDocument(BaseModel):
    """A normalized cochain; omitted tuples are zero."""

    group: str
    p: int
    degree: int = Field(..., ge=0)
    values: list[tuple[list[int], int]] = Field(
        default_factory=list, description="Pairs (tuple of element indices, scalar)"
    )


class RunConfig(BaseModel):
    """Validated configuration of one CLI command."""

    command: Command
    group: str = Field(..., description="Catalog spec or @file.json")
    p: int = Field(settings.DEFAULT_PRIME, description="Coefficient prime")
    max_degree: int = Field(3, ge=0, le=5, description="Highest cohomological degree")
    element: Optional[str] = Field(None, description="Central element label or alias")
    heavy: bool = Field(False, description="Allow matrices above the heavy threshold")
    output_format: OutputFormat = OutputFormat.TEXT
    seed: int = Field(settings.DEFAULT_SEED, description="Seed for sampled checks")

    @field_validator("p")
    @classmethod
    def validate_prime(cls, value: int) -> int:
        return _check_prime(value)


# ============= Group Schemas =============


class GroupInfoReport(BaseModel):
    """Group invariants."""

    name: str
    order: int
    prime: Optional[int] = None
    abelian: bool
    generators: dict[str, str] = Field(default_factory=dict)
    named_elements: dict[str, str] = Field(default_factory=dict)
    center_order: int
    derived_order: int
    frattini_order: Optional[int] = None
    class_representatives: list[str]
    class_sizes: list[int]
    centraliser_orders: list[int]


# ============= Cohomology Schemas =============


class CohomologyReport(BaseModel):
    """Dimensions of H^n(G, F_p) and coordinates of named classes."""

    group: str
    p: int
    dimensions: list[int] = Field(..., description="dim H^n for n = 0..max degree")
    named_classes: dict[str, list[int]] = Field(default_factory=dict)


class DeltaMatrixReport(BaseModel):
    """Matrix of Δ_g: H^n -> H^{n-1} in the chosen class bases."""

    group: str
    p: int
    element: str
    degree: int
    rank: int
    matrix: list[list[int]] = Field(..., description="rows index H^{n-1}, columns H^n")
    source_dimension: int
    target_dimension: int
    image: list[list[int]] = Field(
        default_factory=list, description="Basis of the image in H^{n-1}"
    )


class ExtensionDeltaReport(BaseModel):
    """Δ_g of an extension cocycle compared with commutators of lifts."""

    group: str
    extension: str = Field("", description="Which 2-cocycle defined the extension")
    p: int
    element: str
    hom_values: dict[str, int]
    commutators: dict[str, int]
    agrees: bool
    mismatches: list[str] = Field(default_factory=list)


# ============= Hochschild Schemas =============


class HHElementDocument(BaseModel):
    """Element of HH^n(kG) keyed by conjugacy representative label."""

    group: str
    p: int
    degree: int
    components: dict[str, list[int]]


class HHDegreeReport(BaseModel):
    """Dimension of HH^n(kG) with its centraliser components."""

    degree: int
    dimension: int
    components: dict[str, int]


class HypothesisReport(BaseModel):
    """Which centraliser clause holds for one double coset representative."""

    g: str
    h: str
    u: str
    clause: HypothesisClause


class HHReport(BaseModel):
    group: str
    p: int
    degrees: list[HHDegreeReport]
    hypothesis: list[HypothesisReport] = Field(default_factory=list)


# ============= Lie Algebra Schemas =============


class LieAlgebraDocument(BaseModel):
    """Structure constants [b_i, b_j] = sum_k c b_k, listed for i < j when nonzero."""

    p: int
    dimension: int
    labels: list[str]
    structure_constants: list[tuple[int, int, int, int]] = Field(
        default_factory=list, description="Entries (i, j, k, c)"
    )


class LieAnalysisReport(BaseModel):
    derived_series_dims: list[int]
    lower_central_dims: list[int]
    soluble: bool
    derived_length: Optional[int] = None
    nilpotent: bool


class WitnessReport(BaseModel):
    """Non-solubility witness with its verified relations."""

    kind: WitnessKind
    elements: dict[str, list[int]] = Field(default_factory=dict)
    relations: list[str] = Field(default_factory=list)
    verified: bool = False


# ============= Verification Schemas =============


class CheckResult(BaseModel):
    """Outcome of one invariant check."""

    name: str
    status: CheckStatus
    detail: str = ""
    witness: Optional[str] = None


class Report(BaseModel):
    """Top-level report envelope."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(settings.REPORT_SCHEMA, alias="schema")
    command: Optional[Command] = None
    group: Optional[str] = None
    p: Optional[int] = None
    results: dict[str, Any] = Field(default_factory=dict)
    checks: list[CheckResult] = Field(default_factory=list)
    passed: bool = True
