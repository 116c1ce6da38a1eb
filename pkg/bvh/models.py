"""Enumerations shared across the library, reports and CLI."""

from enum import Enum


class Command(str, Enum):
    """CLI commands."""

    INFO = "info"
    COHOMOLOGY = "cohomology"
    DELTA = "delta"
    HH1_LIE = "hh1-lie"
    HH = "hh"
    EXTENSION_DELTA = "extension-delta"
    VERIFY = "verify"


class OutputFormat(str, Enum):
    """Report output formats."""

    TEXT = "text"
    JSON = "json"


class GroupFamily(str, Enum):
    """Catalog families understood by the group-spec grammar."""

    CYCLIC = "cyclic"
    ELEMENTARY_ABELIAN = "elementary-abelian"
    ABELIAN = "abelian"
    DIHEDRAL = "dihedral"
    QUATERNION = "quaternion"
    SEMIDIHEDRAL = "semidihedral"
    EXTRASPECIAL = "extraspecial"
    MODULAR = "modular"
    SYMMETRIC = "symmetric"
    DIRECT = "direct"
    CENTRAL = "central"


class HypothesisClause(str, Enum):
    """Which clause of the centraliser hypothesis holds for a double coset."""

    EQUAL_CENTRALISERS = "i"
    TRANSFERS_VANISH = "ii"
    NEITHER = "neither"


class WitnessKind(str, Enum):
    """Kinds of non-solubility witness."""

    SL2_TRIPLE = "sl2-triple"
    SELF_REPRODUCING_SUBSPACE = "self-reproducing-subspace"
    HYPOTHESIS_NOT_MET = "hypothesis-not-met"


class CheckStatus(str, Enum):
    """Outcome of a single verification check."""

    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"
