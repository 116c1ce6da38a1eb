"""The Lie algebra HH¹(kG): structure constants, series and non-solubility witnesses."""

import logging
from typing import Optional, Sequence

import numpy as np

from bvh.cochains import Cochain, conjugate_cochain
from bvh.cohomology import HomBasis, h1_homs
from bvh.errors import DimensionMismatchError, LieAxiomError, UnsupportedGroupError
from bvh.groups import (
    Group,
    center,
    centraliser,
    conjugacy_classes,
    conjugator,
    derived_subgroup,
    frattini_subgroup,
    prime_power,
    subgroup_generated,
)
from bvh.hochschild import bracket_degree_one_cochains
from bvh.linalg import FpSubspaceBasis, SparseVector
from bvh.models import CheckStatus, WitnessKind
from bvh.schemas import (
    CheckResult,
    LieAlgebraDocument,
    LieAnalysisReport,
    WitnessReport,
)

logger = logging.getLogger(__name__)


def _sparse(v: np.ndarray) -> SparseVector:
    return {int(i): int(a) for i, a in enumerate(v) if a}


class LieAlgebra:
    """Finite-dimensional Lie algebra over F_p given by structure constants.

    ``constants[i, j, k]`` is the coefficient of b_k in [b_i, b_j]. Every ordered
    pair is stored, so antisymmetry is a property to check, not an assumption.
    """

    def __init__(
        self, p: int, constants: np.ndarray, labels: Optional[Sequence[str]] = None
    ):
        d = constants.shape[0]
        if constants.shape != (d, d, d):
            raise DimensionMismatchError(
                f"structure constants of shape {constants.shape}"
            )
        self.p = p
        self.constants = np.asarray(constants, dtype=np.int64) % p
        if labels is None:
            labels = [f"b{i}" for i in range(d)]
        self.labels = list(labels)

    @property
    def dimension(self) -> int:
        return self.constants.shape[0]

    def basis_vector(self, i: int) -> np.ndarray:
        v = np.zeros(self.dimension, dtype=np.int64)
        v[i] = 1
        return v

    def bracket(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return np.einsum("i,j,ijk->k", u, v, self.constants) % self.p

    def brackets(self, first: np.ndarray, second: np.ndarray) -> np.ndarray:
        """All [a, b] for rows a of ``first`` and b of ``second``, as rows."""
        if not len(first) or not len(second) or not self.dimension:
            return np.zeros((0, self.dimension), dtype=np.int64)
        partial = np.tensordot(first, self.constants, axes=([1], [0])) % self.p
        table = np.einsum("bj,ajk->abk", second, partial) % self.p
        return table.reshape(-1, self.dimension)

    def span(self, vectors: np.ndarray) -> FpSubspaceBasis:
        return FpSubspaceBasis.from_vectors((_sparse(v) for v in vectors),
                                            self.dimension, self.p)

    def dense(self, basis: FpSubspaceBasis) -> np.ndarray:
        out = np.zeros((basis.dimension, self.dimension), dtype=np.int64)
        for r, v in enumerate(basis.vectors()):
            for i, a in v.items():
                out[r, i] = a
        return out

    def bracket_span(self, first: np.ndarray, second: np.ndarray) -> FpSubspaceBasis:
        return self.span(self.brackets(first, second))

    def to_document(self) -> LieAlgebraDocument:
        entries = [
            (int(i), int(j), int(k), int(self.constants[i, j, k]))
            for i, j, k in zip(*np.nonzero(self.constants))
            if i < j
        ]
        return LieAlgebraDocument(
            p=self.p,
            dimension=self.dimension,
            labels=self.labels,
            structure_constants=entries,
        )

    @classmethod
    def from_document(cls, document: LieAlgebraDocument) -> "LieAlgebra":
        d = document.dimension
        constants = np.zeros((d, d, d), dtype=np.int64)
        for i, j, k, c in document.structure_constants:
            constants[i, j, k] = c
            constants[j, i, k] = -c
        return cls(document.p, constants, document.labels)

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dimension}, p={self.p})"


# ============= Axioms =============


def verify_lie_axioms(algebra: LieAlgebra) -> CheckResult:
    """Alternating, antisymmetric and Jacobi on all basis triples."""
    c, p, d = algebra.constants, algebra.p, algebra.dimension
    name = "lie-axioms"
    for i in range(d):
        if c[i, i].any():
            return CheckResult(name=name, status=CheckStatus.FAILED,
                               detail="[b, b] is nonzero", witness=str((i, i)))
    asym = np.argwhere((c + c.transpose(1, 0, 2)) % p)
    if len(asym):
        i, j, _ = asym[0]
        return CheckResult(
            name=name,
            status=CheckStatus.FAILED,
            detail="[b_i, b_j] != -[b_j, b_i]",
            witness=str((int(i), int(j))),
        )
    for i in range(d):
        # [[b_i, b_j], b_k] + [[b_j, b_k], b_i] + [[b_k, b_i], b_j] for all j, k
        first = np.einsum("jm,mkl->jkl", c[i], c)
        second = np.einsum("jkm,ml->jkl", c, c[:, i, :])
        third = np.einsum("km,mjl->jkl", c[:, i, :], c)
        bad = np.argwhere(((first + second + third) % p).any(axis=2))
        if len(bad):
            j, k = bad[0]
            return CheckResult(name=name, status=CheckStatus.FAILED,
                               detail="Jacobi identity fails",
                               witness=str((i, int(j), int(k))))
    return CheckResult(name=name, status=CheckStatus.PASSED,
                       detail=f"dimension {d}, {d ** 3} triples")


def require_lie_axioms(algebra: LieAlgebra) -> None:
    result = verify_lie_axioms(algebra)
    if result.status is CheckStatus.FAILED:
        logger.error(f"Lie axiom violation: {result.detail} at {result.witness}")
        raise LieAxiomError(result.detail, witness=result.witness)


# ============= Series =============


def _series(algebra: LieAlgebra, lower_central: bool) -> list[int]:
    whole = np.eye(algebra.dimension, dtype=np.int64)
    current = whole
    dims = [algebra.dimension]
    while len(current):
        left = whole if lower_central else current
        following = algebra.dense(algebra.bracket_span(left, current))
        if len(following) == len(current):
            break
        dims.append(len(following))
        current = following
    return dims


def derived_series_analysis(algebra: LieAlgebra) -> LieAnalysisReport:
    require_lie_axioms(algebra)
    derived = _series(algebra, lower_central=False)
    lower = _series(algebra, lower_central=True)
    soluble = derived[-1] == 0
    report = LieAnalysisReport(
        derived_series_dims=derived,
        lower_central_dims=lower,
        soluble=soluble,
        derived_length=len(derived) - 1 if soluble else None,
        nilpotent=lower[-1] == 0,
    )
    logger.info(f"Derived series {derived}, lower central series {lower}")
    return report


# ============= HH¹(kG) =============


class HochschildLie:
    """HH¹(kG) with basis ordered by class representative, then by hom coordinate."""

    def __init__(self, group: Group, p: int, algebra: LieAlgebra,
                 bases: dict[int, HomBasis], offsets: dict[int, int]):
        self.group = group
        self.p = p
        self.algebra = algebra
        self.bases = bases
        self.offsets = offsets

    @property
    def dimension(self) -> int:
        return self.algebra.dimension

    def vector(self, rep: int, coordinates: Sequence[int]) -> np.ndarray:
        v = np.zeros(self.dimension, dtype=np.int64)
        start = self.offsets[rep]
        v[start:start + len(coordinates)] = coordinates
        return v % self.p

    def element(self, g: int, hom: Cochain) -> np.ndarray:
        """Coordinates of the class g ⊗ hom, hom being a hom on C_G(g)."""
        r = conjugacy_classes(self.group).class_of[g]
        if r != g:
            hom = conjugate_cochain(hom, conjugator(self.group, g, r))
        return self.vector(r, self.bases[r].coordinates(hom))

    def bracket(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return self.algebra.bracket(u, v)


def build_hh1_lie(group: Group, p: int) -> HochschildLie:
    """Structure constants of HH¹(kG) from the direct bracket on every basis pair."""
    reps = conjugacy_classes(group).representatives
    bases: dict[int, HomBasis] = {}
    offsets: dict[int, int] = {}
    labels: list[str] = []
    for r in reps:
        bases[r] = h1_homs(centraliser(group, r), p)
        offsets[r] = len(labels)
        labels.extend(f"{group.label(r)}|{i}" for i in range(bases[r].dimension))
    d = len(labels)
    constants = np.zeros((d, d, d), dtype=np.int64)
    homs = {r: bases[r].homs() for r in reps}
    for g in reps:
        for a, x in enumerate(homs[g]):
            i = offsets[g] + a
            for h in reps:
                for b, y in enumerate(homs[h]):
                    j = offsets[h] + b
                    terms = bracket_degree_one_cochains(group, p, g, x, h, y)
                    for r, phi in terms.items():
                        start = offsets[r]
                        coordinates = bases[r].coordinates(phi)
                        constants[i, j, start:start + len(coordinates)] += coordinates
    algebra = LieAlgebra(p, constants, labels)
    logger.info(f"Built HH¹({group.name}) over F_{p}: dimension {d}")
    return HochschildLie(group, p, algebra, bases, offsets)


# ============= Witnesses =============


def _require_p_group(group: Group, p: int) -> None:
    pk = prime_power(group.order)
    if pk is None or pk[0] != p:
        raise UnsupportedGroupError(f"{group.name} is not a {p}-group")


def _labelled(vectors: dict[str, np.ndarray]) -> dict[str, list[int]]:
    return {name: [int(a) for a in v] for name, v in vectors.items()}


def construct_nonsoluble_witness(group: Group, p: int,
                                 lie: Optional[HochschildLie] = None) -> WitnessReport:
    """sl(2) triple for odd p, or a subspace U with [U,U] ⊇ U, when |Z : Z∩Φ| ≥ 3."""
    _require_p_group(group, p)
    z = center(group)
    frattini = frattini_subgroup(group)
    z_phi = z.intersection(frattini)
    index = z.order // z_phi.order
    if index < 3:
        return WitnessReport(kind=WitnessKind.HYPOTHESIS_NOT_MET,
                             relations=[f"|Z : Z∩Φ| = {index}"])
    if lie is None:
        lie = build_hh1_lie(group, p)
    inv = group.inverse
    g = next(a for a in z.nonidentity if a not in frattini)

    if p != 2:
        x = h1_homs(group, p, [g]).homs()[0]
        e = lie.element(g, x)
        f = (-lie.element(inv[g], x)) % p
        h = (-2 * lie.element(group.identity, x)) % p
        checks = {
            "[e,f] = h": np.array_equal(lie.bracket(e, f), h),
            "[h,e] = 2e": np.array_equal(lie.bracket(h, e), (2 * e) % p),
            "[h,f] = -2f": np.array_equal(lie.bracket(h, f), (-2 * f) % p),
        }
        verified = all(checks.values())
        if not verified:
            logger.error(f"sl(2) relations failed for {group.name}: {checks}")
        return WitnessReport(kind=WitnessKind.SL2_TRIPLE,
                             elements=_labelled({"e": e, "f": f, "h": h}),
                             relations=[r for r, ok in checks.items() if ok],
                             verified=verified)

    # index ≥ 4: a second central element independent of g modulo Φ
    span = subgroup_generated(group, z_phi.elements + (g,))
    h = next(a for a in z.nonidentity if a not in span)
    x, y = h1_homs(group, p, [g, h]).homs()[:2]
    vectors = {}
    for a in (group.identity, g, inv[g], h, inv[h]):
        for name, hom in (("x", x), ("y", y)):
            vectors[f"{group.label(a)}⊗{name}"] = lie.element(a, hom)
    u = np.array(list(vectors.values()))
    image = lie.algebra.bracket_span(u, u)
    missing = [name for name, v in vectors.items() if not image.contains(_sparse(v))]
    verified = not missing
    if not verified:
        logger.error(f"[U,U] misses {missing} for {group.name}")
    return WitnessReport(kind=WitnessKind.SELF_REPRODUCING_SUBSPACE,
                         elements=_labelled(vectors),
                         relations=["[U,U] ⊇ U"] if verified else [],
                         verified=verified)


class NonNilpotentWitness:
    """x at the identity component and y with [x, y] = y."""

    def __init__(self, h: int, x: np.ndarray, y: np.ndarray, verified: bool):
        self.h = h
        self.x = x
        self.y = y
        self.verified = verified


def construct_nonnilpotent_witness(
    group: Group, p: int, lie: Optional[HochschildLie] = None
) -> NonNilpotentWitness:
    _require_p_group(group, p)
    if lie is None:
        lie = build_hh1_lie(group, p)
    frattini = frattini_subgroup(group)
    h = next(r for r in conjugacy_classes(group).representatives if r not in frattini)
    x = lie.element(group.identity, h1_homs(group, p, [h]).homs()[0].scale(-1))
    y = lie.vector(h, [1])
    verified = np.array_equal(lie.bracket(x, y), y)
    if not verified:
        logger.error(f"[x, y] != y for h = {group.label(h)} in {group.name}")
    return NonNilpotentWitness(h, x, y, verified)


# ============= Subalgebras =============


def _central_tensor(lie: HochschildLie, elements: Sequence[int]) -> np.ndarray:
    homs = h1_homs(lie.group, lie.p).homs()
    rows = [lie.element(z, x) for z in elements for x in homs]
    return np.array(rows, dtype=np.int64).reshape(-1, lie.dimension)


def center_subalgebra_closed(lie: HochschildLie) -> bool:
    """kZ(G) ⊗ H¹(G) is closed under the bracket."""
    vectors = _central_tensor(lie, center(lie.group).elements)
    span = lie.algebra.span(vectors)
    return all(span.contains(_sparse(v))
               for v in lie.algebra.brackets(vectors, vectors))


def frattini_center_abelian(lie: HochschildLie) -> bool:
    """The bracket vanishes on k(Z(G)∩Φ(G)) ⊗ H¹(G)."""
    meet = center(lie.group).intersection(frattini_subgroup(lie.group))
    vectors = _central_tensor(lie, meet.elements)
    return not lie.algebra.brackets(vectors, vectors).any()


def is_extraspecial(group: Group) -> bool:
    pk = prime_power(group.order)
    if pk is None or group.is_abelian():
        return False
    z = center(group)
    return (z.order == pk[0] and z == frattini_subgroup(group)
            and z == derived_subgroup(group))


def extraspecial_expectation(group: Group) -> Optional[int]:
    """Derived length of HH¹ predicted for an extraspecial group, None otherwise.

    Order p³ with an element of order p² and an order-p element outside the
    cyclic subgroup it generates (Z/p² ⋊ Z/p) gives 3; every other
    extraspecial group gives 2.
    """
    if not is_extraspecial(group):
        return None
    p, k = prime_power(group.order)
    if k != 3:
        return 2
    for a in range(group.order):
        if group.element_order(a) != p * p:
            continue
        cyclic = subgroup_generated(group, [a])
        others = (b for b in range(group.order) if b not in cyclic)
        if any(group.element_order(b) == p for b in others):
            return 3
    return 2
