"""Class-level Δ_g: matrices, extension commutators and the Künneth identity."""

import logging
import random
from collections.abc import Sequence
from typing import Optional

import numpy as np

from bvh.cochains import (
    Cochain,
    ExtensionCocycle,
    coboundary,
    cross_product,
    delta_g_cochain,
    extension_commutator,
    pullback,
    random_cochain,
)
from bvh.cohomology import (
    CohomologyClass,
    Domain,
    as_subgroup,
    bockstein_class,
    class_of,
    cohomology_space,
    restrict_class,
    transfer_class,
)
from bvh.errors import DimensionMismatchError, NotCentralError
from bvh.groups import Group, Subgroup, direct_product, p_part
from bvh.linalg import FpMatrix, row_reduce

logger = logging.getLogger(__name__)


class DeltaMatrix:
    """Matrix of Δ_g: H^n -> H^{n-1}; column j is the image of the j-th basis class."""

    def __init__(self, domain, p: int, g: int, degree: int, matrix: np.ndarray):
        self.domain = domain
        self.p = p
        self.g = g
        self.degree = degree
        self.matrix = matrix

    @property
    def source_dimension(self) -> int:
        return self.matrix.shape[1]

    @property
    def target_dimension(self) -> int:
        return self.matrix.shape[0]

    @property
    def rank(self) -> int:
        if not self.matrix.size:
            return 0
        return row_reduce(FpMatrix.from_dense(self.matrix, self.p).row_vectors(),
                          self.source_dimension, self.p).dimension

    def image(self) -> list[CohomologyClass]:
        """Basis of the image as classes in H^{n-1}."""
        target = cohomology_space(self.domain, self.p, self.degree - 1)
        columns = FpMatrix.from_dense(self.matrix, self.p).column_vectors()
        echelon = row_reduce(columns, self.target_dimension, self.p)
        return [
            target.class_from_coordinates(
                [v.get(i, 0) for i in range(self.target_dimension)]
            )
            for v in echelon.vectors()
        ]

    def __repr__(self) -> str:
        return (f"DeltaMatrix(n={self.degree}, g={self.g}, "
                f"{self.target_dimension}x{self.source_dimension}, rank={self.rank})")


def _central_element(domain, g: int, p: int, use_p_part: bool) -> int:
    if not domain.is_central_element(g):
        raise NotCentralError(
            f"{domain.parent.label(g)} is not central in the subgroup "
            f"of order {domain.order}"
        )
    if not use_p_part:
        return g
    gp = p_part(domain.parent, g, p)
    if gp != g:
        logger.warning(
            f"Replacing {domain.parent.label(g)} by its {p}-part "
            f"{domain.parent.label(gp)}"
        )
    return gp


def delta_class(g: int, c: CohomologyClass, use_p_part: bool = True) -> CohomologyClass:
    """class(Δ_g(representative of c)); g must be central in c's domain."""
    if c.degree < 1:
        raise DimensionMismatchError("Δ_g is defined from degree one upwards")
    g = _central_element(c.domain, g, c.p, use_p_part)
    return class_of(delta_g_cochain(c.representative, g))


def delta_matrix(domain: Domain, p: int, g: int, n: int,
                 use_p_part: bool = True) -> DeltaMatrix:
    if n < 1:
        raise DimensionMismatchError("Δ_g matrices start in degree one")
    domain = as_subgroup(domain)
    g = _central_element(domain, g, p, use_p_part)
    source = cohomology_space(domain, p, n)
    target = cohomology_space(domain, p, n - 1)
    matrix = np.zeros((target.dimension, source.dimension), dtype=np.int64)
    for j, phi in enumerate(source.representatives):
        matrix[:, j] = target.class_of(delta_g_cochain(phi, g)).coordinates
    logger.debug(f"Δ_{domain.parent.label(g)} on H^{n}: {matrix.tolist()}")
    return DeltaMatrix(domain, p, g, n, matrix)


def delta_preserves_coboundaries(
    domain: Domain, p: int, g: int, n: int, rng: random.Random, samples: int = 5
) -> Optional[Cochain]:
    """Sample coboundaries dψ in degree n; a ψ with Δ_g(dψ) not a coboundary, if any."""
    domain = as_subgroup(domain)
    space = cohomology_space(domain, p, n - 1)
    for _ in range(samples):
        psi = random_cochain(domain, n - 1, p, rng)
        image = delta_g_cochain(coboundary(psi), g)
        if not space.class_of(image).is_zero():
            return psi
    return None


# ============= Extensions =============


class ExtensionDelta:
    """Δ_g(α) as a hom next to the commutators [ĝ, ĥ] in the extension."""

    def __init__(self, hom: Cochain, commutators: dict[int, int]):
        self.hom = hom
        self.commutators = commutators

    @property
    def mismatches(self) -> list[int]:
        return [h for h, c in self.commutators.items() if self.hom(h) != c]

    @property
    def agrees(self) -> bool:
        return not self.mismatches


def delta_from_extension(ext: ExtensionCocycle, g: int) -> ExtensionDelta:
    """h ↦ α(g,h) - α(h,g), compared with [ĝ, ĥ] for every h."""
    base = ext.base
    if not base.is_central(g):
        raise NotCentralError(f"{base.label(g)} is not central in {base.name}")
    hom = delta_g_cochain(ext.alpha, g)
    commutators = {h: extension_commutator(ext, g, h) for h in base.whole().nonidentity}
    result = ExtensionDelta(hom, commutators)
    if not result.agrees:
        logger.error(f"Δ_g(α) disagrees with commutators at {result.mismatches}")
    return result


# ============= Künneth =============


def kunneth_delta_check(x: CohomologyClass, y: CohomologyClass, g: int, h: int,
                        product: Optional[Group] = None) -> bool:
    """class(Δ_{(g,h)}(x × y)) = class(Δ_g x × y) + (-1)^{|x|} class(x × Δ_h y)."""
    left, right = x.domain.parent, y.domain.parent
    if product is None:
        product = direct_product(left, right)
    pair = product.product.pair(g, h)
    cross = cross_product(x.representative, y.representative, product)
    if cross.degree == 0:
        return True
    lhs = class_of(delta_g_cochain(cross, pair))
    rhs = cohomology_space(product, x.p, cross.degree - 1).zero()
    if x.degree > 0:
        rhs = rhs + class_of(
            cross_product(
                delta_g_cochain(x.representative, g), y.representative, product
            )
        )
    if y.degree > 0:
        term = class_of(
            cross_product(
                x.representative, delta_g_cochain(y.representative, h), product
            )
        )
        rhs = rhs + (term if x.degree % 2 == 0 else -term)
    return lhs == rhs


# ============= Operator Identities =============


def _matrices_compose_to_zero(first: DeltaMatrix, second: DeltaMatrix) -> bool:
    """second.matrix @ first.matrix ≡ 0 (mod p); first in degree n, second in n-1."""
    if not first.matrix.size or not second.matrix.size:
        return True
    return not ((second.matrix @ first.matrix) % first.p).any()


def delta_square_check(domain: Domain, p: int, g: int, n: int) -> bool:
    """Δ_g ∘ Δ_g = 0 from H^n to H^{n-2}."""
    return _matrices_compose_to_zero(delta_matrix(domain, p, g, n),
                                     delta_matrix(domain, p, g, n - 1))


def delta_anticommute_check(domain: Domain, p: int, g: int, h: int, n: int) -> bool:
    """Δ_gΔ_h + Δ_hΔ_g = 0 from H^n to H^{n-2}."""
    dg, dh = delta_matrix(domain, p, g, n), delta_matrix(domain, p, h, n)
    dg1, dh1 = delta_matrix(domain, p, g, n - 1), delta_matrix(domain, p, h, n - 1)
    total = dg1.matrix @ dh.matrix + dh1.matrix @ dg.matrix
    return not (total % p).any()


def delta_additivity_check(domain: Domain, p: int, g: int, h: int, n: int) -> bool:
    """Δ_{gh} = Δ_g + Δ_h for central g, h."""
    domain = as_subgroup(domain)
    gh = domain.parent.mul[g][h]
    lhs = delta_matrix(domain, p, gh, n).matrix
    rhs = delta_matrix(domain, p, g, n).matrix + delta_matrix(domain, p, h, n).matrix
    return not ((lhs - rhs) % p).any()


def delta_p_part_check(domain: Domain, p: int, g: int, n: int) -> bool:
    """Δ_g computed with g itself equals Δ_{g_p}."""
    direct = delta_matrix(domain, p, g, n, use_p_part=False).matrix
    substituted = delta_matrix(domain, p, g, n).matrix
    return np.array_equal(direct % p, substituted % p)


def bockstein_delta_check(domain: Domain, p: int, g: int, n: int) -> bool:
    """β ∘ Δ_g = Δ_g ∘ β on H^n."""
    for c in cohomology_space(domain, p, n).basis():
        if bockstein_class(delta_class(g, c)) != delta_class(g, bockstein_class(c)):
            return False
    return True


def restriction_delta_check(domain: Domain, subgroup: Subgroup, p: int, g: int,
                            n: int) -> bool:
    """Res ∘ Δ_g = Δ_{g_p} ∘ Res on H^n, with Δ_g evaluated at g itself.

    g_p must be central in the subgroup.
    """
    domain = as_subgroup(domain)
    gp = p_part(domain.parent, g, p)
    for c in cohomology_space(domain, p, n).basis():
        lhs = restrict_class(delta_class(g, c, use_p_part=False), subgroup)
        if lhs != delta_class(gp, restrict_class(c, subgroup)):
            return False
    return True


def transfer_delta_check(subgroup: Subgroup, target: Subgroup, p: int, g: int,
                         n: int) -> bool:
    """Tr ∘ Δ_g = Δ_g ∘ Tr on H^n(H) for g ∈ H central in the target."""
    for c in cohomology_space(subgroup, p, n).basis():
        lhs = transfer_class(delta_class(g, c), target)
        if lhs != delta_class(g, transfer_class(c, target)):
            return False
    return True


def naturality_delta_check(source: Group, target: Group, mapping: Sequence[int], p: int,
                           g: int, n: int) -> bool:
    """Δ_g ∘ f^* = f^* ∘ Δ_{f(g)} on H^n(target) for a homomorphism f.

    g must be central in source and f(g) central in target.
    """
    whole = source.whole()
    image = mapping[g]
    for phi in cohomology_space(target, p, n).representatives:
        lhs = class_of(delta_g_cochain(pullback(phi, mapping, whole), g))
        if lhs != class_of(pullback(delta_g_cochain(phi, image), mapping, whole)):
            return False
    return True
