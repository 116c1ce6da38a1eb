"""Invariant suite behind ``bvh verify``: each promised property, checked exactly."""

import itertools
import logging
import random
from collections.abc import Callable
from typing import Optional

import numpy as np

from bvh.bar import verify_homotopy_identity
from bvh.cochains import (
    coboundary,
    delta_g_cochain,
    extension_from_cocycle,
    random_cochain,
)
from bvh.cohomology import (
    cohomology_space,
    cup_class,
    h1_homs,
    restrict_class,
    transfer_class,
)
from bvh.delta import (
    bockstein_delta_check,
    delta_additivity_check,
    delta_anticommute_check,
    delta_class,
    delta_from_extension,
    delta_matrix,
    delta_p_part_check,
    delta_preserves_coboundaries,
    delta_square_check,
    naturality_delta_check,
    restriction_delta_check,
)
from bvh.errors import BracketMismatchError, BudgetExceededError
from bvh.groups import (
    Group,
    center,
    centraliser,
    commutator_power_subgroup,
    conjugacy_classes,
    double_cosets,
    frattini_subgroup,
    p_part,
    prime_power,
    quotient_group,
    sylow_subgroup,
)
from bvh.hochschild import (
    gerstenhaber_bracket,
    hh_basis,
    hh_bv_delta,
    hh_space,
    hh_unit,
    sw_product,
)
from bvh.lie import (
    build_hh1_lie,
    center_subalgebra_closed,
    construct_nonnilpotent_witness,
    construct_nonsoluble_witness,
    derived_series_analysis,
    extraspecial_expectation,
    frattini_center_abelian,
    verify_lie_axioms,
)
from bvh.linalg import FpMatrix, dense_rank, row_reduce
from bvh.models import CheckStatus, WitnessKind
from bvh.schemas import CheckResult
from bvh.store import store

logger = logging.getLogger(__name__)


def _passed(name: str, detail: str = "") -> CheckResult:
    return CheckResult(name=name, status=CheckStatus.PASSED, detail=detail)


def _failed(name: str, detail: str, witness: Optional[str] = None) -> CheckResult:
    logger.error(f"Check {name} failed: {detail} {witness or ''}")
    return CheckResult(
        name=name, status=CheckStatus.FAILED, detail=detail, witness=witness
    )


def _skipped(name: str, detail: str) -> CheckResult:
    return CheckResult(name=name, status=CheckStatus.SKIPPED, detail=detail)


def _affordable(group: Group, n: int, order: Optional[int] = None) -> bool:
    """Whether H^n of a subgroup of the given order fits the store's limits."""
    size = max((order or group.order) - 1, 1) ** (n + 1)
    return store.allows(size, size)


class VerificationSuite:
    """Exact invariant checks for one group and prime.

    Each check returns a CheckResult; a check that cannot run within the
    degree cap or the work limits reports SKIPPED rather than PASSED.
    """

    # Homotopy identity on the bar resolution
    HOMOTOPY_MAX_ORDER = 16
    HOMOTOPY_MAX_DEGREE = 3
    HOMOTOPY_MAX_CHAINS = 5_000  # (|G|-1)^n basis chains per central element

    # Random samples
    COCHAIN_SAMPLES = 3
    COCHAIN_WORK = 60_000  # tuples touched by one sampled coboundary
    MATRIX_SAMPLES = 6
    MATRIX_SIZE = 9
    EXTENSION_SAMPLES = 5

    # Central element pairs fed to the two-element identities
    MAX_CENTRAL_PAIRS = 6

    # Hochschild and Lie layers
    HH_MAX_ORDER = 16
    HH_DELTA_MAX_ORDER = 8
    BRACKET_MAX_PAIRS = 150
    PRODUCT_SAMPLES = 20
    LEIBNIZ_SAMPLES = 10
    LIE_MAX_ORDER = 32

    @classmethod
    def run(
        cls, group: Group, p: int, max_degree: int, seed: int = 0
    ) -> list[CheckResult]:
        rng = random.Random(seed)
        checks: list[Callable[[], list[CheckResult]]] = [
            lambda: [cls.check_group_structure(group)],
            lambda: [cls.check_rank_oracle(p, rng)],
            lambda: [cls.check_coboundary_square(group, p, max_degree, rng)],
            lambda: [cls.check_homotopy_identity(group, max_degree)],
            lambda: [
                cls.check_delta_commutes_with_coboundary(group, p, max_degree, rng)
            ],
            lambda: [cls.check_h1_homs(group, p)],
            lambda: [cls.check_delta_degree_one(group, p)],
            lambda: [cls.check_frattini_kills_degree_one(group, p)],
            lambda: [cls.check_delta_square(group, p, max_degree)],
            lambda: [cls.check_delta_anticommute(group, p, max_degree)],
            lambda: [cls.check_delta_additivity(group, p, max_degree)],
            lambda: [cls.check_delta_derivation(group, p, max_degree)],
            lambda: [cls.check_bockstein(group, p, max_degree)],
            lambda: [cls.check_p_part(group, p, max_degree)],
            lambda: [cls.check_sylow_restriction(group, p, max_degree)],
            lambda: [cls.check_graded_commutativity(group, p, max_degree)],
            lambda: [cls.check_transfer_restriction(group, p, max_degree)],
            lambda: [cls.check_extension_commutators(group, p, rng)],
            lambda: [cls.check_naturality(group, p, max_degree)],
            lambda: cls.check_hochschild(group, p, rng),
            lambda: [cls.check_sw_associativity(group, p, max_degree, rng)],
            lambda: [cls.check_hh_delta_square(group, p, max_degree)],
            lambda: [cls.check_bracket_leibniz(group, p, max_degree, rng)],
            lambda: cls.check_lie(group, p),
        ]
        results: list[CheckResult] = []
        for check in checks:
            try:
                results.extend(check())
            except BudgetExceededError as e:
                results.append(_skipped("budget", e.detail))
        failed = sum(r.status is CheckStatus.FAILED for r in results)
        logger.info(
            f"Verified {group.name} over F_{p}: {len(results)} checks, {failed} failed"
        )
        return results

    @classmethod
    def _central_elements(cls, group: Group) -> list[int]:
        return list(center(group).elements)

    @classmethod
    def _central_pairs(cls, group: Group) -> list[tuple[int, int]]:
        pairs = itertools.combinations(center(group).nonidentity, 2)
        return list(itertools.islice(pairs, cls.MAX_CENTRAL_PAIRS))

    @classmethod
    def _degrees(cls, group: Group, low: int, high: int, extra: int = 0) -> list[int]:
        """Degrees n in [low, high] whose spaces up to n + extra are affordable."""
        return [n for n in range(low, high + 1) if _affordable(group, n + extra)]

    # ============= Groups and linear algebra =============

    @classmethod
    def check_group_structure(cls, group: Group) -> CheckResult:
        name = "group-structure"
        classes = conjugacy_classes(group)
        sizes = [len(classes.class_elements[r]) for r in classes.representatives]
        if sum(sizes) != group.order:
            return _failed(name, "class sizes do not sum to |G|")
        for r, size in zip(classes.representatives, sizes):
            if size * centraliser(group, r).order != group.order:
                return _failed(name, "orbit-stabiliser fails", group.label(r))
        central = [a for a in range(group.order) if group.is_central(a)]
        if list(center(group).elements) != central:
            return _failed(name, "center differs from the intersection of centralisers")
        for g in classes.representatives:
            cg = centraliser(group, g)
            for h in classes.representatives:
                ch = centraliser(group, h)
                total = sum(
                    cg.order * ch.order
                    // cg.intersection(centraliser(group, group.conj(u, h))).order
                    for u in double_cosets(group, cg, ch)
                )
                if total != group.order:
                    return _failed(name, "double cosets do not partition G",
                                   f"({group.label(g)}, {group.label(h)})")
        return _passed(name, f"{len(sizes)} classes")

    @classmethod
    def check_rank_oracle(cls, p: int, rng: random.Random) -> CheckResult:
        name = "rank-oracle"
        for _ in range(cls.MATRIX_SAMPLES):
            rows = rng.randint(1, cls.MATRIX_SIZE)
            cols = rng.randint(1, cls.MATRIX_SIZE)
            dense = np.array(
                [[rng.randrange(p) for _ in range(cols)] for _ in range(rows)],
                dtype=np.int64,
            )
            matrix = FpMatrix.from_dense(dense, p)
            echelon = row_reduce(matrix.row_vectors(), cols, p)
            expected = dense_rank(dense, p)
            if echelon.dimension != expected:
                return _failed(
                    name,
                    f"sparse rank {echelon.dimension}, dense rank {expected}",
                    str(dense.tolist()),
                )
            if row_reduce(matrix.column_vectors(), rows, p).dimension != expected:
                return _failed(
                    name, "row rank differs from column rank", str(dense.tolist())
                )
            for k in echelon.kernel_vectors():
                if any(matrix.apply(k).values()):
                    return _failed(
                        name, "kernel vector not annihilated", str(dense.tolist())
                    )
        return _passed(name, f"{cls.MATRIX_SAMPLES} random matrices over F_{p}")

    # ============= Cochains =============

    @classmethod
    def check_coboundary_square(cls, group: Group, p: int, max_degree: int,
                                rng: random.Random) -> CheckResult:
        name = "coboundary-square"
        whole = group.whole()
        m = max(group.order - 1, 1)
        degrees = [n for n in range(max_degree) if m ** (n + 2) <= cls.COCHAIN_WORK]
        if not degrees:
            return _skipped(name, "no degree within the cochain work limit")
        for n in degrees:
            for _ in range(cls.COCHAIN_SAMPLES):
                phi = random_cochain(whole, n, p, rng)
                if not coboundary(coboundary(phi)).is_zero():
                    return _failed(name, f"d∘d ≠ 0 in degree {n}")
        return _passed(name, f"degrees {degrees}")

    @classmethod
    def check_homotopy_identity(cls, group: Group, max_degree: int) -> CheckResult:
        name = "homotopy-identity"
        if group.order > cls.HOMOTOPY_MAX_ORDER:
            return _skipped(name, f"|G| > {cls.HOMOTOPY_MAX_ORDER}")
        m = max(group.order - 1, 1)
        degrees = [n for n in range(min(max_degree, cls.HOMOTOPY_MAX_DEGREE) + 1)
                   if m ** n <= cls.HOMOTOPY_MAX_CHAINS]
        checked = 0
        for g in cls._central_elements(group):
            for n in degrees:
                report = verify_homotopy_identity(group, g, n)
                checked += report.checked
                if not report.passed:
                    return _failed(name, f"δs + sδ ≠ g - 1 in degree {n}",
                                   f"g={group.label(g)}, chain={report.witness}")
        return _passed(name, f"{checked} basis chains, degrees {degrees}")

    @classmethod
    def check_delta_commutes_with_coboundary(cls, group: Group, p: int, max_degree: int,
                                             rng: random.Random) -> CheckResult:
        name = "delta-cochain-coboundary"
        whole = group.whole()
        m = max(group.order - 1, 1)
        degrees = [n for n in range(1, max_degree) if m ** (n + 2) <= cls.COCHAIN_WORK]
        if not degrees:
            return _skipped(name, "no degree within the cochain work limit")
        for g in cls._central_elements(group):
            for n in degrees:
                for _ in range(cls.COCHAIN_SAMPLES):
                    phi = random_cochain(whole, n, p, rng)
                    lhs = delta_g_cochain(coboundary(phi), g)
                    if lhs != coboundary(delta_g_cochain(phi, g)):
                        return _failed(
                            name, f"Δ_g d ≠ d Δ_g in degree {n}", group.label(g)
                        )
        return _passed(name, f"degrees {degrees}")

    # ============= Δ_g =============

    @classmethod
    def check_h1_homs(cls, group: Group, p: int) -> CheckResult:
        name = "h1-homs"
        homs = h1_homs(group, p)
        space = cohomology_space(group, p, 1)
        if homs.dimension != space.dimension:
            return _failed(
                name, f"{homs.dimension} homs but dim H^1 = {space.dimension}"
            )
        vectors = (
            dict(enumerate(space.class_of(phi).coordinates)) for phi in homs.homs()
        )
        span = row_reduce(vectors, space.dimension, p)
        if span.dimension != space.dimension:
            return _failed(name, "homs are not independent in H^1")
        return _passed(name, f"dim H^1 = {space.dimension}")

    @classmethod
    def check_delta_degree_one(cls, group: Group, p: int) -> CheckResult:
        """Δ_g on H¹ is evaluation at the p-part of g."""
        name = "delta-degree-one"
        space = cohomology_space(group, p, 1)
        for g in cls._central_elements(group):
            gp = p_part(group, g, p)
            matrix = delta_matrix(group, p, g, 1).matrix
            row = [phi(gp) % p for phi in space.representatives]
            if matrix.size and matrix[0].tolist() != row:
                return _failed(name, "Δ_g on H^1 is not evaluation at g",
                               f"g={group.label(g)}: {matrix[0].tolist()} vs {row}")
        return _passed(name, f"{len(cls._central_elements(group))} central elements")

    @classmethod
    def check_frattini_kills_degree_one(cls, group: Group, p: int) -> CheckResult:
        name = "frattini-degree-one"
        pk = prime_power(group.order)
        if pk is None or pk[0] != p:
            return _skipped(name, f"{group.name} is not a {p}-group")
        meet = center(group).intersection(frattini_subgroup(group))
        for g in meet.nonidentity:
            if delta_matrix(group, p, g, 1).matrix.any():
                return _failed(
                    name, "Δ_g ≠ 0 on H^1 for g in Z ∩ Φ", group.label(g)
                )
        return _passed(name, f"|Z ∩ Φ| = {meet.order}")

    @classmethod
    def check_delta_square(cls, group: Group, p: int, max_degree: int) -> CheckResult:
        name = "delta-square"
        degrees = cls._degrees(group, 2, max_degree)
        if not degrees:
            return _skipped(name, "no affordable degree ≥ 2")
        for g in center(group).nonidentity:
            for n in degrees:
                if not delta_square_check(group, p, g, n):
                    return _failed(name, f"Δ_g² ≠ 0 on H^{n}", group.label(g))
        return _passed(name, f"degrees {degrees}")

    @classmethod
    def check_delta_anticommute(
        cls, group: Group, p: int, max_degree: int
    ) -> CheckResult:
        name = "delta-anticommute"
        degrees = cls._degrees(group, 2, max_degree)
        pairs = cls._central_pairs(group)
        if not degrees or not pairs:
            return _skipped(
                name, "needs two nontrivial central elements and degree ≥ 2"
            )
        for g, h in pairs:
            for n in degrees:
                if not delta_anticommute_check(group, p, g, h, n):
                    return _failed(name, f"Δ_gΔ_h + Δ_hΔ_g ≠ 0 on H^{n}",
                                   f"({group.label(g)}, {group.label(h)})")
        return _passed(name, f"{len(pairs)} pairs, degrees {degrees}")

    @classmethod
    def check_delta_additivity(
        cls, group: Group, p: int, max_degree: int
    ) -> CheckResult:
        name = "delta-additivity"
        degrees = cls._degrees(group, 1, max_degree)
        pairs = cls._central_pairs(group)
        if not degrees or not pairs:
            return _skipped(name, "needs two nontrivial central elements")
        for g, h in pairs:
            for n in degrees:
                if not delta_additivity_check(group, p, g, h, n):
                    return _failed(name, f"Δ_gh ≠ Δ_g + Δ_h on H^{n}",
                                   f"({group.label(g)}, {group.label(h)})")
        return _passed(name, f"{len(pairs)} pairs, degrees {degrees}")

    @classmethod
    def check_delta_derivation(
        cls, group: Group, p: int, max_degree: int
    ) -> CheckResult:
        """Δ_g(xy) = Δ_g(x)y + (-1)^{|x|} xΔ_g(y) on basis classes."""
        name = "delta-derivation"
        degrees = cls._degrees(group, 1, max_degree)
        if not degrees:
            return _skipped(name, "no affordable degree")
        bases = {n: cohomology_space(group, p, n).basis() for n in degrees}
        checked = 0
        for g in center(group).nonidentity:
            for a, b in itertools.product(degrees, repeat=2):
                if a + b not in degrees:
                    continue
                for x in bases[a]:
                    for y in bases[b]:
                        lhs = delta_class(g, cup_class(x, y))
                        first = cup_class(delta_class(g, x), y)
                        second = cup_class(x, delta_class(g, y))
                        rhs = first + (second if a % 2 == 0 else -second)
                        checked += 1
                        if lhs != rhs:
                            return _failed(
                                name,
                                f"Δ_g is not a derivation in degrees ({a},{b})",
                                f"g={group.label(g)}, x={x!r}, y={y!r}",
                            )
        if not checked:
            return _skipped(name, "no pair of degrees within the cap")
        return _passed(name, f"{checked} products")

    @classmethod
    def check_bockstein(cls, group: Group, p: int, max_degree: int) -> CheckResult:
        name = "delta-bockstein"
        degrees = cls._degrees(group, 1, max_degree - 1, extra=1)
        if not degrees:
            return _skipped(name, "no affordable degree pair (n, n+1)")
        for g in center(group).nonidentity:
            for n in degrees:
                if not bockstein_delta_check(group, p, g, n):
                    return _failed(name, f"βΔ_g ≠ Δ_gβ on H^{n}", group.label(g))
        return _passed(name, f"degrees {degrees}")

    @classmethod
    def check_p_part(cls, group: Group, p: int, max_degree: int) -> CheckResult:
        name = "delta-p-part"
        mixed = [g for g in center(group).nonidentity if p_part(group, g, p) != g]
        degrees = cls._degrees(group, 1, max_degree)
        if not mixed or not degrees:
            return _skipped(name, "every central element is a p-element")
        for g in mixed:
            for n in degrees:
                if not delta_p_part_check(group, p, g, n):
                    return _failed(name, f"Δ_g ≠ Δ_(g_p) on H^{n}", group.label(g))
        return _passed(name, f"{len(mixed)} central elements with a p'-part")

    @classmethod
    def check_sylow_restriction(
        cls, group: Group, p: int, max_degree: int
    ) -> CheckResult:
        name = "delta-sylow-restriction"
        sylow = sylow_subgroup(group, p)
        if sylow.is_whole() or sylow.order == 1:
            return _skipped(name, "the Sylow subgroup is trivial or the whole group")
        degrees = cls._degrees(group, 1, max_degree)
        for g in center(group).nonidentity:
            for n in degrees:
                if not restriction_delta_check(group, sylow, p, g, n):
                    return _failed(
                        name, f"Res Δ_g ≠ Δ_(g_p) Res on H^{n}", group.label(g)
                    )
        return _passed(name, f"|P| = {sylow.order}, degrees {degrees}")

    # ============= Products and transfer =============

    @classmethod
    def check_graded_commutativity(
        cls, group: Group, p: int, max_degree: int
    ) -> CheckResult:
        name = "cup-graded-commutative"
        degrees = cls._degrees(group, 1, max_degree)
        checked = 0
        for a, b in itertools.combinations_with_replacement(degrees, 2):
            if a + b not in degrees:
                continue
            for x in cohomology_space(group, p, a).basis():
                for y in cohomology_space(group, p, b).basis():
                    sign = -1 if a * b % 2 else 1
                    checked += 1
                    if cup_class(x, y) != cup_class(y, x).scale(sign):
                        return _failed(name, f"xy ≠ ±yx in degrees ({a},{b})")
        if not checked:
            return _skipped(name, "no pair of degrees within the cap")
        return _passed(name, f"{checked} products")

    @classmethod
    def check_transfer_restriction(
        cls, group: Group, p: int, max_degree: int
    ) -> CheckResult:
        """Tr ∘ Res is multiplication by the index on every centraliser."""
        name = "transfer-restriction"
        reps = conjugacy_classes(group).representatives
        subgroups = {centraliser(group, r) for r in reps}
        subgroups.discard(group.whole())
        degrees = cls._degrees(group, 0, min(max_degree, 2))
        if not subgroups:
            return _skipped(name, "abelian group: no proper centraliser")
        for h in sorted(subgroups, key=lambda s: s.elements):
            index = h.index_in(group.whole())
            for n in degrees:
                for c in cohomology_space(group, p, n).basis():
                    back = transfer_class(restrict_class(c, h), group.whole())
                    if back != c.scale(index):
                        return _failed(
                            name, f"Tr Res ≠ [G:H] on H^{n}", f"|H| = {h.order}"
                        )
        return _passed(name, f"{len(subgroups)} centralisers, degrees {degrees}")

    @classmethod
    def check_extension_commutators(cls, group: Group, p: int,
                                    rng: random.Random) -> CheckResult:
        """Δ_g(α)(h) = [ĝ, ĥ] on extensions from random 2-cocycles."""
        name = "extension-commutators"
        central = list(center(group).nonidentity)
        if not central:
            return _skipped(name, "trivial center")
        if not _affordable(group, 2) or group.order * p > 4 * cls.HH_MAX_ORDER:
            return _skipped(name, "extension too large")
        space = cohomology_space(group, p, 2)
        whole = group.whole()
        for _ in range(cls.EXTENSION_SAMPLES):
            alpha = space.representative_of(
                [rng.randrange(p) for _ in range(space.dimension)]
            )
            alpha = alpha + coboundary(random_cochain(whole, 1, p, rng))
            ext = extension_from_cocycle(group, alpha)
            for g in central:
                result = delta_from_extension(ext, g)
                if not result.agrees:
                    return _failed(name, "Δ_g(α) differs from the commutators",
                                   f"g={group.label(g)}, at {result.mismatches}")
        return _passed(name, f"{cls.EXTENSION_SAMPLES} extensions")

    @classmethod
    def check_naturality(cls, group: Group, p: int, max_degree: int) -> CheckResult:
        """Δ_g f^* = f^* Δ_{f(g)} along the identity and G -> G/[G,G]G^p."""
        name = "delta-naturality"
        maps = [(group, list(range(group.order)))]
        kernel = commutator_power_subgroup(group, p)
        if not kernel.is_whole():
            maps.append(quotient_group(group, kernel))
        checked = 0
        for target, mapping in maps:
            degrees = [n for n in range(1, max_degree + 1)
                       if _affordable(group, n) and _affordable(target, n)]
            for g in center(group).nonidentity:
                for n in degrees:
                    checked += 1
                    if not naturality_delta_check(group, target, mapping, p, g, n):
                        return _failed(name, f"Δ_g f^* ≠ f^* Δ_f(g) on H^{n}",
                                       f"g={group.label(g)}, target {target.name}")
        if not checked:
            return _skipped(name, "trivial center or no affordable degree")
        return _passed(name, f"{len(maps)} maps, {checked} cases")

    # ============= Hochschild cohomology =============

    @classmethod
    def check_hochschild(
        cls, group: Group, p: int, rng: random.Random
    ) -> list[CheckResult]:
        names = ("hh-unit", "hh-graded-commutative", "hh-bracket-consistency",
                 "delta-coboundaries")
        if group.order > cls.HH_MAX_ORDER:
            return [_skipped(n, f"|G| > {cls.HH_MAX_ORDER}") for n in names]
        unit = hh_unit(group, p)
        basis = hh_basis(hh_space(group, p, 1))
        results = []

        bad = next(
            (x for x in basis if sw_product(unit, x) != x or sw_product(x, unit) != x),
            None,
        )
        results.append(_passed(names[0], f"{len(basis)} basis elements") if bad is None
                       else _failed(names[0], "1·x ≠ x", repr(bad)))

        pairs = list(itertools.product(basis, repeat=2))
        if len(pairs) > cls.BRACKET_MAX_PAIRS:
            pairs = rng.sample(pairs, cls.BRACKET_MAX_PAIRS)
        bad_pair = next(
            ((x, y) for x, y in pairs if sw_product(x, y) != -sw_product(y, x)), None
        )
        results.append(_passed(names[1], f"{len(pairs)} pairs") if bad_pair is None
                       else _failed(names[1], "xy ≠ -yx on HH^1", repr(bad_pair)))

        try:
            for x, y in pairs:
                gerstenhaber_bracket(x, y, check=True)
            results.append(_passed(names[2], f"{len(pairs)} pairs"))
        except BracketMismatchError as e:
            results.append(_failed(names[2], e.detail))

        failures = []
        for g in center(group).nonidentity:
            for n in (2, 3):
                if not _affordable(group, n):
                    continue
                if delta_preserves_coboundaries(group, p, g, n, rng):
                    failures.append(f"g={group.label(g)}, n={n}")
        results.append(
            _passed(names[3]) if not failures
            else _failed(names[3], "Δ_g(dψ) is not a coboundary", failures[0])
        )
        return results

    @classmethod
    def _hh_degrees(cls, group: Group, max_degree: int, high: int) -> list[int]:
        return [n for n in range(min(max_degree, high) + 1) if _affordable(group, n)]

    @classmethod
    def check_sw_associativity(cls, group: Group, p: int, max_degree: int,
                               rng: random.Random) -> CheckResult:
        """(xy)z = x(yz) on sampled triples from HH^{≤2}."""
        name = "hh-associative"
        if group.order > cls.HH_MAX_ORDER:
            return _skipped(name, f"|G| > {cls.HH_MAX_ORDER}")
        degrees = cls._hh_degrees(group, max_degree, 2)
        shapes = [
            shape for shape in itertools.product(degrees, repeat=3)
            if sum(shape) <= max_degree and _affordable(group, sum(shape))
        ]
        bases = {d: hh_basis(hh_space(group, p, d)) for d in degrees}
        shapes = [s for s in shapes if all(bases[d] for d in s)]
        if not shapes:
            return _skipped(name, "no affordable degree triple")
        for _ in range(cls.PRODUCT_SAMPLES):
            x, y, z = (rng.choice(bases[d]) for d in rng.choice(shapes))
            if sw_product(sw_product(x, y), z) != sw_product(x, sw_product(y, z)):
                return _failed(name, "(xy)z ≠ x(yz)", f"{x!r}, {y!r}, {z!r}")
        return _passed(name, f"{cls.PRODUCT_SAMPLES} triples")

    @classmethod
    def check_hh_delta_square(
        cls, group: Group, p: int, max_degree: int
    ) -> CheckResult:
        name = "hh-delta-square"
        if group.order > cls.HH_DELTA_MAX_ORDER:
            return _skipped(name, f"|G| > {cls.HH_DELTA_MAX_ORDER}")
        degrees = [n for n in cls._hh_degrees(group, max_degree, 3) if n >= 2]
        if not degrees:
            return _skipped(name, "no affordable degree ≥ 2")
        checked = 0
        for n in degrees:
            for x in hh_basis(hh_space(group, p, n)):
                checked += 1
                if not hh_bv_delta(hh_bv_delta(x)).is_zero():
                    return _failed(name, f"Δ∘Δ ≠ 0 on HH^{n}", repr(x))
        return _passed(name, f"{checked} basis elements, degrees {degrees}")

    @classmethod
    def check_bracket_leibniz(cls, group: Group, p: int, max_degree: int,
                              rng: random.Random) -> CheckResult:
        """[x, yz] = [x, y]z + y[x, z] on sampled triples from HH^1."""
        name = "hh-bracket-leibniz"
        if group.order > cls.HH_MAX_ORDER:
            return _skipped(name, f"|G| > {cls.HH_MAX_ORDER}")
        if max_degree < 3 or not _affordable(group, 3):
            return _skipped(name, "needs HH^3")
        basis = hh_basis(hh_space(group, p, 1))
        if not basis:
            return _skipped(name, "HH^1 = 0")
        for _ in range(cls.LEIBNIZ_SAMPLES):
            x, y, z = (rng.choice(basis) for _ in range(3))
            lhs = gerstenhaber_bracket(x, sw_product(y, z), check=False)
            rhs = (sw_product(gerstenhaber_bracket(x, y, check=False), z)
                   + sw_product(y, gerstenhaber_bracket(x, z, check=False)))
            if lhs != rhs:
                return _failed(name, "[x, yz] ≠ [x, y]z + y[x, z]",
                               f"{x!r}, {y!r}, {z!r}")
        return _passed(name, f"{cls.LEIBNIZ_SAMPLES} triples")

    @classmethod
    def check_lie(cls, group: Group, p: int) -> list[CheckResult]:
        names = ("lie-axioms", "lie-frattini-abelian", "lie-center-closed",
                 "lie-not-nilpotent", "lie-extraspecial", "lie-nonsoluble-witness")
        pk = prime_power(group.order)
        if pk is None or pk[0] != p:
            return [_skipped(n, f"{group.name} is not a {p}-group") for n in names]
        if group.order > cls.LIE_MAX_ORDER:
            return [_skipped(n, f"|G| > {cls.LIE_MAX_ORDER}") for n in names]
        lie = build_hh1_lie(group, p)
        results = [verify_lie_axioms(lie.algebra)]
        if results[0].status is CheckStatus.FAILED:
            return results

        results.append(_passed(names[1]) if frattini_center_abelian(lie)
                       else _failed(names[1], "bracket nonzero on k(Z∩Φ) ⊗ H^1"))
        results.append(_passed(names[2]) if center_subalgebra_closed(lie)
                       else _failed(names[2], "kZ ⊗ H^1 is not closed"))

        witness = construct_nonnilpotent_witness(group, p, lie)
        results.append(
            _passed(names[3], f"h = {group.label(witness.h)}") if witness.verified
            else _failed(names[3], "[x, y] ≠ y", group.label(witness.h))
        )

        analysis = derived_series_analysis(lie.algebra)
        expected = extraspecial_expectation(group)
        if expected is None:
            results.append(_skipped(names[4], "not extraspecial"))
        elif analysis.derived_length == expected:
            results.append(_passed(names[4], f"derived length {expected}"))
        else:
            results.append(_failed(
                names[4],
                f"derived length {analysis.derived_length}, expected {expected}",
            ))

        report = construct_nonsoluble_witness(group, p, lie)
        if report.kind is WitnessKind.HYPOTHESIS_NOT_MET:
            results.append(_skipped(names[5], "; ".join(report.relations)))
        elif report.verified and not analysis.soluble:
            results.append(_passed(names[5], report.kind.value))
        else:
            results.append(_failed(
                names[5], f"{report.kind.value} witness not verified or HH^1 soluble"
            ))
        return results
