"""Exact sparse linear algebra over F_p.

Vectors are sparse dicts ``{coordinate: value}`` with values in ``[1, p)``.
Subspaces are kept in reduced row echelon form. Over F_2 the rows are packed
into Python ints and combined with XOR; for odd p they stay sparse dicts with a
column index, and pivots are chosen by lowest column fill.
"""

import logging
from collections.abc import Iterable, Sequence
from typing import Optional

import numpy as np

from bvh.errors import DimensionMismatchError, NotInSubspaceError
from bvh.groups import is_prime

logger = logging.getLogger(__name__)

SparseVector = dict[int, int]


def _check_modulus(p: int) -> None:
    if not is_prime(p):
        raise DimensionMismatchError(f"modulus {p} is not prime")


def _bits(v: SparseVector) -> int:
    x = 0
    for c, a in v.items():
        if a & 1:
            x ^= 1 << c
    return x


def _sparse_bits(x: int) -> SparseVector:
    out = {}
    while x:
        low = x & -x
        out[low.bit_length() - 1] = 1
        x ^= low
    return out


def normalize(v: SparseVector, p: int) -> SparseVector:
    return {c: a % p for c, a in v.items() if a % p}


class FpMatrix:
    """Sparse matrix over F_p with entries keyed by (row, col)."""

    def __init__(self, rows: int, cols: int, p: int,
                 entries: Optional[Iterable[tuple[int, int, int]]] = None):
        _check_modulus(p)
        self.rows = rows
        self.cols = cols
        self.p = p
        self.entries: dict[tuple[int, int], int] = {}
        for r, c, a in entries or ():
            if not (0 <= r < rows and 0 <= c < cols):
                raise DimensionMismatchError(f"entry ({r}, {c}) outside {rows}x{cols}")
            value = (self.entries.get((r, c), 0) + a) % p
            if value:
                self.entries[(r, c)] = value
            else:
                self.entries.pop((r, c), None)

    @classmethod
    def from_rows(cls, rows: Sequence[SparseVector], cols: int, p: int) -> "FpMatrix":
        return cls(len(rows), cols, p,
                   ((r, c, a) for r, row in enumerate(rows) for c, a in row.items()))

    @classmethod
    def from_dense(cls, array: Sequence[Sequence[int]], p: int) -> "FpMatrix":
        dense = np.asarray(array, dtype=np.int64)
        rows, cols = dense.shape
        nonzero = zip(*np.nonzero(dense % p))
        entries = ((int(r), int(c), int(dense[r, c])) for r, c in nonzero)
        return cls(rows, cols, p, entries)

    def row_vectors(self) -> list[SparseVector]:
        out: list[SparseVector] = [{} for _ in range(self.rows)]
        for (r, c), a in self.entries.items():
            out[r][c] = a
        return out

    def column_vectors(self) -> list[SparseVector]:
        return self.transpose().row_vectors()

    def transpose(self) -> "FpMatrix":
        return FpMatrix(self.cols, self.rows, self.p,
                        ((c, r, a) for (r, c), a in self.entries.items()))

    def apply(self, v: SparseVector) -> SparseVector:
        out: SparseVector = {}
        for (r, c), a in self.entries.items():
            if c in v:
                out[r] = (out.get(r, 0) + a * v[c]) % self.p
        return {r: a for r, a in out.items() if a}

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.rows, self.cols), dtype=np.int64)
        for (r, c), a in self.entries.items():
            dense[r, c] = a
        return dense


class FpSubspaceBasis:
    """Subspace of F_p^dim in reduced row echelon form.

    Every basis vector has a pivot column where it is 1 and where all other
    basis vectors vanish. With ``track=True`` each basis vector also records
    its expression in terms of the inserted vectors.
    """

    def __init__(self, dim: int, p: int, track: bool = False):
        _check_modulus(p)
        self.dim = dim
        self.p = p
        self.track = track
        self.pivots: list[int] = []
        self._rows: dict[int, object] = {}
        self._combos: dict[int, object] = {}
        self._columns: dict[int, set[int]] = {}
        self._inserted = 0

    @classmethod
    def from_vectors(cls, vectors: Iterable[SparseVector], dim: int, p: int,
                     track: bool = False) -> "FpSubspaceBasis":
        basis = cls(dim, p, track=track)
        for v in vectors:
            basis.insert(v)
        return basis

    @property
    def dimension(self) -> int:
        return len(self.pivots)

    def __len__(self) -> int:
        return len(self.pivots)

    def copy(self) -> "FpSubspaceBasis":
        other = FpSubspaceBasis(self.dim, self.p, track=self.track)
        other.pivots = list(self.pivots)
        other._inserted = self._inserted
        if self.p == 2:
            other._rows = dict(self._rows)
            other._combos = dict(self._combos)
        else:
            other._rows = {c: dict(r) for c, r in self._rows.items()}
            other._combos = {c: dict(r) for c, r in self._combos.items()}
            other._columns = {c: set(s) for c, s in self._columns.items()}
        return other

    # ---- reduction ----

    def _reduce_bits(self, x: int) -> tuple[int, int]:
        rem, combo = x, 0
        t = x
        rows = self._rows
        while t:
            low = t & -t
            c = low.bit_length() - 1
            if c in rows:
                rem ^= rows[c]
                if self.track:
                    combo ^= self._combos[c]
            t ^= low
        return rem, combo

    def _reduce_dict(self, v: SparseVector) -> tuple[SparseVector, SparseVector]:
        p = self.p
        rem = dict(v)
        combo: SparseVector = {}
        for c, a in v.items():
            row = self._rows.get(c)
            if row is None:
                continue
            for k, b in row.items():
                value = (rem.get(k, 0) - a * b) % p
                if value:
                    rem[k] = value
                else:
                    rem.pop(k, None)
            if self.track:
                for k, b in self._combos[c].items():
                    value = (combo.get(k, 0) - a * b) % p
                    if value:
                        combo[k] = value
                    else:
                        combo.pop(k, None)
        return rem, combo

    def remainder(self, v: SparseVector) -> SparseVector:
        """v minus its projection onto the span, along the pivot coordinates."""
        if self.p == 2:
            return _sparse_bits(self._reduce_bits(_bits(v))[0])
        return self._reduce_dict(normalize(v, self.p))[0]

    def contains(self, v: SparseVector) -> bool:
        return not self.remainder(v)

    def coordinates(self, v: SparseVector) -> Optional[list[int]]:
        """Coefficients on the basis vectors (pivot order), or None if v is outside."""
        v = normalize(v, self.p)
        if self.remainder(v):
            return None
        return [v.get(c, 0) for c in self.pivots]

    def inserted_coordinates(self, v: SparseVector) -> Optional[list[int]]:
        """Coefficients on the inserted vectors for a tracked basis, or None."""
        if not self.track:
            raise DimensionMismatchError("basis was built without tracking")
        p = self.p
        if p == 2:
            rem, combo = self._reduce_bits(_bits(v))
            if rem:
                return None
            return [(combo >> i) & 1 for i in range(self._inserted)]
        rem, combo = self._reduce_dict(normalize(v, p))
        if rem:
            return None
        # combo holds -(coefficients) relative to the rows' combinations
        return [(-combo.get(i, 0)) % p for i in range(self._inserted)]

    # ---- insertion ----

    def insert(self, v: SparseVector) -> bool:
        """Add v to the span; returns False if it was already there."""
        index = self._inserted
        self._inserted += 1
        if self.p == 2:
            return self._insert_bits(_bits(v), index)
        return self._insert_dict(normalize(v, self.p), index)

    def _insert_bits(self, x: int, index: int) -> bool:
        rem, combo = self._reduce_bits(x)
        if not rem:
            return False
        if self.track:
            combo ^= 1 << index
        c = (rem & -rem).bit_length() - 1
        bit = 1 << c
        rows = self._rows
        for r, row in rows.items():
            if row & bit:
                rows[r] = row ^ rem
                if self.track:
                    self._combos[r] ^= combo
        rows[c] = rem
        if self.track:
            self._combos[c] = combo
        self.pivots.append(c)
        return True

    def _insert_dict(self, v: SparseVector, index: int) -> bool:
        p = self.p
        rem, combo = self._reduce_dict(v)
        if not rem:
            return False
        if self.track:
            # combo holds -(sum a_c combo_c); the new row is v + combo
            combo[index] = (combo.get(index, 0) + 1) % p
        columns = self._columns
        c = min(rem, key=lambda k: (len(columns.get(k, ())), k))
        inv = pow(rem[c], -1, p)
        rem = {k: a * inv % p for k, a in rem.items()}
        combo = {k: a * inv % p for k, a in combo.items() if a * inv % p}
        for r in sorted(columns.get(c, ())):
            row = self._rows[r]
            coef = row[c]
            for k, a in rem.items():
                value = (row.get(k, 0) - coef * a) % p
                if value:
                    if k not in row:
                        columns.setdefault(k, set()).add(r)
                    row[k] = value
                elif k in row:
                    del row[k]
                    columns[k].discard(r)
            if self.track:
                target = self._combos[r]
                for k, a in combo.items():
                    value = (target.get(k, 0) - coef * a) % p
                    if value:
                        target[k] = value
                    else:
                        target.pop(k, None)
        self._rows[c] = rem
        for k in rem:
            columns.setdefault(k, set()).add(c)
        if self.track:
            self._combos[c] = combo
        self.pivots.append(c)
        return True

    # ---- views ----

    def vectors(self) -> list[SparseVector]:
        if self.p == 2:
            return [_sparse_bits(self._rows[c]) for c in self.pivots]
        return [dict(self._rows[c]) for c in self.pivots]

    def is_echelon(self) -> bool:
        """Each pivot entry is 1 and no other basis vector touches that column."""
        vectors = self.vectors()
        for i, c in enumerate(self.pivots):
            for j, v in enumerate(vectors):
                if v.get(c, 0) != (1 if i == j else 0):
                    return False
        return True

    def kernel_vectors(self) -> list[SparseVector]:
        """Basis of {x : <row, x> = 0 for every row}, one vector per free column."""
        p = self.p
        pivot_set = set(self.pivots)
        out = []
        for f in range(self.dim):
            if f in pivot_set:
                continue
            k = {f: 1}
            if p == 2:
                bit = 1 << f
                for c, row in self._rows.items():
                    if row & bit:
                        k[c] = 1
            else:
                for c in self._columns.get(f, ()):
                    k[c] = (-self._rows[c][f]) % p
            out.append(k)
        return out


def row_reduce(rows: Iterable[SparseVector], dim: int, p: int) -> FpSubspaceBasis:
    """Echelon basis of the span of ``rows``; rows may be streamed."""
    basis = FpSubspaceBasis(dim, p)
    count = 0
    for row in rows:
        basis.insert(row)
        count += 1
    logger.debug(f"Row-reduced {count} rows in F_{p}^{dim}: rank {basis.dimension}")
    return basis


class RankKernelImage:
    def __init__(self, rank: int, kernel_basis: list[SparseVector],
                 image_basis: FpSubspaceBasis, pivot_columns: list[int]):
        self.rank = rank
        self.kernel_basis = kernel_basis
        self.image_basis = image_basis
        self.pivot_columns = pivot_columns


def rank_kernel_image(matrix: FpMatrix) -> RankKernelImage:
    """Rank, kernel {x : Mx = 0} and column space of M."""
    echelon = row_reduce(matrix.row_vectors(), matrix.cols, matrix.p)
    kernel = echelon.kernel_vectors()
    columns = matrix.column_vectors()
    pivots = sorted(echelon.pivots)
    image = FpSubspaceBasis.from_vectors((columns[c] for c in pivots),
                                         matrix.rows, matrix.p)
    return RankKernelImage(echelon.dimension, kernel, image, pivots)


def solve_in_span(basis: FpSubspaceBasis, v: SparseVector) -> Optional[list[int]]:
    """Coordinates of v on the basis vectors, or None when v is not in the span."""
    if v and max(v) >= basis.dim:
        raise DimensionMismatchError(
            f"vector coordinate {max(v)} outside ambient dimension {basis.dim}"
        )
    return basis.coordinates(v)


class QuotientSpace:
    """Z/B with a fixed complement basis chosen greedily from Z's basis vectors."""

    def __init__(self, cocycles: FpSubspaceBasis, coboundaries: FpSubspaceBasis):
        if cocycles.dim != coboundaries.dim or cocycles.p != coboundaries.p:
            raise DimensionMismatchError("Z and B must live in the same space")
        self.cocycles = cocycles
        self.coboundaries = coboundaries
        self.p = cocycles.p
        extended = coboundaries.copy()
        self.complement: list[SparseVector] = []
        for z in cocycles.vectors():
            if extended.insert(z):
                self.complement.append(z)
        self._reduced = FpSubspaceBasis.from_vectors(
            (coboundaries.remainder(z) for z in self.complement),
            cocycles.dim, self.p, track=True,
        )

    @property
    def dimension(self) -> int:
        return len(self.complement)

    def coordinates(self, v: SparseVector) -> list[int]:
        if not self.cocycles.contains(v):
            raise NotInSubspaceError("vector is not in the cocycle space")
        coords = self._reduced.inserted_coordinates(self.coboundaries.remainder(v))
        if coords is None:  # pragma: no cover - excluded by B ⊆ Z
            raise NotInSubspaceError("coboundaries are not contained in cocycles")
        return coords

    def lift(self, coordinates: Sequence[int]) -> SparseVector:
        out: SparseVector = {}
        for a, z in zip(coordinates, self.complement):
            for c, b in z.items():
                out[c] = (out.get(c, 0) + a * b) % self.p
        return {c: a for c, a in out.items() if a}


def quotient_coordinates(cocycles: FpSubspaceBasis, coboundaries: FpSubspaceBasis,
                         v: SparseVector) -> list[int]:
    return QuotientSpace(cocycles, coboundaries).coordinates(v)


# ============= Dense Oracle =============


def dense_rank(matrix: np.ndarray, p: int) -> int:
    """Plain Gaussian elimination on a dense copy; the reference for sparse ranks."""
    a = np.array(matrix, dtype=object) % p
    m, n = a.shape
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if a[i, c] % p), None)
        if pivot is None:
            continue
        if pivot != r:
            a[[r, pivot], :] = a[[pivot, r], :]
        a[r, :] = (a[r, :] * pow(int(a[r, c]), -1, p)) % p
        for i in range(r + 1, m):
            if a[i, c] % p:
                a[i, :] = (a[i, :] - a[i, c] * a[r, :]) % p
        r += 1
        if r == m:
            break
    return r
