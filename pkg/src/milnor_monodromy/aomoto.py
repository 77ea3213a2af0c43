"""Orlik-Solomon algebra in degrees <= 2 and the first cohomology of the
Aomoto complex (A*, omega ^) over Q or F_p.

Degree 2 is assembled from Brieskorn blocks: for a flat X with members
i0 < i1 < ... the block has basis a_{i0} a_{il} (l >= 1), and any other
product a_i a_j inside X is rewritten as a_{i0} a_j - a_{i0} a_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .arrangement import Arrangement
from .errors import FieldMismatchError, PreconditionError
from .fields import GF, is_prime, rank, to_ring
from .lattice import FlatList, rank2_flats


def ring_name(p: int | None) -> str:
    return "Q" if p is None else f"F{p}"


@dataclass(frozen=True)
class WeightVector:
    """Coefficients of a degree-1 element sum_H w_H a_H; ``p`` is None for Q."""

    entries: tuple
    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise PreconditionError(f"{self.p} is not prime")
        object.__setattr__(self, "entries", tuple(_coerce_weight(x, self.p) for x in self.entries))

    @classmethod
    def all_ones(cls, d: int, p: int | None = None) -> "WeightVector":
        return cls(tuple([1] * d), p)

    @classmethod
    def zero(cls, d: int, p: int | None = None) -> "WeightVector":
        return cls(tuple([0] * d), p)

    def __len__(self):
        return len(self.entries)

    @property
    def ring(self) -> str:
        return ring_name(self.p)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def total(self):
        return sum(self.entries, self._zero())

    def _zero(self):
        return Fraction(0) if self.p is None else GF(0, self.p)

    def describe(self) -> str:
        if all(x == 1 for x in self.entries):
            return "all-ones"
        return "[" + ",".join(str(x.value if isinstance(x, GF) else x) for x in self.entries) + "]"


def _coerce_weight(x, p: int | None):
    if isinstance(x, GF):
        if x.p != p:
            raise FieldMismatchError(f"weight in F_{x.p} given for ring {ring_name(p)}")
        return x
    return to_ring(x, p)


@dataclass(frozen=True)
class OS2Basis:
    """Degree-2 basis: ``rows[n] = (flat position, base i0, partner j)``."""

    blocks: tuple
    rows: tuple
    row_of: dict

    @property
    def dim(self) -> int:
        return len(self.rows)


def os2_basis(arr: Arrangement, flats: FlatList | None = None) -> OS2Basis:
    if flats is None:
        flats = rank2_flats(arr) if arr.d >= 2 else FlatList((), {})
    rows, row_of, blocks = [], {}, []
    for n, f in enumerate(flats):
        base, *others = f.members
        start = len(rows)
        for j in others:
            row_of[(base, j)] = len(rows)
            rows.append((n, base, j))
        blocks.append((f.members, start, len(rows)))
    return OS2Basis(tuple(blocks), tuple(rows), row_of)


def wedge_matrix(arr: Arrangement, weights: WeightVector, flats: FlatList | None = None,
                 basis: OS2Basis | None = None) -> list[list]:
    """Matrix of b -> omega ^ b from A^1 (columns) to A^2 (rows, block order)."""
    if len(weights) != arr.d:
        raise PreconditionError(f"{len(weights)} weights for {arr.d} hyperplanes")
    if flats is None and arr.d >= 2:
        flats = rank2_flats(arr)
    if basis is None:
        basis = os2_basis(arr, flats)
    w = weights.entries
    zero = weights._zero()
    matrix = [[zero] * arr.d for _ in range(basis.dim)]
    for members, _, _ in basis.blocks:
        base = members[0]
        # pairs through the base element land directly on a basis vector
        for j in members[1:]:
            row = matrix[basis.row_of[(base, j)]]
            row[j] = row[j] + w[base]
            row[base] = row[base] - w[j]
        # a_i a_j = a_base a_j - a_base a_i for i < j both off the base
        for i, j in combinations(members[1:], 2):
            row_j = matrix[basis.row_of[(base, j)]]
            row_i = matrix[basis.row_of[(base, i)]]
            row_j[j] = row_j[j] + w[i]
            row_j[i] = row_j[i] - w[j]
            row_i[j] = row_i[j] - w[i]
            row_i[i] = row_i[i] + w[j]
    return matrix


@dataclass(frozen=True)
class AomotoReport:
    h1_dim: int
    kernel_dim: int
    ring: str
    weights: str

    def to_dict(self) -> dict:
        return {
            "h1_dim": self.h1_dim,
            "kernel_dim": self.kernel_dim,
            "ring": self.ring,
            "weights": self.weights,
        }


def _report(d: int, kernel_dim: int, weights: WeightVector) -> AomotoReport:
    # omega = 0: zero differential, H^1 is all of the degree-1 space
    h1 = d if weights.is_zero() else kernel_dim - 1
    return AomotoReport(h1, kernel_dim, weights.ring, weights.describe())


def aomoto_h1(arr: Arrangement, weights: WeightVector, flats: FlatList | None = None) -> AomotoReport:
    """dim H^1(A*, omega ^) = dim ker(omega ^ : A^1 -> A^2) - 1 (omega != 0)."""
    matrix = wedge_matrix(arr, weights, flats)
    r = rank(matrix) if matrix else 0
    return _report(arr.d, arr.d - r, weights)


def aomoto_h1_projective(arr: Arrangement, weights: WeightVector,
                         flats: FlatList | None = None) -> AomotoReport:
    """H^1 of the deconed complex, A^1 replaced by ker(d: a_H -> 1).

    Needs sum_H w_H = 0 in the coefficient ring; for the all-ones weight over
    F_p that means p divides the number of hyperplanes.  For omega != 0 the
    result equals :func:`aomoto_h1`; for omega = 0 it is d - 1.
    """
    if weights.total() != 0:
        raise PreconditionError(
            f"sum of weights is {weights.total()} in {weights.ring}, not 0; "
            "deconing needs it to vanish"
        )
    matrix = wedge_matrix(arr, weights, flats)
    one = weights._zero() + 1
    matrix.append([one] * arr.d)
    kernel = arr.d - rank(matrix)
    if weights.is_zero():
        return AomotoReport(kernel, kernel, weights.ring, weights.describe())
    return _report(arr.d, kernel, weights)


def _dependent(u, v, w) -> bool:
    """True when three covectors span less than 3 dimensions: every 3x3
    minor vanishes.  Division-free, so cheap over cyclotomic fields."""
    for a, b, c in combinations(range(len(u)), 3):
        det = (u[a] * (v[b] * w[c] - v[c] * w[b])
               - u[b] * (v[a] * w[c] - v[c] * w[a])
               + u[c] * (v[a] * w[b] - v[b] * w[a]))
        if det != 0:
            return False
    return True


@lru_cache(maxsize=64)
def _dependent_triples(arr: Arrangement) -> tuple:
    hs = arr.hyperplanes
    return tuple(t for t in combinations(range(arr.d), 3) if _dependent(*(hs[i] for i in t)))


def os_oracle_h1(arr: Arrangement, weights: WeightVector) -> AomotoReport:
    """Independent H^1 computation that never looks at the flat list.

    A^2 is taken as the full exterior square on d generators modulo the span
    of d(e_i e_j e_k) = e_j e_k - e_i e_k + e_i e_j over every triple whose
    covectors are linearly dependent (all 3x3 minors vanish).  The
    kernel of omega ^ is then ker(A^1 -> Lambda^2 / relations).
    """
    d = arr.d
    if len(weights) != d:
        raise PreconditionError(f"{len(weights)} weights for {d} hyperplanes")
    pairs = list(combinations(range(d), 2))
    pos = {pair: n for n, pair in enumerate(pairs)}
    zero = weights._zero()
    one = zero + 1
    w = weights.entries

    relations = []
    for i, j, k in _dependent_triples(arr):
        vec = [zero] * len(pairs)
        vec[pos[(j, k)]] = one
        vec[pos[(i, k)]] = -one
        vec[pos[(i, j)]] = one
        relations.append(vec)

    images = []
    for c in range(d):
        # omega ^ e_c = sum_i w_i e_i e_c
        vec = [zero] * len(pairs)
        for i in range(d):
            if i < c:
                vec[pos[(i, c)]] = vec[pos[(i, c)]] + w[i]
            elif i > c:
                vec[pos[(c, i)]] = vec[pos[(c, i)]] - w[i]
        images.append(vec)

    if not pairs:
        return _report(d, d, weights)
    rel_rank = rank(relations) if relations else 0
    combined = rank(relations + images)
    return _report(d, d - (combined - rel_rank), weights)

