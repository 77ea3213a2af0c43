"""Rank-2 part of the intersection lattice."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .arrangement import Arrangement
from .errors import PreconditionError
from .fields import rref


@dataclass(frozen=True)
class Rank2Flat:
    """A codimension-2 flat X with the sorted indices of the hyperplanes
    containing it.  ``key`` is the RREF of the covector span of X."""

    key: tuple
    members: tuple

    @property
    def multiplicity(self) -> int:
        return len(self.members)

    def __contains__(self, i: int) -> bool:
        return i in self.members


@dataclass(frozen=True)
class FlatList:
    flats: tuple
    pair_index: dict

    def __iter__(self):
        return iter(self.flats)

    def __len__(self):
        return len(self.flats)

    def flat_of(self, i: int, j: int) -> Rank2Flat:
        return self.flats[self.pair_index[(min(i, j), max(i, j))]]

    def multiplicities(self) -> list[int]:
        return [f.multiplicity for f in self.flats]

    def relabel(self, mapping) -> "FlatList":
        """Rename hyperplane indices through ``mapping[old] = new``."""
        flats = sorted(
            (Rank2Flat(f.key, tuple(sorted(mapping[i] for i in f.members))) for f in self.flats),
            key=lambda f: f.members,
        )
        return _index(flats)


def span_key(u, v) -> tuple:
    reduced, r, _ = rref([u, v])
    assert r == 2, "distinct hyperplanes have independent covectors"
    return tuple(tuple(row) for row in reduced)


def _index(flats) -> FlatList:
    pair_index = {}
    for n, f in enumerate(flats):
        for pair in combinations(f.members, 2):
            pair_index[pair] = n
    return FlatList(tuple(flats), pair_index)


def rank2_flats(arr: Arrangement) -> FlatList:
    """Group all pairs of hyperplanes by the span of their covectors.

    Two pairs share a key exactly when they cut out the same codimension-2
    subspace, so every group is closed under "contains X".
    """
    if arr.d < 2:
        raise PreconditionError("rank-2 flats need at least two hyperplanes")
    groups: dict[tuple, set] = {}
    for i, j in combinations(range(arr.d), 2):
        key = span_key(arr.hyperplanes[i], arr.hyperplanes[j])
        groups.setdefault(key, set()).update((i, j))
    flats = sorted(
        (Rank2Flat(key, tuple(sorted(members))) for key, members in groups.items()),
        key=lambda f: f.members,
    )
    return _index(flats)


def flats_on_hyperplane(arr: Arrangement, i: int, flats: FlatList | None = None) -> list[Rank2Flat]:
    if not 0 <= i < arr.d:
        raise PreconditionError(f"hyperplane index {i} out of range 0..{arr.d - 1}")
    if flats is None:
        flats = rank2_flats(arr)
    return [f for f in flats if i in f.members]


def euler_char_projective(arr: Arrangement, flats: FlatList | None = None) -> int:
    """Euler characteristic of the projective complement of a line arrangement:
    3 - 2d + sum over points of (multiplicity - 1)."""
    if arr.rank != 3:
        raise PreconditionError(f"needs ambient rank 3, got {arr.rank}")
    if arr.d == 1:
        return 1
    if flats is None:
        flats = rank2_flats(arr)
    return 3 - 2 * arr.d + sum(f.multiplicity - 1 for f in flats)
