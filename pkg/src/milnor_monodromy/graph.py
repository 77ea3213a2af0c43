"""The arrangement graph: hyperplanes as vertices, an edge whenever two
hyperplanes meet in a flat that lies on no third hyperplane."""

from __future__ import annotations

from dataclasses import dataclass

from .arrangement import Arrangement
from .lattice import FlatList, rank2_flats


class UnionFind:
    """Disjoint sets over 0..n-1; the representative of a set is its
    smallest element, which keeps component labels deterministic."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra < rb:
            self.parent[rb] = ra
        else:
            self.parent[ra] = rb
        return True

    def groups(self) -> list[tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            out.setdefault(self.find(x), []).append(x)
        return [tuple(out[r]) for r in sorted(out)]


@dataclass(frozen=True)
class ArrGraph:
    vertex_count: int
    edges: frozenset
    components: tuple

    @property
    def is_connected(self) -> bool:
        return len(self.components) == 1

    def component_of(self, v: int) -> int:
        """Label (smallest member) of the component holding ``v``."""
        for comp in self.components:
            if v in comp:
                return comp[0]
        raise IndexError(v)


def build_graph(arr: Arrangement, flats: FlatList | None = None) -> ArrGraph:
    if arr.d == 1:
        return ArrGraph(1, frozenset(), ((0,),))
    if flats is None:
        flats = rank2_flats(arr)
    edges = frozenset(f.members for f in flats if f.multiplicity == 2)
    uf = UnionFind(arr.d)
    for i, j in edges:
        uf.union(i, j)
    return ArrGraph(arr.d, edges, tuple(uf.groups()))


def is_connected(g: ArrGraph) -> bool:
    return g.is_connected


def to_dot(g: ArrGraph, labels=None) -> str:
    """Plain DOT text, one vertex or edge per line."""
    name = (lambda i: labels[i]) if labels is not None else (lambda i: f"H{i}")
    lines = ["graph G {"]
    for v in range(g.vertex_count):
        lines.append(f'  {v} [label="{name(v)}"];')
    for i, j in sorted(g.edges):
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
