"""Central hyperplane arrangements: data model, JSON documents, generators,
generic 3-dimensional slices and product detection."""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    DuplicateHyperplaneError,
    FieldMismatchError,
    MalformedDocumentError,
    PreconditionError,
    SliceError,
    ZeroCovectorError,
)
from .fields import CycloElement, euler_phi, primitive_integer, rank, rational_str


def _entry_key(x):
    return x.sort_key() if isinstance(x, CycloElement) else (x,)


def covector_key(covector: Sequence) -> tuple:
    return tuple(_entry_key(x) for x in covector)


def normalize_hyperplane(covector: Sequence, conductor: int = 1) -> tuple:
    """Canonical representative of the hyperplane ``covector = 0``.

    Over Q the result is a primitive integer vector whose first nonzero entry
    is positive; over Q(zeta_m) the first nonzero entry is scaled to 1.
    """
    if conductor == 1:
        values = [Fraction(x) for x in covector]
        if not any(values):
            raise ZeroCovectorError("zero covector")
        values = primitive_integer(values)
        lead = next(v for v in values if v != 0)
        if lead < 0:
            values = [-v for v in values]
        return tuple(values)

    values = [
        x if isinstance(x, CycloElement) else CycloElement.from_rational(conductor, x)
        for x in covector
    ]
    for v in values:
        if v.m != conductor:
            raise FieldMismatchError(f"entry in Q(zeta_{v.m}), expected Q(zeta_{conductor})")
    lead = next((v for v in values if not v.is_zero()), None)
    if lead is None:
        raise ZeroCovectorError("zero covector")
    inv = lead.inverse()
    return tuple(v * inv for v in values)


@dataclass(frozen=True)
class Arrangement:
    """A central arrangement given by covectors over Q (``conductor == 1``) or
    Q(zeta_m).

    Construction normalizes every covector, rejects zero and proportional
    covectors, and sorts hyperplanes lexicographically, so two arrangements
    with the same hyperplanes compare equal.  Labels travel with their
    hyperplanes through the sort.
    """

    rank: int
    hyperplanes: tuple
    conductor: int = 1
    labels: tuple | None = None

    def __post_init__(self):
        if self.rank < 2:
            raise PreconditionError(f"ambient rank must be >= 2, got {self.rank}")
        if self.conductor < 1:
            raise PreconditionError(f"conductor must be positive, got {self.conductor}")
        if not self.hyperplanes:
            raise PreconditionError("an arrangement needs at least one hyperplane")
        if self.labels is not None and len(self.labels) != len(self.hyperplanes):
            raise PreconditionError("one label per hyperplane")
        normalized = []
        for i, h in enumerate(self.hyperplanes):
            if len(h) != self.rank:
                raise MalformedDocumentError(
                    f"hyperplane {i} has {len(h)} coordinates, expected {self.rank}"
                )
            try:
                normalized.append(normalize_hyperplane(h, self.conductor))
            except ZeroCovectorError:
                raise ZeroCovectorError(f"hyperplane {i} is the zero covector") from None
        seen: dict[tuple, int] = {}
        for i, h in enumerate(normalized):
            if h in seen:
                raise DuplicateHyperplaneError(seen[h], i)
            seen[h] = i
        order = sorted(range(len(normalized)), key=lambda i: covector_key(normalized[i]))
        object.__setattr__(self, "hyperplanes", tuple(normalized[i] for i in order))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(str(self.labels[i]) for i in order))

    def __len__(self):
        return len(self.hyperplanes)

    @property
    def d(self) -> int:
        return len(self.hyperplanes)

    @property
    def is_rational(self) -> bool:
        return self.conductor == 1

    def label(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return f"H{i}"

    def covector_rank(self) -> int:
        return rank(self.hyperplanes)

    def index_of(self, covector: Sequence) -> int:
        """Index of the hyperplane ``covector = 0``."""
        target = normalize_hyperplane(covector, self.conductor)
        return self.hyperplanes.index(target)


# ---------------------------------------------------------------------------
# JSON documents


def _parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise MalformedDocumentError(f"malformed rational {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise MalformedDocumentError(f"malformed rational {value!r}") from None
    raise MalformedDocumentError(f"malformed rational {value!r}")


def _parse_coefficient(value, conductor: int):
    if conductor == 1:
        if isinstance(value, list):
            raise FieldMismatchError("power-basis coefficient list in a rational document")
        return _parse_rational(value)
    if not isinstance(value, list):
        return CycloElement.from_rational(conductor, _parse_rational(value))
    n = euler_phi(conductor)
    if len(value) != n:
        raise FieldMismatchError(
            f"coefficient {value!r} has {len(value)} entries; Q(zeta_{conductor}) needs {n}"
        )
    return CycloElement(conductor, [_parse_rational(v) for v in value])


def parse_arrangement(document: dict | str) -> Arrangement:
    """Build an :class:`Arrangement` from a JSON document (dict or text)."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise MalformedDocumentError(f"invalid JSON: {exc}") from None
    if not isinstance(document, dict):
        raise MalformedDocumentError("document must be a JSON object")
    try:
        field_doc = document["field"]
        ambient = document["rank"]
        rows = document["hyperplanes"]
    except KeyError as exc:
        raise MalformedDocumentError(f"missing key {exc.args[0]!r}") from None
    kind = field_doc.get("type") if isinstance(field_doc, dict) else None
    if kind == "rational":
        conductor = 1
    elif kind == "cyclotomic":
        conductor = field_doc.get("conductor")
        if not isinstance(conductor, int) or isinstance(conductor, bool) or conductor < 1:
            raise MalformedDocumentError(f"bad conductor {conductor!r}")
    else:
        raise MalformedDocumentError(f"unknown field {field_doc!r}")
    if not isinstance(ambient, int) or not isinstance(rows, list):
        raise MalformedDocumentError("'rank' must be an integer and 'hyperplanes' a list")
    covectors = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise MalformedDocumentError(f"hyperplane {i} is not a list")
        covectors.append(tuple(_parse_coefficient(v, conductor) for v in row))
    labels = document.get("labels")
    return Arrangement(ambient, tuple(covectors), conductor, tuple(labels) if labels else None)


def to_document(arr: Arrangement) -> dict:
    if arr.is_rational:
        field_doc = {"type": "rational"}
        rows = [[rational_str(x) for x in h] for h in arr.hyperplanes]
    else:
        field_doc = {"type": "cyclotomic", "conductor": arr.conductor}
        rows = [[[rational_str(c) for c in x.coeffs] for x in h] for h in arr.hyperplanes]
    doc = {"field": field_doc, "rank": arr.rank, "hyperplanes": rows}
    if arr.labels is not None:
        doc["labels"] = list(arr.labels)
    return doc


def dumps(arr: Arrangement) -> str:
    """JSON text with one covector per line."""
    doc = to_document(arr)
    rows = ",\n".join("    " + json.dumps(row) for row in doc["hyperplanes"])
    parts = [
        f'  "field": {json.dumps(doc["field"])}',
        f'  "rank": {doc["rank"]}',
        f'  "hyperplanes": [\n{rows}\n  ]',
    ]
    if "labels" in doc:
        parts.append(f'  "labels": {json.dumps(doc["labels"], ensure_ascii=False)}')
    return "{\n" + ",\n".join(parts) + "\n}"


def load(path) -> Arrangement:
    with open(path, encoding="utf-8") as fh:
        return parse_arrangement(fh.read())


# ---------------------------------------------------------------------------
# generators


@dataclass(frozen=True)
class SimpleGraph:
    """Simple graph on vertices 0..vertex_count-1 (no loops, no multi-edges)."""

    vertex_count: int
    edges: tuple = field(default=())

    def __post_init__(self):
        seen = set()
        cleaned = []
        for i, j in self.edges:
            if i == j:
                raise PreconditionError(f"loop at vertex {i}")
            if not (0 <= i < self.vertex_count and 0 <= j < self.vertex_count):
                raise PreconditionError(f"edge ({i}, {j}) leaves the vertex range")
            e = (min(i, j), max(i, j))
            if e in seen:
                raise PreconditionError(f"multi-edge {e}")
            seen.add(e)
            cleaned.append(e)
        object.__setattr__(self, "edges", tuple(sorted(cleaned)))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertex_count: int | None = None):
        edges = [tuple(e) for e in edges]
        if vertex_count is None:
            vertex_count = 1 + max((max(e) for e in edges), default=-1)
        return cls(vertex_count, tuple(edges))

    def is_connected(self) -> bool:
        if self.vertex_count <= 1:
            return True
        adjacency = {v: [] for v in range(self.vertex_count)}
        for i, j in self.edges:
            adjacency[i].append(j)
            adjacency[j].append(i)
        seen = {0}
        stack = [0]
        while stack:
            for w in adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count


def _edge_label(i: int, j: int, n: int) -> str:
    if n <= 9:
        return f"H{i + 1}{j + 1}"
    return f"H{i + 1}_{j + 1}"


def gen_graphic(graph: SimpleGraph) -> Arrangement:
    """Graphic arrangement: one hyperplane x_i - x_j per edge (ij)."""
    if not graph.edges:
        raise PreconditionError("graphic arrangement needs at least one edge")
    n = graph.vertex_count
    if n < 2:
        raise PreconditionError("graphic arrangement needs at least two vertices")
    rows, labels = [], []
    for i, j in graph.edges:
        v = [0] * n
        v[i], v[j] = 1, -1
        rows.append(tuple(v))
        labels.append(_edge_label(i, j, n))
    return Arrangement(n, tuple(rows), 1, tuple(labels))


def gen_braid(n: int) -> Arrangement:
    """Braid arrangement x_i - x_j, 1 <= i < j <= n+1, in rank n+1."""
    if n < 2:
        raise PreconditionError(f"braid arrangement needs n >= 2, got {n}")
    complete = SimpleGraph(n + 1, tuple(combinations(range(n + 1), 2)))
    return gen_graphic(complete)


def graph_of_graphic(arr: Arrangement) -> SimpleGraph:
    """Recover Gamma from an arrangement whose covectors are all e_i - e_j."""
    if not arr.is_rational:
        raise PreconditionError("graphic arrangements are defined over Q")
    edges = []
    for h in arr.hyperplanes:
        support = [c for c, x in enumerate(h) if x != 0]
        if len(support) != 2 or sorted(h[c] for c in support) != [-1, 1]:
            raise PreconditionError(f"covector {[str(x) for x in h]} is not of the form x_i - x_j")
        edges.append(tuple(support))
    return SimpleGraph(arr.rank, tuple(edges))


def _ceva() -> Arrangement:
    z = CycloElement.zeta
    rows, labels = [], []
    pairs = [((0, 1), "x", "y"), ((1, 2), "y", "z"), ((0, 2), "x", "z")]
    for (a, b), u, v in pairs:
        for e in range(3):
            row = [0, 0, 0]
            row[a], row[b] = 1, -z(3, e)
            rows.append(tuple(row))
            labels.append(f"{u}-w^{e}{v}" if e else f"{u}-{v}")
    return Arrangement(3, tuple(rows), 3, tuple(labels))


def _ex36() -> Arrangement:
    z = CycloElement.zeta
    rows = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    labels = ["x", "y", "z"]
    pairs = [((0, 1), "x", "y"), ((1, 2), "y", "z"), ((0, 2), "x", "z")]
    for (a, b), u, v in pairs:
        for e in range(4):
            row = [0, 0, 0]
            row[a], row[b] = 1, -z(4, e)
            rows.append(tuple(row))
            labels.append(f"{u}-i^{e}{v}" if e else f"{u}-{v}")
    return Arrangement(3, tuple(rows), 4, tuple(labels))


def _ex37() -> Arrangement:
    rows = {
        "x": (1, 0, 0), "y": (0, 1, 0), "z": (0, 0, 1),
        "x-y": (1, -1, 0), "x+y": (1, 1, 0),
        "y-z": (0, 1, -1), "y+z": (0, 1, 1),
        "x-z": (1, 0, -1), "x+z": (1, 0, 1),
    }
    return Arrangement(3, tuple(rows.values()), 1, tuple(rows))


def _ex38() -> Arrangement:
    rows = {
        "x": (1, 0, 0), "y": (0, 1, 0), "x+y": (1, 1, 0), "x-y": (1, -1, 0),
        "x+2y": (1, 2, 0), "x-2y": (1, -2, 0),
    }
    for c in (1, 2, 3, -1, -2, -3):
        rows[f"2x+y{c:+d}z".replace("+1z", "+z").replace("-1z", "-z")] = (2, 1, c)
    return Arrangement(3, tuple(rows.values()), 1, tuple(rows))


def _ex39() -> Arrangement:
    rows, labels = [], []
    for (u, v), (a, b) in ((("x", "y"), (0, 1)), (("z", "t"), (2, 3))):
        for coeffs, name in (
            ((1, 0), u), ((0, 1), v), ((1, -1), f"{u}-{v}"), ((1, 1), f"{u}+{v}"),
            ((1, -2), f"{u}-2{v}"), ((1, 2), f"{u}+2{v}"),
        ):
            row = [0, 0, 0, 0]
            row[a], row[b] = coeffs
            rows.append(tuple(row))
            labels.append(name)
    return Arrangement(4, tuple(rows), 1, tuple(labels))


REMARK311_EDGES = ((1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (3, 4), (3, 5))


def _remark311() -> Arrangement:
    return gen_graphic(SimpleGraph(5, tuple((i - 1, j - 1) for i, j in REMARK311_EDGES)))


NAMED = {
    "ceva": _ceva,
    "ex36": _ex36,
    "ex37": _ex37,
    "ex38": _ex38,
    "ex39": _ex39,
    "remark311": _remark311,
}


def gen_named(name: str) -> Arrangement:
    try:
        return NAMED[name]()
    except KeyError:
        raise PreconditionError(
            f"unknown arrangement {name!r}; choose from {', '.join(NAMED)}"
        ) from None


# ---------------------------------------------------------------------------
# generic slices


@dataclass(frozen=True)
class SliceCertificate:
    """Evidence that a rank-3 restriction keeps the rank-2 flats intact.

    ``index_map[i]`` is the position in the slice of original hyperplane i.
    """

    seed: int
    attempts: int
    bound: int
    basis: tuple
    index_map: tuple
    original_multiplicities: tuple
    slice_multiplicities: tuple
    members_match: bool

    @property
    def valid(self) -> bool:
        return self.members_match and self.original_multiplicities == self.slice_multiplicities

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "attempts": self.attempts,
            "bound": self.bound,
            "basis": [[rational_str(x) if not isinstance(x, CycloElement) else repr(x)
                       for x in row] for row in self.basis],
            "index_map": list(self.index_map),
            "multiplicities": list(self.slice_multiplicities),
            "valid": self.valid,
        }


def _multiset(flat_list) -> tuple:
    return tuple(sorted(Counter(f.multiplicity for f in flat_list.flats).items()))


def _restrict(arr: Arrangement, basis) -> list[tuple]:
    # basis has 3 columns; restricted covector = covector . basis
    return [
        tuple(sum((h[r] * basis[r][c] for r in range(arr.rank)), 0 * h[0]) for c in range(3))
        for h in arr.hyperplanes
    ]


def slice_attempt(arr: Arrangement, basis) -> tuple[Arrangement | None, str, SliceCertificate | None]:
    """Restrict to the column span of ``basis`` and test genericity.

    Returns (slice, failure mode, partial certificate); slice is None on failure.
    """
    from .lattice import rank2_flats

    if rank(basis) != 3:
        return None, "degenerate basis", None
    restricted = _restrict(arr, basis)
    normalized = []
    for i, h in enumerate(restricted):
        if all(x == 0 for x in h):
            return None, f"hyperplane {i} contains the slice", None
        normalized.append(normalize_hyperplane(h, arr.conductor))
    if len(set(normalized)) != len(normalized):
        return None, "two hyperplanes restrict to the same line", None
    sliced = Arrangement(3, tuple(restricted), arr.conductor, arr.labels)
    index_map = tuple(sliced.hyperplanes.index(h) for h in normalized)
    original_flats = rank2_flats(arr)
    slice_flats = rank2_flats(sliced)
    back = {v: k for k, v in enumerate(index_map)}
    original_sets = sorted(f.members for f in original_flats.flats)
    slice_sets = sorted(tuple(sorted(back[i] for i in f.members)) for f in slice_flats.flats)
    cert = SliceCertificate(
        seed=0,
        attempts=1,
        bound=0,
        basis=tuple(tuple(row) for row in basis),
        index_map=index_map,
        original_multiplicities=_multiset(original_flats),
        slice_multiplicities=_multiset(slice_flats),
        members_match=original_sets == slice_sets,
    )
    if not cert.valid:
        return None, "slice merges rank-2 flats", cert
    return sliced, "", cert


def generic_slice(arr: Arrangement, seed: int = 0, max_attempts: int = 32):
    """Restrict to a random 3-dimensional subspace, verified generic.

    The subspace is the column span of a random integer (rank x 3) matrix with
    entries in [-B, B]; B grows with the attempt number.  Genericity is
    checked, never assumed: the restricted lines must be pairwise distinct and
    the rank-2 flats must survive with the same hyperplane sets (hence the same
    multiplicity multiset).  Rank-3 input is returned unchanged.
    """
    from .lattice import rank2_flats

    if arr.rank < 3:
        raise PreconditionError("generic slice needs ambient rank >= 3")
    if arr.rank == 3:
        ms = _multiset(rank2_flats(arr)) if arr.d >= 2 else ()
        identity = tuple(tuple(int(r == c) for c in range(3)) for r in range(3))
        return arr, SliceCertificate(seed, 0, 0, identity, tuple(range(arr.d)), ms, ms, True)
    if arr.covector_rank() < 3:
        raise PreconditionError("covector matrix has rank < 3; nothing to slice")
    failure = "no attempt made"
    for attempt in range(max_attempts):
        rng = random.Random(f"slice:{seed}:{attempt}")
        bound = 1 + attempt
        basis = [[rng.randint(-bound, bound) for _ in range(3)] for _ in range(arr.rank)]
        sliced, failure, cert = slice_attempt(arr, basis)
        if sliced is not None:
            return sliced, SliceCertificate(
                seed, attempt + 1, bound, cert.basis, cert.index_map,
                cert.original_multiplicities, cert.slice_multiplicities, cert.members_match,
            )
    raise SliceError(f"no generic slice after {max_attempts} attempts; last failure: {failure}")


# ---------------------------------------------------------------------------
# products


@dataclass(frozen=True)
class ProductPartition:
    blocks: tuple
    factor_index: tuple

    def factor(self, b: int) -> list[int]:
        """Hyperplane indices living in block ``b``."""
        return [i for i, f in enumerate(self.factor_index) if f == b]


def detect_product(arr: Arrangement) -> ProductPartition | None:
    """Finest split of the coordinates with every covector inside one block.

    Works in the given coordinates only.  Coordinates used by no covector are
    a free factor and are left out of the blocks.
    """
    parent = list(range(arr.rank))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    used = set()
    for h in arr.hyperplanes:
        support = [c for c, x in enumerate(h) if x != 0]
        used.update(support)
        for c in support[1:]:
            a, b = find(support[0]), find(c)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for c in sorted(used):
        groups.setdefault(find(c), []).append(c)
    blocks = tuple(tuple(g) for g in sorted(groups.values()))
    if len(blocks) < 2:
        return None
    where = {c: b for b, block in enumerate(blocks) for c in block}
    factor_index = tuple(where[next(c for c, x in enumerate(h) if x != 0)] for h in arr.hyperplanes)
    return ProductPartition(blocks, factor_index)

