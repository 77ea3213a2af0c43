"""Per-eigenvalue vanishing tests for H^1 of the Milnor fiber.

The monodromy eigenvalues are lambda^k with lambda = exp(2 pi i / d).  They
are handled purely through (k, d) and the order d / gcd(d, k); no complex
numbers appear.  For each k != 0 two engines are tried:

* the local-monodromy test: find a hyperplane H such that for every flat
  X on H with |A_X| >= 3 the local monodromy lambda^(k |A_X|) differs from 1,
  i.e. the order does not divide |A_X|;
* the modular test: if the order is p^s, vanishing of H^1 of the Aomoto
  complex with all-ones weights over F_p bounds the eigenspace by zero.

Anything neither engine settles is reported as unknown, with hints.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from .aomoto import WeightVector, aomoto_h1, aomoto_h1_projective
from .arrangement import (
    Arrangement,
    SimpleGraph,
    SliceCertificate,
    detect_product,
    gen_graphic,
    generic_slice,
)
from .errors import ConsistencyError, InapplicableError, PreconditionError
from .fields import is_prime, prime_power
from .graph import ArrGraph, build_graph
from .lattice import FlatList, rank2_flats

PROVED_ZERO = "proved-zero"
UNKNOWN = "unknown"
TRIVIAL = "trivial-monodromy"
UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class EigenvalueIndex:
    d: int
    k: int

    @property
    def order(self) -> int:
        return self.d // gcd(self.d, self.k)


def eigen_order(d: int, k: int) -> EigenvalueIndex:
    if not 0 <= k < d:
        raise PreconditionError(f"eigenvalue index k={k} outside 0..{d - 1}")
    return EigenvalueIndex(d, k)


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class LocalMonodromyCertificate:
    """Witness hyperplane plus, for each dense flat on it, the check
    ``order does not divide multiplicity``."""

    k: int
    order: int
    witness: int
    checks: tuple  # (members, multiplicity, order divides multiplicity)
    kind: str = "CDO"

    def replay(self, arr: Arrangement, flats: FlatList | None = None) -> bool:
        if self.order == 1:
            return False
        flats = flats if flats is not None else rank2_flats(arr)
        dense = tuple(
            (f.members, f.multiplicity, f.multiplicity % self.order == 0)
            for f in flats
            if self.witness in f.members and f.multiplicity >= 3
        )
        return dense == self.checks and not any(c[2] for c in dense)

    def to_dict(self, arr: Arrangement | None = None) -> dict:
        out = {
            "kind": self.kind,
            "witness": self.witness,
            "order": self.order,
            "checks": [
                {"flat": list(m), "multiplicity": mult, "order_divides": div}
                for m, mult, div in self.checks
            ],
        }
        if arr is not None:
            out["witness_label"] = arr.label(self.witness)
        return out


@dataclass(frozen=True)
class ModularCertificate:
    k: int
    order: int
    p: int
    s: int
    h1: int
    projective_h1: int | None
    kind: str = "Modular"

    def replay(self, arr: Arrangement, flats: FlatList | None = None) -> bool:
        if self.order != self.p ** self.s:
            return False
        report = aomoto_h1(arr, WeightVector.all_ones(arr.d, self.p), flats)
        return report.h1_dim == 0 == self.h1

    def to_dict(self, arr: Arrangement | None = None) -> dict:
        return {
            "kind": self.kind,
            "order": self.order,
            "p": self.p,
            "s": self.s,
            "aomoto_h1": self.h1,
            "projective_aomoto_h1": self.projective_h1,
        }


@dataclass(frozen=True)
class LocalSystemCertificate:
    """H^1(M(A), L) = 0 for the rank-one local system with monodromy
    u^(k_H) around H, u a primitive root of unity of order p^s."""

    weights: tuple
    p: int
    h1: int
    kind: str = "LocalSystem"

    def replay(self, arr: Arrangement, flats: FlatList | None = None) -> bool:
        return aomoto_h1(arr, WeightVector(self.weights, self.p), flats).h1_dim == 0

    def to_dict(self, arr: Arrangement | None = None) -> dict:
        return {"kind": self.kind, "weights": list(self.weights), "p": self.p, "aomoto_h1": self.h1}


# ---------------------------------------------------------------------------
# engines


def _check_k(d: int, k: int) -> EigenvalueIndex:
    idx = eigen_order(d, k)
    if k == 0:
        raise PreconditionError("k = 0 is the trivial eigenvalue; nothing to test")
    return idx


def cdo_test(arr: Arrangement, k: int, flats: FlatList | None = None):
    """Smallest-index hyperplane along which every local monodromy differs
    from 1, as a certificate; None if there is none.

    Reads only the rank-2 flats, so for ambient rank > 3 pass the flats of a
    generic slice (identical to the arrangement's own by the slice
    certificate).
    """
    order = _check_k(arr.d, k).order
    if flats is None:
        flats = rank2_flats(arr)
    on = {i: [] for i in range(arr.d)}
    for f in flats:
        if f.multiplicity >= 3:
            for i in f.members:
                on[i].append(f)
    for i in range(arr.d):
        if all(f.multiplicity % order for f in on[i]):
            checks = tuple((f.members, f.multiplicity, False) for f in on[i])
            return LocalMonodromyCertificate(k, order, i, checks)
    return None


def modular_test(arr: Arrangement, k: int, flats: FlatList | None = None):
    """Certificate when the order is p^s and the F_p Aomoto H^1 vanishes."""
    order = _check_k(arr.d, k).order
    pp = prime_power(order)
    if pp is None:
        return None
    p, s = pp
    if flats is None:
        flats = rank2_flats(arr)
    weights = WeightVector.all_ones(arr.d, p)
    h1 = aomoto_h1(arr, weights, flats).h1_dim
    if h1 != 0:
        return None
    # p | order | d, so the deconed complex is defined and must agree
    projective = aomoto_h1_projective(arr, weights, flats).h1_dim
    if projective != h1:
        raise ConsistencyError(f"deconed H^1 {projective} != H^1 {h1} over F{p}")
    return ModularCertificate(k, order, p, s, h1, projective)


def local_system_test(arr: Arrangement, ks: Sequence[int], p: int,
                      flats: FlatList | None = None):
    """Vanishing certificate for the local system with exponents ``ks`` at a
    root of unity of order p^s, via the F_p Aomoto complex with weights
    [k_H] mod p."""
    if len(ks) != arr.d:
        raise PreconditionError(f"{len(ks)} exponents for {arr.d} hyperplanes")
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    g = 0
    for x in ks:
        g = gcd(g, x)
    if g != 1:
        raise PreconditionError(f"exponents have gcd {g}, expected 1")
    bad = [i for i, x in enumerate(ks) if x % p == 0]
    if bad:
        raise PreconditionError(f"exponents at {bad} vanish mod {p}")
    h1 = aomoto_h1(arr, WeightVector(tuple(ks), p), flats).h1_dim
    if h1 != 0:
        return None
    return LocalSystemCertificate(tuple(ks), p, h1)


# ---------------------------------------------------------------------------
# criteria


@dataclass(frozen=True)
class Theorem1Result:
    graph_connected: bool
    multiplicities_at_most_9: bool
    d_not_divisible_by_6: bool
    hyperplane_avoiding_6: int | None
    passed: bool

    @property
    def third_condition(self) -> bool:
        return self.d_not_divisible_by_6 or self.hyperplane_avoiding_6 is not None

    def to_dict(self) -> dict:
        return {
            "graph_connected": self.graph_connected,
            "multiplicities_at_most_9": self.multiplicities_at_most_9,
            "six_condition": self.third_condition,
            "d_not_divisible_by_6": self.d_not_divisible_by_6,
            "witness": self.hyperplane_avoiding_6,
            "passed": self.passed,
            "conclusion": "H1(F) = H1(F)_1" if self.passed else None,
        }


def theorem1_check(arr: Arrangement, flats: FlatList | None = None,
                   graph: ArrGraph | None = None) -> Theorem1Result:
    """Connected graph, all |A_X| <= 9, and 6 does not divide d or some
    hyperplane meets no flat of multiplicity 6."""
    if flats is None and arr.d >= 2:
        flats = rank2_flats(arr)
    if graph is None:
        graph = build_graph(arr, flats)
    flats = flats or ()
    at_most_9 = all(f.multiplicity <= 9 for f in flats)
    not_div6 = arr.d % 6 != 0
    on_six = {i for f in flats if f.multiplicity == 6 for i in f.members}
    witness = next((i for i in range(arr.d) if i not in on_six), None)
    passed = graph.is_connected and at_most_9 and (not_div6 or witness is not None)
    return Theorem1Result(graph.is_connected, at_most_9, not_div6, witness, passed)


@dataclass(frozen=True)
class DoubleTripleResult:
    clauses: tuple
    line: int | None

    @property
    def verdict(self) -> bool:
        return bool(self.clauses)

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "clauses": list(self.clauses), "line": self.line}


def double_triple_check(arr: Arrangement, flats: FlatList | None = None,
                        graph: ArrGraph | None = None) -> DoubleTripleResult:
    """For arrangements with only double and triple points.

    Clauses, all reported when they hold:
    ``connected-graph``; ``single-triple-even-d`` (a line through exactly one
    triple point and d even); ``single-triple-d-gt-3`` (such a line and d > 3).
    """
    if flats is None:
        flats = rank2_flats(arr)
    worst = max(flats.multiplicities(), default=2)
    if worst > 3:
        raise InapplicableError(f"arrangement has a point of multiplicity {worst}")
    if graph is None:
        graph = build_graph(arr, flats)
    triples = {i: 0 for i in range(arr.d)}
    for f in flats:
        if f.multiplicity == 3:
            for i in f.members:
                triples[i] += 1
    line = next((i for i in range(arr.d) if triples[i] == 1), None)
    clauses = []
    if graph.is_connected:
        clauses.append("connected-graph")
    if line is not None and arr.d % 2 == 0:
        clauses.append("single-triple-even-d")
    if line is not None and arr.d > 3:
        clauses.append("single-triple-d-gt-3")
    return DoubleTripleResult(tuple(clauses), line)


@dataclass(frozen=True)
class GraphicReport:
    vertex_count: int
    gamma_connected: bool
    arrangement_graph_connected: bool
    h1: dict
    vanishing_expected: bool

    def to_dict(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "gamma_connected": self.gamma_connected,
            "arrangement_graph_connected": self.arrangement_graph_connected,
            "h1": dict(self.h1),
            "vanishing_expected": self.vanishing_expected,
        }


def graphic_check(gamma: SimpleGraph) -> GraphicReport:
    """Aomoto H^1 (all-ones weights) of a graphic arrangement over F2, F3, Q.

    A connected Gamma on at least 5 vertices forces all three values to be 0,
    even when the arrangement graph is disconnected; a violation raises
    :class:`ConsistencyError`.
    """
    arr = gen_graphic(gamma)
    flats = rank2_flats(arr) if arr.d >= 2 else None
    g = build_graph(arr, flats)
    h1 = {}
    for p in (2, 3, None):
        name = "Q" if p is None else f"F{p}"
        h1[name] = aomoto_h1(arr, WeightVector.all_ones(arr.d, p), flats).h1_dim
    expected = gamma.is_connected() and gamma.vertex_count >= 5
    if expected and any(h1.values()):
        raise ConsistencyError(f"connected graph on {gamma.vertex_count} vertices gave H^1 {h1}")
    return GraphicReport(gamma.vertex_count, gamma.is_connected(), g.is_connected, h1, expected)


# ---------------------------------------------------------------------------
# full analysis


@dataclass
class EigenStatus:
    k: int
    order: int
    status: str
    certificate: object = None
    hints: list = field(default_factory=list)

    def to_dict(self, arr: Arrangement | None = None) -> dict:
        return {
            "k": self.k,
            "order": self.order,
            "status": self.status,
            "certificate": self.certificate.to_dict(arr) if self.certificate else None,
            "hints": list(self.hints),
        }


@dataclass
class MilnorReport:
    d: int
    eigen: list
    arrangement: Arrangement | None = None
    slice_certificate: SliceCertificate | None = None

    @property
    def verdict(self) -> str:
        return TRIVIAL if all(e.status == PROVED_ZERO for e in self.eigen) else UNDETERMINED

    @property
    def h1_fixed_dim(self) -> int:
        return self.d - 1

    def unknown_indices(self) -> list[int]:
        return [e.k for e in self.eigen if e.status == UNKNOWN]

    def to_dict(self) -> dict:
        out = {
            "d": self.d,
            "verdict": self.verdict,
            "h1_fixed_dim": self.h1_fixed_dim,
            "eigen": [e.to_dict(self.arrangement) for e in self.eigen],
        }
        if self.slice_certificate is not None and self.slice_certificate.attempts:
            out["slice"] = self.slice_certificate.to_dict()
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def analyze(arr: Arrangement, seed: int = 0) -> MilnorReport:
    """Try the local-monodromy test, then the modular test, for k = 1..d-1.

    Arrangements of ambient rank > 3 are first cut by a verified generic
    3-dimensional slice; the slice's flats, read back in the original
    hyperplane numbering, drive both tests, so the outcome does not depend on
    the seed.
    """
    d = arr.d
    if d == 1:
        return MilnorReport(1, [], arr)
    cert = None
    if arr.rank > 3 and arr.covector_rank() >= 3:
        sliced, cert = generic_slice(arr, seed)
        back = {new: old for old, new in enumerate(cert.index_map)}
        flats = rank2_flats(sliced).relabel(back)
    else:
        flats = rank2_flats(arr)
    graph = build_graph(arr, flats)
    product = detect_product(arr)

    eigen = []
    for k in range(1, d):
        order = eigen_order(d, k).order
        certificate = cdo_test(arr, k, flats) or modular_test(arr, k, flats)
        if certificate is not None:
            eigen.append(EigenStatus(k, order, PROVED_ZERO, certificate))
            continue
        hints = ["every-line-meets-order-divisible-flat"]
        if prime_power(order) is None:
            hints.append("non-prime-power-order")
        else:
            hints.append("modular-bound-positive")
        if product is not None:
            hints.append("product-detected")
        if graph.is_connected:
            hints.append("admissibility-argument-needed")
        else:
            hints.append(f"graph-components:{len(graph.components)}")
        eigen.append(EigenStatus(k, order, UNKNOWN, None, hints))
    return MilnorReport(d, eigen, arr, cert)
