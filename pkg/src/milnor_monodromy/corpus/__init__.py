"""Bundled arrangement documents with golden values.

``manifest.json`` lists each document together with expected invariants.
Every golden records its ``basis``: ``literature`` (a published statement),
``computed`` (obtained by two independent computations before freezing) or
``definition`` (immediate from the construction).
"""

from __future__ import annotations

import json
from collections import Counter
from importlib import resources

from ..aomoto import WeightVector, aomoto_h1
from ..analyzer import analyze
from ..arrangement import Arrangement, parse_arrangement
from ..graph import build_graph
from ..lattice import rank2_flats


def _read(name: str) -> str:
    return resources.files(__name__).joinpath(name).read_text(encoding="utf-8")


def entries() -> list[dict]:
    return json.loads(_read("manifest.json"))["entries"]


def load(name: str) -> Arrangement:
    for e in entries():
        if e["name"] == name:
            return parse_arrangement(_read(e["file"]))
    raise KeyError(name)


def observed(arr: Arrangement) -> dict:
    """The invariants the manifest records, computed afresh."""
    flats = rank2_flats(arr)
    report = analyze(arr)
    return {
        "d": arr.d,
        "multiplicities": {str(m): c for m, c in sorted(Counter(flats.multiplicities()).items())},
        "components": len(build_graph(arr, flats).components),
        "h1": {
            ("Q" if p is None else f"F{p}"): aomoto_h1(arr, WeightVector.all_ones(arr.d, p), flats).h1_dim
            for p in (2, 3, None)
        },
        "verdict": report.verdict,
        "unknown_orders": sorted({e.order for e in report.eigen if e.status == "unknown"}),
    }


def verify() -> list[str]:
    """Mismatches between the manifest and a fresh computation."""
    failures = []
    for e in entries():
        seen = observed(load(e["name"]))
        for key, golden in e["golden"].items():
            value = golden["value"]
            got = seen[key]
            if key == "h1":
                got = {r: got[r] for r in value}
            if got != value:
                failures.append(f"{e['name']}.{key}: expected {value}, got {got}")
    return failures
