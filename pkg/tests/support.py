"""Shared generators and brute-force oracles for the test-suite."""

import random
from itertools import combinations, product

from milnor_monodromy import Arrangement
from milnor_monodromy.arrangement import SimpleGraph, normalize_hyperplane

POOL = sorted({normalize_hyperplane(v) for v in product(range(-2, 3), repeat=3) if any(v)})


def random_arrangement(rng: random.Random, max_d: int = 12, min_d: int = 3) -> Arrangement:
    """Rank-3 arrangement over Q drawn from small covectors, so that points
    of multiplicity >= 3 are common."""
    d = rng.randint(min_d, max_d)
    if rng.random() < 0.5:
        pool = [v for v in POOL if all(abs(x) <= 1 for x in v)]
    else:
        pool = POOL
    return Arrangement(3, tuple(rng.sample(pool, min(d, len(pool)))))


def random_connected_graph(rng: random.Random, n_min: int = 5, n_max: int = 8) -> SimpleGraph:
    n = rng.randint(n_min, n_max)
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for e in combinations(range(n), 2):
        if rng.random() < 0.3:
            edges.add(e)
    return SimpleGraph(n, tuple(sorted(edges)))


def cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def brute_force_points(arr: Arrangement) -> dict:
    """Intersection points of a line arrangement via cross products, mapped
    to the set of lines through them.  Independent of any RREF code."""
    points = {}
    for i, j in combinations(range(arr.d), 2):
        p = normalize_hyperplane(cross(arr.hyperplanes[i], arr.hyperplanes[j]), arr.conductor)
        points.setdefault(p, set()).update((i, j))
    return points


# filled by test_acceptance, printed by the terminal-summary hook in conftest
ACCEPTANCE_LINES: list[str] = []
