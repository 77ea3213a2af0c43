"""
Generic slices and combinatorial criteria
=========================================

Arrangements in higher rank are cut down to lines in the projective plane
by a random rank-3 slice that keeps every rank-2 flat.  The slice records
how it was found so the choice can be reproduced.
"""

import json
import random

from milnor_monodromy import gen_braid, gen_named, generic_slice
from milnor_monodromy.analyzer import double_triple_check, graphic_check, theorem1_check
from milnor_monodromy.arrangement import SimpleGraph
from milnor_monodromy.corpus import load

ex39 = gen_named("ex39")
sliced, cert = generic_slice(ex39, seed=7)
print("ex39 rank", ex39.rank, "-> slice rank", sliced.rank, "valid:", cert.valid)
print(json.dumps(cert.to_dict())[:300], "...")

for name, arr in [("braid(5)", gen_braid(5)), ("ex38", gen_named("ex38")), ("ceva", gen_named("ceva"))]:
    print(name, theorem1_check(arr).to_dict())

# a triple point plus one general line; braid(3) has four triple points
print("triple + line:", double_triple_check(load("triple_plus_line")).to_dict())
print("braid(3):", double_triple_check(gen_braid(3)).to_dict())

# graphic arrangements of random connected graphs never carry H^1
rng = random.Random(1)
for _ in range(3):
    n = rng.randint(5, 8)
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    edges |= {(j, i) for i in range(n) for j in range(i) if rng.random() < 0.3}
    report = graphic_check(SimpleGraph.from_edges(sorted(edges)))
    print(f"graph on {n} vertices, {len(edges)} edges:", report.h1)
print("triangle:", graphic_check(SimpleGraph(3, ((0, 1), (0, 2), (1, 2)))).h1)
