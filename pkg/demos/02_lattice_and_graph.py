"""
Rank-2 flats and the arrangement graph
======================================

Lines of an arrangement meet in points; a point where exactly two lines
cross gives an edge of the graph.  Braid arrangements with four or more
strands have connected graphs, the Ceva arrangement has no edges at all.
"""

from collections import Counter

from milnor_monodromy import build_graph, gen_braid, gen_named, rank2_flats
from milnor_monodromy.graph import to_dot

for n in range(2, 7):
    arr = gen_braid(n)
    flats = rank2_flats(arr)
    g = build_graph(arr, flats)
    mult = Counter(f.multiplicity for f in flats)
    print(f"braid({n}): d={arr.d:2d}  multiplicities={dict(sorted(mult.items()))}"
          f"  components={len(g.components)}")

ceva = gen_named("ceva")
g = build_graph(ceva)
print("ceva: edges", len(g.edges), "components", len(g.components))

# a graphic arrangement whose graph splits in two, written out for graphviz
arr = gen_named("remark311")
print(to_dot(build_graph(arr), arr.labels))
