"""
Aomoto complex in degree one
============================

H^1 of (A, omega ^) is computed from the Brieskorn blocks of the
Orlik-Solomon algebra, and cross-checked by a second computation that only
looks at which triples of lines are dependent.
"""

from milnor_monodromy import (
    WeightVector,
    aomoto_h1,
    aomoto_h1_projective,
    gen_braid,
    gen_named,
    os_oracle_h1,
)

cases = {"braid(3)": gen_braid(3), "braid(4)": gen_braid(4), "ceva": gen_named("ceva"),
         "ex36": gen_named("ex36")}

print(f"{'':10s}" + "".join(f"{r:>5s}" for r in ("Q", "F2", "F3", "F5")))
for name, arr in cases.items():
    row = []
    for p in (None, 2, 3, 5):
        w = WeightVector.all_ones(arr.d, p)
        report = aomoto_h1(arr, w)
        assert report == os_oracle_h1(arr, w)
        row.append(report.h1_dim)
    print(f"{name:10s}" + "".join(f"{h:5d}" for h in row))

# over F_3 the all-ones weight sums to zero on the 9 Ceva lines, so the
# deconed complex can be used instead; it gives the same answer
ceva = cases["ceva"]
print("ceva projective F3:", aomoto_h1_projective(ceva, WeightVector.all_ones(9, 3)).h1_dim)

# arbitrary weights, here 1,2,1,2,... over F_3
w = WeightVector(tuple(1 + i % 2 for i in range(ceva.d)), 3)
print("ceva weights", w.describe(), "->", aomoto_h1(ceva, w).h1_dim)
