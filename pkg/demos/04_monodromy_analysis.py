"""
Monodromy eigenspaces
=====================

For every k = 1..d-1 the analyzer tries to prove that the lambda^k part of
H^1 of the Milnor fiber vanishes.  Each proof comes with a certificate that
can be replayed; anything it cannot prove is reported as unknown together
with the reason.
"""

from milnor_monodromy import gen_braid, gen_named
from milnor_monodromy.analyzer import analyze

for name, arr in [("braid(4)", gen_braid(4)), ("braid(3)", gen_braid(3)),
                  ("ex37", gen_named("ex37")), ("ex38", gen_named("ex38"))]:
    report = analyze(arr)
    print(f"{name}: {report.verdict}, fixed part of dimension {report.h1_fixed_dim}")
    for e in report.eigen:
        if e.certificate is not None:
            cert = e.certificate
            extra = f"witness {arr.label(cert.witness)}" if cert.kind == "CDO" else f"p={cert.p}"
            print(f"  k={e.k:2d} order {e.order:2d}: {e.status} ({cert.kind}, {extra})")
        else:
            print(f"  k={e.k:2d} order {e.order:2d}: {e.status} {list(e.hints)}")

# the full report is plain JSON
doc = analyze(gen_named("ex37")).to_dict()
print(sorted(doc), doc["eigen"][2]["certificate"]["kind"])
