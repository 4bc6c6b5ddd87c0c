"""Solving, certifying, and checking a certificate by hand.

Run: python3 demos/solver_and_certificates.py
"""

from judicious import (
    Certificate,
    MultiHypergraph,
    GenSpec,
    Partition,
    class_coverage,
    generate,
    partition_judicious,
    verify_certificate,
)

for r, mode in ((2, "uniform-random"), (3, "multi-heavy"), (5, "uniform-random")):
    H = generate(GenSpec(r=r, n=12, m=30, seed=11, mode=mode))
    cert = partition_judicious(H)
    steps = " -> ".join(f"{label}@r={level}" for level, label in cert.trace)
    print(f"r={r} {mode:15} coverage {list(cert.coverage)} bound {cert.bound}  [{steps}]")

# The certificate is plain JSON and is checked by recounting from scratch.
H = MultiHypergraph(5, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])
cert = partition_judicious(H)
print(cert.to_json())
print("verified:", bool(verify_certificate(H, cert)))

# A tampered certificate is rejected with a reason.
bad = Certificate(Partition(3, (0, 0, 0, 0, 1)), (4, 1, 0), cert.bound, 3, 4)
print("tampered:", verify_certificate(H, bad).reason)

# A local optimum where one class falls short: the solver shrinks the other
# classes to minimal good sets and hands the leftovers to the weak class.
s = 3
templates = {(1, 1, 1): 2, (1, 2, 0): 1, (2, 1, 0): 1}
edges = []
for counts, mult in templates.items():
    for _ in range(mult):
        for k in range(s):
            edges.append([c * s + (k + j) % s for c, cnt in enumerate(counts) for j in range(cnt)])
H = MultiHypergraph(3 * s, edges)
start = Partition(3, tuple(v // s for v in range(3 * s)))
cert = partition_judicious(H, start=start)
print("planted start", class_coverage(H, start), "-> solved", list(cert.coverage), cert.trace)
