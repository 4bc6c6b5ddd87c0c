"""Hill climbing on total class coverage.

Moving one vertex changes the summed coverage by a gain computed from the
edges through that vertex.  The climb stops when no single move helps, and
such a partition always obeys an averaging bound for its weakest class.

Run: python3 demos/local_search.py
"""

from judicious import (
    GenSpec,
    Partition,
    check_lemma_aaa,
    class_coverage,
    coverage_profile,
    generate,
    improve_to_local_optimum,
    move_gain,
)

H = generate(GenSpec(r=4, n=12, m=40, seed=3))
P0 = Partition.round_robin(H.n, 4)
print("round robin coverage:", class_coverage(H, P0), "sum", sum(class_coverage(H, P0)))
print("gain of moving vertex 0 to class 1:", move_gain(H, P0, 0, 1))

P = improve_to_local_optimum(H, P0)
profile = coverage_profile(H, P)
print("local optimum coverage:", list(profile.coverage), "sum", profile.total)
print("classes from strongest to weakest:", profile.order)

# At a local optimum, sum of coverages >= (r+1)m - r*d(V) for every class V.
for c in range(4):
    bound = 5 * H.m - 4 * profile.coverage[c]
    print(f"class {c} as the weak one: {profile.total} >= {bound}", check_lemma_aaa(H, P, c))
