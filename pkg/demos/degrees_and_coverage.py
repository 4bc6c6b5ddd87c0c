"""Degrees in a small 3-uniform multi-hypergraph.

Run: python3 demos/degrees_and_coverage.py
"""

from judicious import (
    MultiHypergraph,
    Partition,
    class_coverage,
    degree_joint,
    degree_meeting,
    degree_multi,
    threshold,
)

# All four triples on {0,1,2,3}, plus a second copy of one of them.
H = MultiHypergraph(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3), (0, 1, 2)])
print("n =", H.n, " m =", H.m, " uniformity =", H.uniformity)
print("vertex degrees:", [H.degree(v) for v in range(H.n)])

# d(S) counts edges meeting S, and a repeated edge counts twice.
S, T = {0}, {3}
print("d({0}) =", degree_meeting(H, S))
print("d({0},{3}) =", degree_joint(H, S, T), "(edges meeting both)")
print("d2({0,1}) =", degree_multi(H, {0, 1}), "(edges holding both 0 and 1)")

# A 3-partition is judged by its weakest class.
P = Partition.from_classes(4, [[0], [1], [2, 3]])
cov = class_coverage(H, P)
tau = threshold(3, H.m)
print("class coverage:", cov, " threshold 5m/9 =", tau)
print("every class meets the threshold:", all(d >= tau for d in cov))
