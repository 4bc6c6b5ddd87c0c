"""Rebalancing vertex classes without letting any class drop below tau.

When every vertex has degree below tau, a class meeting at least 2*tau
edges can be cut into pieces that each still meet tau edges.  The two
moves here use that to lift a weak class.

Run: python3 demos/refinement_moves.py
"""

from fractions import Fraction

from judicious import (
    MultiHypergraph,
    combine_big_small,
    combine_two_bigs,
    degree_meeting,
    max_degree,
    shrink_to_minimal_good,
)

# A 2-uniform example: two cycles A and B, plus a few chords to C.
A = set(range(0, 6))
B = set(range(6, 12))
edges = [(i, (i + 1) % 6) for i in range(6)]
edges += [(6 + i, 6 + (i + 1) % 6) for i in range(6)]
edges += [(0, 12), (3, 13), (7, 12), (10, 13)]
H = MultiHypergraph(14, edges)
tau = Fraction(7, 2)
print("max degree", max_degree(H), "< tau =", tau)
print("d(A) =", degree_meeting(H, A), " d(B) =", degree_meeting(H, B))

# Two big classes give up enough vertices to form a third good class.
merged, rest_a, rest_b = combine_two_bigs(H, A, B, tau)
for name, part in (("merged", merged), ("rest of A", rest_a), ("rest of B", rest_b)):
    print(f"{name:10} {sorted(part)} meets {degree_meeting(H, part)}")
print("merged part reaches 10*tau/9:", degree_meeting(H, merged) >= Fraction(10, 9) * tau)

# A weak class that already meets tau/2 needs only one big partner.
small = {12, 13}
joined, rest = combine_big_small(H, A, small, tau)
print("big+small:", sorted(joined), degree_meeting(H, joined), "|", sorted(rest), degree_meeting(H, rest))

# Dropping vertices while the set still meets tau leaves a minimal good set.
W = shrink_to_minimal_good(H, A, tau)
print("minimal good subset of A:", sorted(W), "meets", degree_meeting(H, W))
