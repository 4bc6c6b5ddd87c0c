"""Rotation designs with a prescribed local optimum.

Class ``i`` gets ``s`` vertices labelled by ``Z_s``.  A template is a vector
of per-class vertex counts; it is placed at every offset ``k`` in ``Z_s``,
taking vertices ``k, k+1, ...`` (mod ``s``) from each class.  Every vertex
of a class then sees the same number of edges of every shape, so
single-vertex move gains are uniform within a class and local optimality of
the planted partition reduces to linear inequalities in the template
multiplicities.  The multiplicities below were found by a small integer
program and are checked here by brute recomputation, not trusted.
"""

from judicious import MultiHypergraph, Partition

# planted local optima where only the weakest class misses tau
CASE1_R3 = {(1, 1, 1): 2, (1, 2, 0): 1, (2, 1, 0): 1}
CASE1_R4 = {(1, 1, 1, 1): 2, (1, 1, 2, 0): 1, (1, 2, 1, 0): 1, (2, 1, 1, 0): 1}

# r=5 and r=6 designs whose planted partition is a local optimum in which
# the two weakest classes meet between tau/2 and tau edges
CASE2_R5 = {
    (1, 1, 1, 0, 2): 1,
    (1, 1, 1, 1, 1): 2,
    (1, 1, 1, 2, 0): 1,
    (1, 1, 3, 0, 0): 1,
    (1, 3, 1, 0, 0): 1,
    (3, 1, 1, 0, 0): 1,
}
CASE2_R6 = {
    (1, 1, 1, 1, 0, 2): 1,
    (1, 1, 1, 1, 1, 1): 2,
    (1, 1, 1, 1, 2, 0): 1,
    (1, 1, 1, 3, 0, 0): 1,
    (1, 1, 3, 1, 0, 0): 1,
    (1, 3, 1, 1, 0, 0): 1,
    (3, 1, 1, 1, 0, 0): 1,
}


def rotation_design(templates, s):
    r = len(next(iter(templates)))
    edges = []
    for counts, mult in sorted(templates.items()):
        assert max(counts) <= s
        for _ in range(mult):
            for k in range(s):
                edge = []
                for cls, cnt in enumerate(counts):
                    edge.extend(cls * s + (k + j) % s for j in range(cnt))
                edges.append(edge)
    H = MultiHypergraph(r * s, edges)
    P = Partition(r, tuple(v // s for v in range(r * s)))
    return H, P
