"""Hill climbing on the total coverage ``sum_i d(V_i)``.

A partition returned by :func:`improve_to_local_optimum` admits no single
vertex move that strictly raises the total.  That is exactly the hypothesis
the averaging bound in :func:`check_lemma_aaa` needs, and it holds with every
class in the role of the receiving class at once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .hypergraph import MultiHypergraph, Partition, class_coverage

__all__ = [
    "CoverageProfile",
    "Partition",
    "check_lemma_aaa",
    "coverage_profile",
    "improve_to_local_optimum",
    "is_local_optimum",
    "move_gain",
]


@dataclass(frozen=True)
class CoverageProfile:
    coverage: tuple[int, ...]
    total: int
    # class indices sorted by descending coverage, ties by ascending index
    order: tuple[int, ...]


def coverage_profile(H: MultiHypergraph, P: Partition) -> CoverageProfile:
    cov = class_coverage(H, P)
    order = sorted(range(P.r), key=lambda c: (-cov[c], c))
    return CoverageProfile(tuple(cov), sum(cov), tuple(order))


def _edge_class_counts(H, assignment, r):
    counts = [[0] * r for _ in range(H.m)]
    for idx, edge in enumerate(H.edges):
        row = counts[idx]
        for v in edge:
            row[assignment[v]] += 1
    return counts


def _gain(H, counts, v, source, target):
    gain = 0
    for idx in H.incident(v):
        row = counts[idx]
        if row[target] == 0:
            gain += 1
        if row[source] == 1:
            gain -= 1
    return gain


def move_gain(H: MultiHypergraph, P: Partition, v: int, target: int) -> int:
    """Change in ``sum_i d(V_i)`` if ``v`` were moved into class ``target``.

    Equals the number of edges through ``v`` missing ``target`` minus the
    number of edges meeting the current class of ``v`` only at ``v``.
    """
    if P.n != H.n:
        raise InputError(f"partition covers {P.n} vertices, hypergraph has {H.n}")
    if not 0 <= v < H.n:
        raise InputError(f"vertex {v} outside [0, {H.n})")
    if not 0 <= target < P.r:
        raise InputError(f"class {target} outside [0, {P.r})")
    source = P.assignment[v]
    if source == target:
        raise InputError(f"vertex {v} already lies in class {target}")
    a = P.assignment
    gain = 0
    for idx in H.incident(v):
        edge = H.edges[idx]
        if all(a[u] != target for u in edge):
            gain += 1
        if all(a[u] != source for u in edge if u != v):
            gain -= 1
    return gain


def improve_to_local_optimum(H: MultiHypergraph, P: Partition) -> Partition:
    """Accept strictly improving single-vertex moves until none is left.

    Sweeps vertices by ascending id and, for each, tries targets by ascending
    class index, taking the first move with positive gain.  Each accepted
    move raises an integer bounded by ``r*m``, so the loop terminates.
    """
    if P.n != H.n:
        raise InputError(f"partition covers {P.n} vertices, hypergraph has {H.n}")
    r = P.r
    a = list(P.assignment)
    counts = _edge_class_counts(H, a, r)
    improved = True
    while improved:
        improved = False
        for v in range(H.n):
            if not H.incident(v):
                continue
            source = a[v]
            for target in range(r):
                if target == source:
                    continue
                if _gain(H, counts, v, source, target) > 0:
                    for idx in H.incident(v):
                        counts[idx][source] -= 1
                        counts[idx][target] += 1
                    a[v] = target
                    improved = True
                    break
    return Partition(r, tuple(a))


def is_local_optimum(H: MultiHypergraph, P: Partition) -> bool:
    counts = _edge_class_counts(H, P.assignment, P.r)
    for v in range(H.n):
        source = P.assignment[v]
        for target in range(P.r):
            if target != source and _gain(H, counts, v, source, target) > 0:
                return False
    return True


def check_lemma_aaa(H: MultiHypergraph, P: Partition, last: int | None = None) -> bool:
    """Test ``sum_i d(V_i) >= (r+1)m - r*d(V_last)``.

    ``last`` defaults to the class of minimum coverage.  The bound is
    guaranteed whenever no single vertex move into ``last`` raises the sum,
    and it relies on every edge having exactly ``r`` vertices.
    """
    r = P.r
    if H.m and not H.is_uniform(r):
        raise InputError(f"the averaging bound needs a {r}-uniform hypergraph")
    cov = class_coverage(H, P)
    d_last = min(cov) if last is None else cov[last]
    return sum(cov) >= (r + 1) * H.m - r * d_last
