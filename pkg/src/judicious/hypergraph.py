"""Multi-hypergraphs, vertex partitions and the degree calculus.

Every count here is taken with multiplicity: an edge listed twice is met
twice.  Vertex sets are plain Python sets (or any iterable of ids); the
hypergraph keeps per-vertex incidence lists so that ``d(S)`` costs
``O(sum of degrees in S)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError


class MultiHypergraph:
    """Vertices ``0..n-1`` plus an ordered multiset of edges.

    Each edge is stored as a sorted tuple of distinct vertex ids.  Instances
    are immutable; operations that change the edge list return a new one.

    ``uniformity`` is the edge size shared by every edge, or ``None`` when
    the hypergraph is non-uniform, edgeless, or was built with
    ``infer_uniformity=False`` (trimmed hypergraphs drop the marker).
    """

    __slots__ = ("n", "edges", "uniformity", "_incidence")

    def __init__(self, n: int, edges: Iterable[Iterable[int]], infer_uniformity: bool = True):
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        stored = []
        for idx, edge in enumerate(edges):
            verts = tuple(sorted(edge))
            if not verts:
                raise InputError(f"edge {idx} is empty")
            if len(set(verts)) != len(verts):
                raise InputError(f"edge {idx} repeats a vertex: {verts}")
            if verts[0] < 0 or verts[-1] >= n:
                raise InputError(f"edge {idx} has a vertex outside [0, {n}): {verts}")
            stored.append(verts)
        self.n = n
        self.edges = tuple(stored)
        sizes = {len(e) for e in self.edges}
        self.uniformity = sizes.pop() if infer_uniformity and len(sizes) == 1 else None
        incidence = [[] for _ in range(n)]
        for idx, edge in enumerate(self.edges):
            for v in edge:
                incidence[v].append(idx)
        self._incidence = tuple(tuple(lst) for lst in incidence)

    @property
    def m(self) -> int:
        return len(self.edges)

    def incident(self, v: int) -> tuple[int, ...]:
        """Indices of the edges containing ``v`` (one entry per copy)."""
        return self._incidence[v]

    def degree(self, v: int) -> int:
        return len(self._incidence[v])

    def is_uniform(self, r: int) -> bool:
        return all(len(e) == r for e in self.edges)

    def check_vertices(self, S: Iterable[int]) -> frozenset[int]:
        S = frozenset(S)
        for v in S:
            if not 0 <= v < self.n:
                raise InputError(f"vertex {v} outside [0, {self.n})")
        return S

    def __eq__(self, other):
        if not isinstance(other, MultiHypergraph):
            return NotImplemented
        return (self.n, self.edges, self.uniformity) == (other.n, other.edges, other.uniformity)

    def __hash__(self):
        return hash((self.n, self.edges, self.uniformity))

    def __repr__(self):
        return f"MultiHypergraph(n={self.n}, m={self.m}, uniformity={self.uniformity})"


@dataclass(frozen=True)
class Partition:
    """An assignment of every vertex to one of ``r`` classes (classes may be empty)."""

    r: int
    assignment: tuple[int, ...]

    def __post_init__(self):
        if self.r < 1:
            raise InputError(f"class count must be positive, got {self.r}")
        for v, c in enumerate(self.assignment):
            if not 0 <= c < self.r:
                raise InputError(f"vertex {v} assigned to class {c}, outside [0, {self.r})")

    @classmethod
    def from_classes(cls, n: int, classes: Sequence[Iterable[int]]) -> "Partition":
        assignment = [-1] * n
        for c, members in enumerate(classes):
            for v in members:
                if not 0 <= v < n:
                    raise InputError(f"vertex {v} outside [0, {n})")
                if assignment[v] != -1:
                    raise InputError(f"vertex {v} appears in classes {assignment[v]} and {c}")
                assignment[v] = c
        missing = [v for v, c in enumerate(assignment) if c == -1]
        if missing:
            raise InputError(f"vertices not assigned to any class: {missing}")
        return cls(len(classes), tuple(assignment))

    @classmethod
    def round_robin(cls, n: int, r: int) -> "Partition":
        return cls(r, tuple(v % r for v in range(n)))

    @property
    def n(self) -> int:
        return len(self.assignment)

    def classes(self) -> list[list[int]]:
        out = [[] for _ in range(self.r)]
        for v, c in enumerate(self.assignment):
            out[c].append(v)
        return out


def degree_meeting(H: MultiHypergraph, S: Iterable[int]) -> int:
    """Number of edges with at least one vertex in ``S``."""
    S = H.check_vertices(S)
    met = set()
    for v in S:
        met.update(H.incident(v))
    return len(met)


def degree_joint(H: MultiHypergraph, S: Iterable[int], T: Iterable[int]) -> int:
    """Number of edges meeting both of the disjoint sets ``S`` and ``T``."""
    S = H.check_vertices(S)
    T = H.check_vertices(T)
    if S & T:
        raise InputError(f"sets are not disjoint: {sorted(S & T)}")
    met_s = set()
    for v in S:
        met_s.update(H.incident(v))
    met_t = set()
    for v in T:
        met_t.update(H.incident(v))
    return len(met_s & met_t)


def degree_multi(H: MultiHypergraph, S: Iterable[int]) -> int:
    """Number of edges with at least two vertices in ``S``."""
    S = H.check_vertices(S)
    hits = {}
    for v in S:
        for idx in H.incident(v):
            hits[idx] = hits.get(idx, 0) + 1
    return sum(1 for k in hits.values() if k >= 2)


def parts_met(H: MultiHypergraph, edge_index: int, P: Partition) -> int:
    """Number of distinct classes of ``P`` that edge ``edge_index`` intersects."""
    if not 0 <= edge_index < H.m:
        raise InputError(f"edge index {edge_index} outside [0, {H.m})")
    if P.n != H.n:
        raise InputError(f"partition covers {P.n} vertices, hypergraph has {H.n}")
    return len({P.assignment[v] for v in H.edges[edge_index]})


def max_degree(H: MultiHypergraph) -> int:
    return max((H.degree(v) for v in range(H.n)), default=0)


def class_coverage(H: MultiHypergraph, P: Partition) -> list[int]:
    """``d(V_i)`` for every class, in one pass over the edges."""
    if P.n != H.n:
        raise InputError(f"partition covers {P.n} vertices, hypergraph has {H.n}")
    cov = [0] * P.r
    a = P.assignment
    for edge in H.edges:
        for c in {a[v] for v in edge}:
            cov[c] += 1
    return cov


def trim_to_set(H: MultiHypergraph, S: Iterable[int]) -> MultiHypergraph:
    """Replace each edge by a subedge meeting ``S`` in at most one vertex.

    The kept representative of ``e & S`` is its smallest id.  Coverage of any
    set in the result is at most its coverage in ``H``; ``d(S)`` is unchanged.
    """
    S = H.check_vertices(S)
    edges = []
    for edge in H.edges:
        inside = [v for v in edge if v in S]
        if len(inside) > 1:
            drop = set(inside[1:])
            edge = tuple(v for v in edge if v not in drop)
        edges.append(edge)
    return MultiHypergraph(H.n, edges, infer_uniformity=False)


def shrink_uniformity(H: MultiHypergraph, v: int) -> MultiHypergraph:
    """Turn an r-uniform hypergraph into an (r-1)-uniform one avoiding ``v``.

    Edges through ``v`` lose ``v``; every other edge loses its largest id.
    The vertex range is kept, so ``v`` simply becomes isolated.
    """
    r = H.uniformity
    if r is None or not H.is_uniform(r):
        if H.m == 0:
            raise InputError("cannot infer uniformity of an edgeless hypergraph")
        raise InputError("shrink_uniformity needs a uniform hypergraph")
    if r < 3:
        raise InputError(f"cannot shrink a {r}-uniform hypergraph (needs r >= 3)")
    if not 0 <= v < H.n:
        raise InputError(f"vertex {v} outside [0, {H.n})")
    edges = []
    for edge in H.edges:
        if v in edge:
            edges.append(tuple(u for u in edge if u != v))
        else:
            edges.append(edge[:-1])
    return MultiHypergraph(H.n, edges)
