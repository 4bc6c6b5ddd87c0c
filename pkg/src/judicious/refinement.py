"""Local repartitioning of one or two classes into more classes that each meet
at least ``tau`` edges.

All constructions take the threshold ``tau`` as an exact :class:`Fraction`
and assume the maximum vertex degree is below it.  Internally edges are
trimmed so that they meet each input set in at most one vertex; since a
trimmed edge is a subedge of the original, coverage counted in the trimmed
hypergraph never exceeds the real coverage, so every bound established
there carries over to ``H``.

The split of :func:`combine_two_bigs` cannot in general be sharpened to two
parts meeting more than ``tau + 1`` edges: take ``A`` and ``B`` with three
vertices each, two of degree ``tau - 1`` and one of degree 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import InputError, InternalLogicError, PreconditionError
from .hypergraph import (
    MultiHypergraph,
    Partition,
    class_coverage,
    degree_meeting,
    max_degree,
    trim_to_set,
)
from .io import diagnostic_dump
from .local_search import coverage_profile


@dataclass(frozen=True)
class TripleSplit:
    """Three non-empty disjoint parts, any two of which meet ``tau`` edges."""

    first: frozenset[int]
    second: frozenset[int]
    third: frozenset[int]

    @property
    def parts(self) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
        return (self.first, self.second, self.third)


@dataclass(frozen=True)
class GoodPartition:
    partition: Partition


@dataclass(frozen=True)
class ShrunkWitness:
    """Minimal good sets ``W_i`` whose total coverage certifies the alternative."""

    partition: Partition
    last: int
    witness_sum: int


def _as_threshold(tau) -> Fraction:
    tau = Fraction(tau)
    if tau < 0:
        raise InputError(f"threshold must be non-negative, got {tau}")
    return tau


def _require_low_degree(H, tau):
    delta = max_degree(H)
    if not delta < tau:
        raise PreconditionError(f"max_degree(H) < tau fails: {delta} >= {tau}")


def _require_disjoint(A, B):
    if A & B:
        raise PreconditionError(f"A and B must be disjoint, share {sorted(A & B)}")


def split_into_three_overlapping(H: MultiHypergraph, A: Iterable[int], tau) -> TripleSplit:
    """Split ``A`` into three parts whose pairwise unions each meet ``tau`` edges.

    ``H`` must already be trimmed so that no edge meets ``A`` twice.  The
    first part is grown greedily by ascending id while it stays below
    ``tau``, which makes it maximal; the smallest remaining vertex forms the
    second part and everything else the third.
    """
    tau = _as_threshold(tau)
    A = H.check_vertices(A)
    _require_low_degree(H, tau)
    for idx, edge in enumerate(H.edges):
        if sum(1 for v in edge if v in A) > 1:
            raise PreconditionError(f"edge {idx} meets A in more than one vertex; trim first")
    d_A = degree_meeting(H, A)
    if not d_A >= 2 * tau:
        raise PreconditionError(f"d(A) >= 2*tau fails: {d_A} < {2 * tau}")

    # each edge meets A at most once, so d is additive over vertices of A
    first = []
    covered = 0
    for v in sorted(A):
        if covered + H.degree(v) < tau:
            first.append(v)
            covered += H.degree(v)
    rest = sorted(A.difference(first))
    if not first or len(rest) < 2:
        raise InternalLogicError(f"degenerate split of {sorted(A)} at tau={tau}")
    return TripleSplit(frozenset(first), frozenset(rest[:1]), frozenset(rest[1:]))


def combine_two_bigs(H: MultiHypergraph, A: Iterable[int], B: Iterable[int], tau):
    """Repartition ``A | B`` into three sets that each meet ``tau`` edges.

    Needs ``d(A) >= 2*tau``, ``d(B) >= 2*tau`` and every degree below
    ``tau``.  Returns ``(A_i | B_j, A - A_i, B - B_j)`` where ``(i, j)``
    maximizes the merged coverage over the nine candidates; the merged set
    meets at least ``10*tau/9`` edges.
    """
    tau = _as_threshold(tau)
    A = H.check_vertices(A)
    B = H.check_vertices(B)
    _require_disjoint(A, B)
    _require_low_degree(H, tau)
    for name, S in (("A", A), ("B", B)):
        d = degree_meeting(H, S)
        if not d >= 2 * tau:
            raise PreconditionError(f"d({name}) >= 2*tau fails: {d} < {2 * tau}")

    trimmed = trim_to_set(trim_to_set(H, A), B)
    split_a = split_into_three_overlapping(trimmed, A, tau).parts
    split_b = split_into_three_overlapping(trimmed, B, tau).parts
    best = None
    for i, a_part in enumerate(split_a):
        for j, b_part in enumerate(split_b):
            d = degree_meeting(trimmed, a_part | b_part)
            if best is None or d > best[0]:
                best = (d, i, j)
    _, i, j = best
    return (split_a[i] | split_b[j], A - split_a[i], B - split_b[j])


def combine_big_small(H: MultiHypergraph, A: Iterable[int], B: Iterable[int], tau):
    """Repartition ``A | B`` into two sets that each meet ``tau`` edges.

    Needs ``d(A) >= 2*tau``, ``d(A) + 2*d(B) >= 3*tau`` and every degree
    below ``tau``; in particular ``d(B) >= tau/2`` suffices.  Returns
    ``(A_i | B, A - A_i)`` for the part ``A_i`` maximizing the first
    set's coverage.
    """
    tau = _as_threshold(tau)
    A = H.check_vertices(A)
    B = H.check_vertices(B)
    _require_disjoint(A, B)
    _require_low_degree(H, tau)
    d_A = degree_meeting(H, A)
    d_B = degree_meeting(H, B)
    if not d_A >= 2 * tau:
        raise PreconditionError(f"d(A) >= 2*tau fails: {d_A} < {2 * tau}")
    if not d_A + 2 * d_B >= 3 * tau:
        raise PreconditionError(f"d(A) + 2*d(B) >= 3*tau fails: {d_A + 2 * d_B} < {3 * tau}")

    trimmed = trim_to_set(trim_to_set(H, A), B)
    split_a = split_into_three_overlapping(trimmed, A, tau).parts
    scores = [degree_meeting(trimmed, part | B) for part in split_a]
    i = scores.index(max(scores))
    return (split_a[i] | B, A - split_a[i])


def shrink_to_minimal_good(H: MultiHypergraph, S: Iterable[int], tau) -> frozenset[int]:
    """A subset of ``S`` meeting ``tau`` edges that loses that property on
    deletion of any single vertex.

    One pass in descending id order suffices because coverage only drops as
    the set shrinks: a vertex that cannot be removed now never can be later.
    """
    tau = _as_threshold(tau)
    S = H.check_vertices(S)
    d_S = degree_meeting(H, S)
    if not d_S >= tau:
        raise PreconditionError(f"d(S) >= tau fails: {d_S} < {tau}")
    current = set(S)
    for v in sorted(S, reverse=True):
        current.discard(v)
        if degree_meeting(H, current) < tau:
            current.add(v)
    return frozenset(current)


def apply_lemma_aab(
    H: MultiHypergraph, P: Partition, tau, last: int | None = None
) -> Union[GoodPartition, ShrunkWitness]:
    """Shrink every class but ``last`` to a minimal good set and hand the
    freed vertices to ``last``.

    ``last`` defaults to the class of least coverage (latest index on ties).
    Every other class must meet ``tau`` edges, and ``P`` must admit no
    improving single-vertex move into ``last`` (a local optimum does).  If
    the enlarged ``last`` class then meets ``tau`` edges a
    :class:`GoodPartition` is returned; otherwise the shrunk classes satisfy
    ``sum d(W_i) > (r+1)(m - tau)``, which is asserted, and a
    :class:`ShrunkWitness` is returned.
    """
    tau = _as_threshold(tau)
    r = P.r
    if last is None:
        last = coverage_profile(H, P).order[-1]
    cov = class_coverage(H, P)
    for c in range(r):
        if c != last and not cov[c] >= tau:
            raise PreconditionError(f"class {c} must meet tau edges: {cov[c]} < {tau}")

    classes = P.classes()
    shrunk = [None] * r
    for c in range(r):
        if c != last:
            shrunk[c] = shrink_to_minimal_good(H, classes[c], tau)
    kept = set().union(*(W for W in shrunk if W is not None))
    shrunk[last] = frozenset(v for v in range(H.n) if v not in kept)
    W = Partition.from_classes(H.n, shrunk)
    w_cov = class_coverage(H, W)
    if w_cov[last] >= tau:
        return GoodPartition(W)

    witness_sum = sum(w_cov) - w_cov[last]
    if not witness_sum > (r + 1) * (H.m - tau):
        raise InternalLogicError(
            f"shrunk classes meet {witness_sum} edges, need more than {(r + 1) * (H.m - tau)}",
            diagnostic_dump(H, W),
        )
    return ShrunkWitness(W, last, witness_sum)
