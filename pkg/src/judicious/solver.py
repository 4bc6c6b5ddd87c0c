"""Partition an r-uniform multi-hypergraph into r classes that each meet at
least ``c_r * m`` edges.

Outline of :func:`partition_judicious` at a given ``r``:

* ``m == 0``: any partition works.
* ``r == 2``: a local optimum of the total coverage already meets
  ``2m/3`` in both classes.
* A vertex of degree at least ``tau`` becomes a class on its own; every
  other edge is cut down to ``r - 1`` vertices avoiding it and the rest of
  the vertices are solved at ``r - 1`` (where the constant is larger).
* Otherwise start from a local optimum.  If the two weakest classes are
  short, bad classes are repaired by merging them with classes meeting at
  least ``2*tau`` edges (:mod:`judicious.refinement`).  If only the weakest
  one is short, the others are shrunk to minimal good sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .certificate import Certificate, threshold, verify_certificate
from .errors import InputError, InternalLogicError, PreconditionError
from .hypergraph import MultiHypergraph, Partition, class_coverage, shrink_uniformity
from .io import diagnostic_dump
from .local_search import coverage_profile, improve_to_local_optimum
from .refinement import (
    ShrunkWitness,
    apply_lemma_aab,
    combine_big_small,
    combine_two_bigs,
)


@dataclass(frozen=True)
class CaseProfile:
    """How many classes fall in each coverage band relative to ``tau``."""

    j: int  # d >= 2*tau
    k: int  # tau/2 <= d < tau
    l: int  # d < tau/2
    mid: int  # tau <= d < 2*tau

    @property
    def bad(self) -> int:
        return self.k + self.l


def case_profile(coverage, tau: Fraction) -> CaseProfile:
    j = k = l = mid = 0
    for d in coverage:
        if d >= 2 * tau:
            j += 1
        elif d >= tau:
            mid += 1
        elif 2 * d >= tau:
            k += 1
        else:
            l += 1
    return CaseProfile(j, k, l, mid)


def partition_judicious(
    H: MultiHypergraph, r: int | None = None, start: Partition | None = None
) -> Certificate:
    """Return a verified certificate for an r-partition of ``H``.

    ``r`` defaults to the uniformity of ``H``.  ``start`` seeds the local
    search at the top level (round-robin by id otherwise); it is ignored when
    a high-degree vertex is split off first.  Raises :class:`InputError` for
    a non-uniform instance and :class:`InternalLogicError` (with a
    reproducible dump) if any internal guarantee fails.
    """
    if r is None:
        if H.uniformity is None:
            raise InputError("cannot infer r: hypergraph is not uniform (pass r explicitly)")
        r = H.uniformity
    if r < 2:
        raise InputError(f"need r >= 2, got {r}")
    if not H.is_uniform(r):
        raise InputError(f"hypergraph is not {r}-uniform")

    if start is not None and (start.r != r or start.n != H.n):
        raise InputError(f"start partition must have {r} classes over {H.n} vertices")
    trace = []
    P = _solve(H, r, trace, start)
    cert = Certificate(P, tuple(class_coverage(H, P)), threshold(r, H.m), r, H.m, tuple(trace))
    verdict = verify_certificate(H, cert)
    if not verdict:
        raise InternalLogicError(f"certificate rejected: {verdict.reason}", diagnostic_dump(H, P))
    return cert


def _require_good(H, P, tau, stage):
    cov = class_coverage(H, P)
    if min(cov) < tau:
        raise InternalLogicError(
            f"{stage}: class coverages {cov} do not all reach {tau}", diagnostic_dump(H, P)
        )
    return P


def _solve(H, r, trace, start=None):
    tau = threshold(r, H.m)
    if H.m == 0:
        trace.append((r, "empty"))
        return Partition.round_robin(H.n, r)

    if r == 2:
        trace.append((r, "base"))
        P = improve_to_local_optimum(H, start or Partition.round_robin(H.n, r))
        return _require_good(H, P, tau, "r=2 local optimum")

    degrees = [H.degree(v) for v in range(H.n)]
    delta = max(degrees)
    if delta >= tau:
        trace.append((r, "reduce"))
        v = degrees.index(delta)
        sub = _solve(shrink_uniformity(H, v), r - 1, trace)
        # v is isolated below, so pulling it out changes no coverage
        assignment = list(sub.assignment)
        assignment[v] = r - 1
        return _require_good(H, Partition(r, tuple(assignment)), tau, "degree reduction")

    P = improve_to_local_optimum(H, start or Partition.round_robin(H.n, r))
    profile = coverage_profile(H, P)
    cov, order = profile.coverage, profile.order
    weakest, runner_up = order[-1], order[-2]
    if cov[weakest] >= tau:
        trace.append((r, "local"))
        return P

    if cov[runner_up] >= tau:
        trace.append((r, "case1"))
        result = apply_lemma_aab(H, P, tau, last=weakest)
        if isinstance(result, ShrunkWitness):
            raise InternalLogicError(
                "shrunk witness returned although every degree is below tau",
                diagnostic_dump(H, result.partition),
            )
        return _require_good(H, result.partition, tau, "case 1")

    if r == 3:
        raise InternalLogicError(
            f"two classes below tau at r=3: coverages {list(cov)}", diagnostic_dump(H, P)
        )

    label = "case2" if 2 * cov[weakest] >= tau else "case3"
    trace.append((r, label))
    try:
        return _require_good(H, repair_bad_classes(H, P, tau), tau, label)
    except PreconditionError as exc:
        raise InternalLogicError(f"{label}: {exc}", diagnostic_dump(H, P)) from exc


def repair_bad_classes(H: MultiHypergraph, P: Partition, tau) -> Partition:
    """Lift every class below ``tau`` by merging it with classes meeting
    ``2*tau`` edges.

    A class meeting at least ``tau/2`` edges absorbs part of one big class
    (:func:`combine_big_small`); a class below ``tau/2`` consumes two big
    classes (:func:`combine_two_bigs`) and joins the merged part.  Bad
    classes are served in ascending order of coverage, big classes handed
    out in descending order.  Needs every degree below ``tau`` and a
    profile with ``j >= k + 2l``.
    """
    tau = Fraction(tau)
    profile = coverage_profile(H, P)
    cov, order = profile.coverage, profile.order
    counts = case_profile(cov, tau)
    if counts.j < counts.k + 2 * counts.l:
        raise PreconditionError(f"not enough big classes: need j >= k + 2l, have {counts}")

    bigs = iter([c for c in order if cov[c] >= 2 * tau])
    bads = [c for c in reversed(order) if cov[c] < tau]
    classes = [frozenset(c) for c in P.classes()]
    for bad in bads:
        if 2 * cov[bad] >= tau:
            big = next(bigs)
            joined, rest = combine_big_small(H, classes[big], classes[bad], tau)
            classes[bad], classes[big] = joined, rest
        else:
            first, second = next(bigs), next(bigs)
            merged, rest_a, rest_b = combine_two_bigs(H, classes[first], classes[second], tau)
            classes[bad] = merged | classes[bad]
            classes[first], classes[second] = rest_a, rest_b
    return Partition.from_classes(H.n, classes)
