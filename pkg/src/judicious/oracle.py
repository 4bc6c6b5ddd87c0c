"""Exhaustive ground truth for small instances.

:func:`brute_force_best` scores every assignment of vertices to classes.
Coverage of all ``2**n`` vertex subsets is tabulated once (a subset-sum
transform over edge masks), so scoring an assignment is ``r`` table
lookups.  Assignments are enumerated in lexicographic order as the product
of a prefix half and a suffix half of the vertices, which keeps the work
vectorized and makes "first maximum" the lexicographically smallest one.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .certificate import coverage_constant
from .errors import BudgetExceeded, InputError, PreconditionError
from .hypergraph import MultiHypergraph, Partition

DEFAULT_BUDGET = 10**7
_BLOCK = 1 << 20


def subset_coverage_table(H: MultiHypergraph) -> np.ndarray:
    """``table[S] = d(S)`` for every vertex subset ``S`` given as a bitmask."""
    n = H.n
    size = 1 << n
    contained = np.zeros(size, dtype=np.int64)
    for edge in H.edges:
        contained[sum(1 << v for v in edge)] += 1
    for i in range(n):
        view = contained.reshape(-1, 2, 1 << i)
        view[:, 1, :] += view[:, 0, :]
    # edges missing S are exactly the edges inside its complement
    return H.m - contained[::-1]


def _digit_masks(start, stop, width, r, offset):
    """Per-class vertex bitmasks for assignment indices ``start..stop-1`` of
    ``width`` vertices numbered from ``offset`` (first vertex most significant)."""
    idx = np.arange(start, stop, dtype=np.int64)
    masks = np.zeros((r, stop - start), dtype=np.int64)
    for p in range(width):
        digit = (idx // r ** (width - 1 - p)) % r
        bit = np.int64(1) << (offset + p)
        for c in range(r):
            masks[c] += np.where(digit == c, bit, 0)
    return masks


def _search_range(args):
    table, n, r, split, lo, hi = args
    right_width = n - split
    right = _digit_masks(0, r**right_width, right_width, r, split)
    block = max(1, _BLOCK // right.shape[1])
    best_value, best_index = -1, -1
    for start in range(lo, hi, block):
        stop = min(hi, start + block)
        left = _digit_masks(start, stop, split, r, 0)
        value = None
        for c in range(r):
            d = table[left[c][:, None] | right[c][None, :]]
            value = d if value is None else np.minimum(value, d)
        flat = int(np.argmax(value))
        v = int(value.flat[flat])
        if v > best_value:
            best_value = v
            best_index = (start + flat // value.shape[1]) * right.shape[1] + flat % value.shape[1]
    return best_value, best_index


def _decode(index, n, r):
    digits = []
    for _ in range(n):
        index, d = divmod(index, r)
        digits.append(d)
    return tuple(reversed(digits))


def brute_force_best(H: MultiHypergraph, r: int, budget: int = DEFAULT_BUDGET, jobs: int = 1):
    """Maximize the minimum class coverage over all ``r**n`` assignments.

    Returns ``(partition, optimum)``; among optimal assignments the
    lexicographically smallest vector wins.  Vertex 0 is pinned to class 0,
    which loses nothing since relabeling classes preserves the objective and
    the smallest optimal vector already starts with 0.  The result does not
    depend on ``jobs``.
    """
    if r < 1:
        raise InputError(f"need r >= 1, got {r}")
    n = H.n
    required = r**n
    if required > budget:
        raise BudgetExceeded(required, budget)
    if n == 0:
        return Partition(r, ()), 0

    table = subset_coverage_table(H)
    split = max(1, n // 2)
    # assignments with vertex 0 in class 0 are the first r**(split-1) prefixes
    prefixes = r ** (split - 1)
    jobs = max(1, min(jobs, prefixes))
    bounds = [prefixes * w // jobs for w in range(jobs + 1)]
    tasks = [(table, n, r, split, bounds[w], bounds[w + 1]) for w in range(jobs)]
    if jobs == 1:
        results = [_search_range(tasks[0])]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_search_range, tasks))
    best_value = max(v for v, _ in results)
    best_index = min(i for v, i in results if v == best_value)
    return Partition(r, _decode(best_index, n, r)), best_value


@dataclass(frozen=True)
class RulastInstance:
    values: tuple[Fraction, ...]
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(x) for x in self.values))
        object.__setattr__(self, "c", Fraction(self.c))

    @property
    def mean(self) -> Fraction:
        return sum(self.values, Fraction(0)) / len(self.values)

    def counts(self) -> tuple[int, int, int, int]:
        """``(j, k, l, rest)``: at least 2c, in [c/2, c), below c/2, in [c, 2c)."""
        c = self.c
        j = sum(1 for x in self.values if x >= 2 * c)
        k = sum(1 for x in self.values if c / 2 <= x < c)
        l = sum(1 for x in self.values if x < c / 2)
        return j, k, l, len(self.values) - j - k - l


def check_rulast(inst: RulastInstance) -> bool:
    """Whether ``j >= k + 2l`` for a list whose mean clears ``max(2c, 2/3 + c/6)``.

    That inequality always holds under the preconditions; a ``False`` return
    means the counting here is wrong.  Violated preconditions raise
    :class:`PreconditionError`.
    """
    c = inst.c
    if not inst.values:
        raise PreconditionError("value list must be non-empty")
    if not Fraction(1, 3) <= c <= Fraction(1, 2):
        raise PreconditionError(f"c must lie in [1/3, 1/2], got {c}")
    if any(not 0 <= x <= 1 for x in inst.values):
        raise PreconditionError("values must lie in [0, 1]")
    floor = max(2 * c, Fraction(2, 3) + c / 6)
    if inst.mean < floor:
        raise PreconditionError(f"mean {inst.mean} below max(2c, 2/3 + c/6) = {floor}")
    j, k, l, _ = inst.counts()
    return j >= k + 2 * l


@dataclass(frozen=True)
class GapReport:
    r: int
    m: int
    optimum: int
    partition: Partition
    guaranteed: Fraction
    conjectured: Fraction

    @property
    def ratio(self) -> Fraction | None:
        """Optimal minimum coverage as a fraction of ``m``; ``None`` when vacuous."""
        return Fraction(self.optimum, self.m) if self.m else None

    def to_dict(self) -> dict:
        ratio = self.ratio
        return {
            "r": self.r,
            "m": self.m,
            "optimum": self.optimum,
            "assignment": list(self.partition.assignment),
            "ratio": "vacuous" if ratio is None else str(ratio),
            "guaranteed_constant": str(self.guaranteed),
            "conjectured_constant": str(self.conjectured),
            "meets_guarantee": ratio is None or ratio >= self.guaranteed,
            "meets_conjecture": ratio is None or ratio >= self.conjectured,
        }


def conjecture_gap_report(
    H: MultiHypergraph, r: int, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> GapReport:
    """Compare the exact optimum with ``c_r`` and with ``r/(2r-1)``; observational only."""
    P, optimum = brute_force_best(H, r, budget, jobs)
    return GapReport(r, H.m, optimum, P, coverage_constant(r), Fraction(r, 2 * r - 1))
