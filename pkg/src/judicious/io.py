"""Instance text format, partition files and seeded instance generation.

Instance format: one edge per line as whitespace-separated non-negative
vertex ids.  Blank lines and lines starting with ``#`` are ignored, except
that a comment of the exact form ``# vertices N`` fixes the vertex count
(otherwise it is one more than the largest id).  Repeated lines are repeated
edges.

Partition format: one line holding the 0-based class index of every vertex.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass

from .errors import InputError, ParseError
from .hypergraph import MultiHypergraph, Partition

_VERTICES_RE = re.compile(r"#\s*vertices\s+(\d+)\s*$")

MODES = ("uniform-random", "multi-heavy", "complete")


def parse_instance(text: str) -> MultiHypergraph:
    edges = []
    declared = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            match = _VERTICES_RE.match(line)
            if match:
                declared = int(match.group(1))
            continue
        edge = []
        for token in line.split():
            if not token.isdigit():
                raise ParseError(f"malformed vertex id {token!r}", lineno)
            edge.append(int(token))
        if len(set(edge)) != len(edge):
            raise ParseError(f"repeated vertex in edge {line!r}", lineno)
        edges.append(edge)
    n = 1 + max((max(e) for e in edges), default=-1)
    if declared is not None:
        if declared < n:
            raise ParseError(f"declared {declared} vertices but ids reach {n - 1}")
        n = declared
    return MultiHypergraph(n, edges)


def serialize_instance(H: MultiHypergraph) -> str:
    lines = [f"# vertices {H.n}"]
    lines.extend(" ".join(map(str, e)) for e in H.edges)
    return "\n".join(lines) + "\n"


def read_instance(path) -> MultiHypergraph:
    with open(path) as f:
        return parse_instance(f.read())


def parse_assignment(text: str) -> list[int]:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) != 1:
        raise ParseError(f"expected one line of class indices, found {len(lines)}")
    out = []
    for token in lines[0].split():
        if not token.isdigit():
            raise ParseError(f"malformed class index {token!r}", 1)
        out.append(int(token))
    return out


def format_assignment(P: Partition) -> str:
    return " ".join(map(str, P.assignment)) + "\n"


def diagnostic_dump(H: MultiHypergraph, P: Partition | None = None) -> str:
    """Instance text plus the partition as a comment, so the dump re-parses."""
    text = serialize_instance(H)
    if P is not None:
        text += "# partition " + " ".join(map(str, P.assignment)) + "\n"
    return text


class SplitMix64:
    """The SplitMix64 generator (Steele, Lea, Flood 2014).

    Pinned here rather than using :mod:`random` so generated instances are
    identical on every platform and Python version.
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def randbelow(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection sampling."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def subset(self, n: int, r: int) -> tuple[int, ...]:
        pool = list(range(n))
        for i in range(r):
            j = i + self.randbelow(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return tuple(sorted(pool[:r]))


@dataclass(frozen=True)
class GenSpec:
    r: int
    n: int
    m: int | None = None
    seed: int = 0
    mode: str = "uniform-random"

    def __post_init__(self):
        if self.mode not in MODES:
            raise InputError(f"unknown mode {self.mode!r}, expected one of {MODES}")
        if self.r < 1 or self.n < self.r:
            raise InputError(f"need n >= r >= 1, got r={self.r}, n={self.n}")
        if self.m is None:
            if self.mode != "complete":
                raise InputError(f"mode {self.mode} needs an edge count m")
        elif self.m < 0:
            raise InputError(f"edge count must be non-negative, got {self.m}")
        elif self.mode == "complete" and self.m > math.comb(self.n, self.r):
            raise InputError(f"only {math.comb(self.n, self.r)} {self.r}-subsets of {self.n} vertices")


def generate(spec: GenSpec) -> MultiHypergraph:
    """Build an instance; the output depends only on ``spec``.

    ``uniform-random`` draws ``m`` independent uniform r-subsets;
    ``multi-heavy`` draws ``m`` times with replacement from a pool of
    ``ceil(m/4)`` distinct r-subsets; ``complete`` lists all r-subsets in
    lexicographic order (or the first ``m`` of them).
    """
    rng = SplitMix64(spec.seed)
    if spec.mode == "complete":
        combos = itertools.combinations(range(spec.n), spec.r)
        edges = list(combos if spec.m is None else itertools.islice(combos, spec.m))
    elif spec.mode == "uniform-random":
        edges = [rng.subset(spec.n, spec.r) for _ in range(spec.m)]
    else:
        size = min(-(-spec.m // 4), math.comb(spec.n, spec.r))
        pool = []
        seen = set()
        while len(pool) < size:
            e = rng.subset(spec.n, spec.r)
            if e not in seen:
                seen.add(e)
                pool.append(e)
        edges = [pool[rng.randbelow(size)] for _ in range(spec.m)]
    return MultiHypergraph(spec.n, edges)
