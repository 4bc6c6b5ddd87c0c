"""Coverage thresholds and partition certificates."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError
from .hypergraph import MultiHypergraph, Partition, class_coverage


def coverage_constant(r: int) -> Fraction:
    """Fraction of edges every class is guaranteed to meet: 2/3, 5/9, r/(3r-4)."""
    if r < 2:
        raise InputError(f"need r >= 2, got {r}")
    if r == 2:
        return Fraction(2, 3)
    if r == 3:
        return Fraction(5, 9)
    return Fraction(r, 3 * r - 4)


def threshold(r: int, m: int) -> Fraction:
    """The exact bound ``c_r * m`` that each of the ``r`` classes must meet."""
    if m < 0:
        raise InputError(f"edge count must be non-negative, got {m}")
    return coverage_constant(r) * m


@dataclass(frozen=True)
class Certificate:
    partition: Partition
    coverage: tuple[int, ...]
    bound: Fraction
    r: int
    m: int
    # solver events as (level r, label); not part of the serialized form
    trace: tuple[tuple[int, str], ...] = field(default=(), compare=False)

    @property
    def min_coverage(self) -> int:
        return min(self.coverage)

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "m": self.m,
            "threshold": {"num": self.bound.numerator, "den": self.bound.denominator},
            "classes": self.partition.classes(),
            "coverage": list(self.coverage),
            "min_coverage": self.min_coverage,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict, n: int | None = None) -> "Certificate":
        try:
            classes = data["classes"]
            if n is None:
                n = 1 + max((v for c in classes for v in c), default=-1)
            bound = Fraction(data["threshold"]["num"], data["threshold"]["den"])
            return cls(
                Partition.from_classes(n, classes),
                tuple(data["coverage"]),
                bound,
                data["r"],
                data["m"],
            )
        except (KeyError, TypeError, ZeroDivisionError) as exc:
            raise InputError(f"malformed certificate: {exc!r}") from exc


@dataclass(frozen=True)
class Verification:
    ok: bool
    reason: str | None = None

    def __bool__(self):
        return self.ok


def verify_certificate(H: MultiHypergraph, cert: Certificate) -> Verification:
    """Recompute everything a certificate claims; never raises."""
    P = cert.partition
    if cert.m != H.m:
        return Verification(False, f"certificate m={cert.m}, instance has {H.m} edges")
    if cert.r < 2:
        return Verification(False, f"class count {cert.r} is below 2")
    if P.r != cert.r:
        return Verification(False, f"partition has {P.r} classes, certificate says {cert.r}")
    if P.n != H.n:
        return Verification(False, f"partition covers {P.n} vertices, instance has {H.n}")
    expected = threshold(cert.r, H.m)
    if cert.bound != expected:
        return Verification(False, f"bound {cert.bound} differs from c_r*m = {expected}")
    actual = class_coverage(H, P)
    if tuple(actual) != tuple(cert.coverage):
        return Verification(False, f"claimed coverage {list(cert.coverage)}, recomputed {actual}")
    num, den = expected.numerator, expected.denominator
    for c, d in enumerate(actual):
        if d * den < num:
            return Verification(False, f"class {c} meets {d} edges, below {expected}")
    return Verification(True)
