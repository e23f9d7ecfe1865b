"""Marked Riemann spheres ``(P^1, sum d_i p_i)``.

Point positions are opaque labels. Every invariant computed here depends only
on the multiset of weights.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from logpair.errors import SchemaError
from logpair.rational import as_rat


class Positivity(str, enum.Enum):
    LOG_FANO = "LogFano"
    LOG_CY = "LogCY"
    GENERAL_TYPE = "GeneralType"


class Singularity(str, enum.Enum):
    KLT = "Klt"
    LC_NOT_KLT = "LcNotKlt"


@dataclass(frozen=True)
class PairClass:
    positivity: Positivity
    singularity: Singularity


@dataclass(frozen=True)
class MarkedSphere:
    """Weighted points on the projective line, each weight in ``(0, 1]``."""

    points: tuple[tuple[str, Fraction], ...] = ()

    def __post_init__(self) -> None:
        pts = tuple((str(label), as_rat(delta)) for label, delta in self.points)
        labels = [label for label, _ in pts]
        if len(set(labels)) != len(labels):
            raise SchemaError(f"duplicate point labels: {labels}")
        for label, delta in pts:
            if not 0 < delta <= 1:
                raise SchemaError(f"weight of {label!r} must lie in (0, 1], got {delta}")
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_weights(cls, weights: Iterable[object], prefix: str = "p") -> "MarkedSphere":
        return cls(tuple((f"{prefix}{i + 1}", w) for i, w in enumerate(weights)))

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return tuple(delta for _, delta in self.points)

    @property
    def total_weight(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    @property
    def max_weight(self) -> Fraction:
        return max(self.weights, default=Fraction(0))


def log_canonical_degree(sphere: MarkedSphere) -> Fraction:
    """Degree of ``K + Delta``; ``deg K = -2`` on the projective line."""
    return sphere.total_weight - 2


def classify(sphere: MarkedSphere) -> PairClass:
    deg = log_canonical_degree(sphere)
    if deg < 0:
        positivity = Positivity.LOG_FANO
    elif deg == 0:
        positivity = Positivity.LOG_CY
    else:
        positivity = Positivity.GENERAL_TYPE
    klt = all(delta < 1 for delta in sphere.weights)
    return PairClass(positivity, Singularity.KLT if klt else Singularity.LC_NOT_KLT)


def is_k_semistable(sphere: MarkedSphere) -> bool:
    """Closed Troyanov condition: each weight is at most the sum of the others."""
    total = sphere.total_weight
    return all(total - delta >= delta for delta in sphere.weights)


def is_k_stable(sphere: MarkedSphere) -> bool:
    """Strict Troyanov condition.

    Only the closed condition is known to characterize K-semistability; the
    strict version is the natural stable analogue and is used as such.
    """
    total = sphere.total_weight
    return all(total - delta > delta for delta in sphere.weights)
