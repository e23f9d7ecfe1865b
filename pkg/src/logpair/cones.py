"""Polarized orbifold cones over marked spheres.

A cone ``C(S, L)`` over ``(P^1, Delta)`` is determined by its base and by the
rational degree of the orbifold polarization ``L``; the number ``lambda`` with
``-(K + Delta) = lambda L`` follows from the two.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable

from logpair.errors import (
    NotKlt,
    NotSemistable,
    PreconditionViolated,
    SchemaError,
    WeightOutOfRange,
)
from logpair.pairs import MarkedSphere, Singularity, classify, is_k_semistable
from logpair.rational import as_rat


@dataclass(frozen=True)
class PolarizedCone:
    base: MarkedSphere
    polarization_degree: Fraction

    def __post_init__(self) -> None:
        degree = as_rat(self.polarization_degree)
        if degree <= 0:
            raise SchemaError(f"polarization degree must be positive, got {degree}")
        object.__setattr__(self, "polarization_degree", degree)

    @property
    def lam(self) -> Fraction:
        return lambda_of(self)


class ConeClass(str, enum.Enum):
    KLT = "Klt"
    LC_NOT_KLT = "LcNotKlt"
    NOT_LC = "NotLc"


@dataclass(frozen=True)
class WeightedPlanePair:
    """``(C^2, c0{z2=0} + c_inf{z1=0} + sum c_i{u_i z1^b = z2^a})`` with weights ``(a, b)``."""

    a: int
    b: int
    c0: Fraction = Fraction(0)
    c_inf: Fraction = Fraction(0)
    branches: tuple[tuple[str, Fraction], ...] = ()

    def __post_init__(self) -> None:
        for name in ("a", "b"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise SchemaError(f"{name} must be a positive integer, got {value!r}")
        if gcd(self.a, self.b) != 1:
            raise SchemaError(f"weights ({self.a}, {self.b}) are not coprime")
        object.__setattr__(self, "c0", _unit_weight("c0", self.c0))
        object.__setattr__(self, "c_inf", _unit_weight("c_inf", self.c_inf))
        branches = tuple((str(label), _unit_weight(str(label), c)) for label, c in self.branches)
        labels = [label for label, _ in branches]
        if len(set(labels)) != len(labels):
            raise SchemaError(f"duplicate branch labels: {labels}")
        object.__setattr__(self, "branches", branches)


@dataclass(frozen=True)
class LineArrangement:
    """Weighted lines through the origin of ``C^2``. Zero weights are allowed."""

    weights: tuple[tuple[str, Fraction], ...] = ()

    def __post_init__(self) -> None:
        weights = tuple((str(label), _unit_weight(str(label), d)) for label, d in self.weights)
        labels = [label for label, _ in weights]
        if len(set(labels)) != len(labels):
            raise SchemaError(f"duplicate line labels: {labels}")
        object.__setattr__(self, "weights", weights)

    @classmethod
    def from_weights(cls, weights: Iterable[object], prefix: str = "L") -> "LineArrangement":
        return cls(tuple((f"{prefix}{i + 1}", w) for i, w in enumerate(weights)))

    @property
    def delta(self) -> Fraction:
        return sum((d for _, d in self.weights), Fraction(0))

    @property
    def delta_max(self) -> Fraction:
        return max((d for _, d in self.weights), default=Fraction(0))

    @property
    def delta_rest(self) -> Fraction:
        return self.delta - self.delta_max

    def to_sphere(self) -> MarkedSphere:
        """The quotient by the scaling action; zero-weight lines disappear."""
        return MarkedSphere(tuple((label, d) for label, d in self.weights if d != 0))

    def to_cone(self) -> PolarizedCone:
        # blowing up the origin gives E = P^1 with O(1)
        return PolarizedCone(self.to_sphere(), Fraction(1))


@dataclass(frozen=True)
class DegenerationData:
    a: int
    b: int
    gamma: Fraction
    vol_hat: Fraction

    def degenerate_cone(self) -> PolarizedCone:
        """Quotient of the central fibre ``(C^2, gamma{0} + gamma{inf})`` with weights ``(a, b)``."""
        base = MarkedSphere(
            tuple((label, self.gamma) for label in ("0", "inf")) if self.gamma else ()
        )
        return PolarizedCone(base, Fraction(1, self.a * self.b))


def _unit_weight(name: str, value: object) -> Fraction:
    value = as_rat(value)
    if not 0 <= value <= 1:
        raise SchemaError(f"weight {name!r} must lie in [0, 1], got {value}")
    return value


def lambda_of(cone: PolarizedCone) -> Fraction:
    return (2 - cone.base.total_weight) / cone.polarization_degree


def classify_cone(cone: PolarizedCone) -> ConeClass:
    """Kollár's criterion: klt iff ``lambda > 0`` and the base is klt."""
    lam = lambda_of(cone)
    if lam > 0 and classify(cone.base).singularity is Singularity.KLT:
        return ConeClass.KLT
    if lam >= 0:
        # bases of MarkedSphere are always lc
        return ConeClass.LC_NOT_KLT
    return ConeClass.NOT_LC


def normalized_volume(lam: object, ln: object, n: int = 1) -> Fraction:
    """``lambda^(n+1) * L^n`` for a cone over a K-semistable log-Fano base.

    The caller vouches for K-semistability; without it the value is not the
    normalized volume. ``ln`` is the top self-intersection of the polarization.
    """
    lam, ln = as_rat(lam), as_rat(ln)
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise PreconditionViolated(f"dimension of the base must be a positive integer, got {n!r}")
    if lam <= 0:
        raise NotKlt(f"lambda = {lam} is not positive")
    if ln <= 0:
        raise PreconditionViolated(f"L^n = {ln} is not positive")
    return lam ** (n + 1) * ln


def cone_normalized_volume(cone: PolarizedCone) -> Fraction:
    """Checked normalized volume of a surface cone.

    Raises :class:`NotSemistable` if the base fails the Troyanov condition and
    :class:`NotKlt` if the cone is not klt.
    """
    if not is_k_semistable(cone.base):
        raise NotSemistable(f"base {list(map(str, cone.base.weights))} fails the Troyanov condition")
    if classify_cone(cone) is not ConeClass.KLT:
        raise NotKlt(f"cone is {classify_cone(cone).value}, lambda = {lambda_of(cone)}")
    return normalized_volume(lambda_of(cone), cone.polarization_degree, 1)


def quotient_of_weighted_plane(pair: WeightedPlanePair) -> PolarizedCone:
    a, b = pair.a, pair.b
    marks = [
        ("0", pair.c0 / a + Fraction(a - 1, a)),
        ("inf", pair.c_inf / b + Fraction(b - 1, b)),
        *pair.branches,
    ]
    for label, weight in marks:
        if weight > 1 or weight < 0:
            raise WeightOutOfRange(f"mark {label!r} has weight {weight}")
    cone = PolarizedCone(
        MarkedSphere(tuple((label, w) for label, w in marks if w != 0)),
        Fraction(1, a * b),
    )
    branch_sum = sum((c for _, c in pair.branches), Fraction(0))
    expected = a + b - pair.c0 * b - pair.c_inf * a - a * b * branch_sum
    if lambda_of(cone) != expected:
        raise AssertionError(f"lambda mismatch: {lambda_of(cone)} != {expected}")
    return cone


def destabilizing_degeneration(arr: LineArrangement) -> DegenerationData:
    """Degeneration of an unstable klt arrangement to a K-semistable cone.

    The heaviest line goes to ``{0}`` with weight ``delta_m`` and the remaining
    lines collapse to ``{inf}`` with weight ``delta'``; the central fibre is the
    ``(a, b)``-weighted plane whose quotient carries ``gamma`` at both marks.
    """
    delta, dm, rest = arr.delta, arr.delta_max, arr.delta_rest
    if not (delta < 2 and dm < 1 and dm >= rest):
        raise PreconditionViolated(
            f"not an unstable klt arrangement: delta={delta}, delta_m={dm}, delta'={rest}"
        )
    ratio = (1 - rest) / (1 - dm)
    b, a = ratio.numerator, ratio.denominator
    gamma = 1 - (1 - rest) / b
    if gamma != 1 - (1 - dm) / a:
        raise AssertionError(f"gamma mismatch: {gamma} != {1 - (1 - dm) / a}")
    data = DegenerationData(a=a, b=b, gamma=gamma, vol_hat=4 * (1 - rest) * (1 - dm))

    central = quotient_of_weighted_plane(WeightedPlanePair(a, b, c0=dm, c_inf=rest))
    if central != data.degenerate_cone():
        raise AssertionError(f"central fibre quotient {central} disagrees with gamma = {gamma}")
    if not is_k_semistable(central.base):
        raise AssertionError(f"gamma-pair {list(map(str, central.base.weights))} is not K-semistable")
    if cone_normalized_volume(central) != data.vol_hat:
        raise AssertionError("volume of the central fibre disagrees with 4(1-delta')(1-delta_m)")
    return data


def rescale_polarization(cone: PolarizedCone, k: int) -> PolarizedCone:
    """Multiply the polarization by ``k``; ``lambda`` and the volume divide by ``k``."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise PreconditionViolated(f"k must be a positive integer, got {k!r}")
    return PolarizedCone(cone.base, cone.polarization_degree * k)
