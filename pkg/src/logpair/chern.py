"""Log Chern numbers of log-smooth surface pairs and Miyaoka-Yau type audits.

Intersection numbers are supplied by the caller; nothing here computes an
intersection product. ``c_1(S, Delta)`` is taken as ``-(K + Delta)`` so
``c1_sq = (K + Delta)^2``; only the square ever enters a formula.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from logpair.errors import MalformedMatrix, SchemaError, UnsupportedDimension
from logpair.rational import as_rat


def _int(name: str, value: object) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"{name} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class Component:
    """A boundary curve ``Delta_i`` with its coefficient and intersection numbers.

    If ``genus`` is given, adjunction ``K.C + C^2 = 2g - 2`` is enforced.
    """

    label: str
    delta: Fraction
    self_int: int
    K_dot: int
    genus: int | None = None

    def __post_init__(self) -> None:
        delta = as_rat(self.delta)
        if not 0 < delta <= 1:
            raise SchemaError(f"coefficient of {self.label!r} must lie in (0, 1], got {delta}")
        object.__setattr__(self, "delta", delta)
        _int("self_int", self.self_int)
        _int("K_dot", self.K_dot)
        if self.genus is not None:
            if _int("genus", self.genus) < 0:
                raise SchemaError(f"genus of {self.label!r} is negative")
            if self.K_dot + self.self_int != 2 * self.genus - 2:
                raise SchemaError(
                    f"{self.label!r} violates adjunction: "
                    f"K.C + C^2 = {self.K_dot + self.self_int} != {2 * self.genus - 2}"
                )


@dataclass(frozen=True)
class SurfaceChernData:
    euler_number: int
    K_squared: int
    components: tuple[Component, ...] = ()
    pair_int: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        _int("euler_number", self.euler_number)
        _int("K_squared", self.K_squared)
        components = tuple(self.components)
        labels = [c.label for c in components]
        if len(set(labels)) != len(labels):
            raise SchemaError(f"duplicate component labels: {labels}")
        m = len(components)
        matrix = tuple(tuple(row) for row in self.pair_int)
        if m and not matrix:
            matrix = tuple(tuple(0 for _ in range(m)) for _ in range(m))
        if len(matrix) != m or any(len(row) != m for row in matrix):
            raise MalformedMatrix(f"pair_int must be {m}x{m}")
        for i in range(m):
            for j in range(m):
                value = matrix[i][j]
                if isinstance(value, bool) or not isinstance(value, int):
                    raise MalformedMatrix(f"pair_int[{i}][{j}] = {value!r} is not an integer")
                if i == j and value != 0:
                    raise MalformedMatrix(f"pair_int diagonal must be zero, got {value} at {i}")
                if value != matrix[j][i]:
                    raise MalformedMatrix(f"pair_int is not symmetric at ({i}, {j})")
        object.__setattr__(self, "components", components)
        object.__setattr__(self, "pair_int", matrix)

    def permuted(self, order: Sequence[int]) -> "SurfaceChernData":
        return SurfaceChernData(
            self.euler_number,
            self.K_squared,
            tuple(self.components[i] for i in order),
            tuple(tuple(self.pair_int[i][j] for j in order) for i in order),
        )


class LogChernNumbers(NamedTuple):
    c1_sq: Fraction
    c2: Fraction


class InequalityCheck(NamedTuple):
    value: Fraction
    holds: bool


class ExtensionSheafInvariants(NamedTuple):
    rank: int
    c1_sq: Fraction
    c2: Fraction
    discriminant: Fraction


def log_chern(data: SurfaceChernData) -> LogChernNumbers:
    comps = data.components
    k_delta = sum((c.delta * c.K_dot for c in comps), Fraction(0))
    linear_self = sum((c.delta * c.self_int for c in comps), Fraction(0))
    square_self = sum((c.delta**2 * c.self_int for c in comps), Fraction(0))
    cross = sum(
        (
            comps[i].delta * comps[j].delta * data.pair_int[i][j]
            for i in range(len(comps))
            for j in range(i + 1, len(comps))
        ),
        Fraction(0),
    )
    c2 = data.euler_number + k_delta + linear_self + cross
    c1_sq = data.K_squared + 2 * k_delta + square_self + 2 * cross
    return LogChernNumbers(c1_sq=Fraction(c1_sq), c2=Fraction(c2))


def bogomolov_discriminant(r: int, c1_sq: object, c2: object) -> Fraction:
    return 2 * r * as_rat(c2) - (r - 1) * as_rat(c1_sq)


def my_fano_check(data: SurfaceChernData) -> InequalityCheck:
    """``6 c_2(S, Delta) - 2 c_1^2(S, Delta) >= 0`` for K-semistable log-Fano surface pairs.

    K-semistability is the caller's responsibility; the value is reported
    regardless.
    """
    chern = log_chern(data)
    value = 6 * chern.c2 - 2 * chern.c1_sq
    return InequalityCheck(value, value >= 0)


def my_cy_check(data: SurfaceChernData) -> InequalityCheck:
    """``c_2(S, Delta) >= 0`` for log Calabi-Yau surface pairs."""
    chern = log_chern(data)
    if chern.c1_sq != 0:
        warnings.warn(
            f"c1^2 = {chern.c1_sq} is nonzero, so K + Delta is not numerically trivial",
            stacklevel=2,
        )
    return InequalityCheck(chern.c2, chern.c2 >= 0)


def extension_sheaf_invariants(data: SurfaceChernData, n: int = 2) -> ExtensionSheafInvariants:
    # extension by the trivial sheaf leaves the Chern classes of T_S(-log Delta) unchanged
    if n != 2:
        raise UnsupportedDimension(f"surface data only supports n = 2, got {n}")
    chern = log_chern(data)
    return ExtensionSheafInvariants(
        rank=n + 1,
        c1_sq=chern.c1_sq,
        c2=chern.c2,
        discriminant=bogomolov_discriminant(n + 1, chern.c1_sq, chern.c2),
    )
