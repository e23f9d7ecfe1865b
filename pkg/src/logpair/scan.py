"""Exhaustive check of ``4 e_orb = vol_hat`` over bounded grids of line arrangements.

Weights are all ``p/q`` in ``(0, 1]`` with ``q <= max_denominator``; tuples are
non-decreasing sequences of at most ``max_points`` weights. For every tuple the
Euler number from the case formula is compared with the normalized volume
computed independently through the cone module:

* K-semistable klt germs: the checked cone volume ``lambda^2 deg L``;
* unstable klt germs: the volume of the K-semistable degeneration;
* non-klt germs: the Euler number must vanish.

On the tie ``delta_m == delta'`` both volume routes apply and both are checked.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from logpair.cones import LineArrangement, cone_normalized_volume, destabilizing_degeneration
from logpair.errors import LogPairError
from logpair.euler import euler_line_arrangement
from logpair.pairs import is_k_semistable


@dataclass(frozen=True)
class ScanConfig:
    max_denominator: int
    max_points: int
    parallel_workers: int = 1

    def __post_init__(self) -> None:
        if self.max_denominator < 1:
            raise ValueError("max_denominator must be at least 1")
        if self.max_points < 0:
            raise ValueError("max_points must be non-negative")
        if self.parallel_workers < 1:
            raise ValueError("parallel_workers must be at least 1")


@dataclass(frozen=True)
class Violation:
    weights: tuple[Fraction, ...]
    expected: Fraction
    actual: Fraction | str
    identity_name: str


@dataclass
class ScanReport:
    tuples_checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    elapsed: float = field(default=0.0, compare=False)

    def merge(self, other: "ScanReport") -> "ScanReport":
        return ScanReport(
            self.tuples_checked + other.tuples_checked,
            self.violations + other.violations,
            self.elapsed + other.elapsed,
        )


def grid_weights(max_denominator: int) -> list[Fraction]:
    return sorted({Fraction(p, q) for q in range(1, max_denominator + 1) for p in range(1, q + 1)})


def check_tuple(weights: Sequence[Fraction]) -> list[Violation]:
    weights = tuple(weights)
    arr = LineArrangement.from_weights(weights)
    e = euler_line_arrangement(arr).value
    klt = arr.delta < 2 and arr.delta_max < 1
    if not klt:
        if e != 0:
            return [Violation(weights, Fraction(0), e, "non-klt: e_orb = 0")]
        return []

    found = []
    routes = []
    if is_k_semistable(arr.to_sphere()):
        routes.append(("klt semistable: 4 e_orb = lambda^2 deg L", cone_normalized_volume, arr.to_cone()))
    if arr.delta_max >= arr.delta_rest:
        routes.append(
            ("klt unstable: 4 e_orb = vol of degeneration", lambda a: destabilizing_degeneration(a).vol_hat, arr)
        )
    for name, route, arg in routes:
        try:
            vol = route(arg)
        except (LogPairError, AssertionError) as exc:
            found.append(Violation(weights, 4 * e, type(exc).__name__, name))
            continue
        if 4 * e != vol:
            found.append(Violation(weights, vol, 4 * e, name))
    return found


def _scan_partition(args: tuple[list[Fraction], int, int]) -> ScanReport:
    """All tuples whose smallest weight is ``grid[lead]``, by size then lexicographically."""
    grid, lead, max_points = args
    start = time.perf_counter()
    report = ScanReport()
    tail = grid[lead:]
    for size in range(1, max_points + 1):
        for rest in combinations_with_replacement(tail, size - 1):
            report.tuples_checked += 1
            report.violations.extend(check_tuple((grid[lead], *rest)))
    report.elapsed = time.perf_counter() - start
    return report


def scan_conjecture(cfg: ScanConfig) -> ScanReport:
    start = time.perf_counter()
    grid = grid_weights(cfg.max_denominator)
    report = ScanReport(1, check_tuple(()))
    jobs = [(grid, lead, cfg.max_points) for lead in range(len(grid))] if cfg.max_points else []
    if cfg.parallel_workers == 1:
        partials = map(_scan_partition, jobs)
    else:
        with ProcessPoolExecutor(max_workers=cfg.parallel_workers) as pool:
            partials = list(pool.map(_scan_partition, jobs))
    for partial in partials:
        report = report.merge(partial)
    report.elapsed = time.perf_counter() - start
    return report
