"""Local orbifold Euler numbers of line arrangements and cone singularities.

Three routes are provided and cross-checked in the tests:

* the closed four-case formula for weighted line arrangements in ``C^2``;
* covering multiplicativity, reducing any cone over ``P^1`` to an arrangement;
* Langer's local ``c_2`` formula applied to the extension sheaf on a branched
  cover of the base, valid when the base is K-semistable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from logpair.cones import (
    ConeClass,
    LineArrangement,
    PolarizedCone,
    classify_cone,
    lambda_of,
)
from logpair.errors import NotKlt, NotSemistable, PreconditionViolated, SchemaError
from logpair.pairs import is_k_semistable
from logpair.rational import as_rat


class CaseTag(str, enum.Enum):
    NOT_LOG_CANONICAL = "NotLogCanonical"
    LOG_CALABI_YAU = "LogCalabiYau"
    UNSTABLE_KLT = "UnstableKlt"
    STABLE_REGIME = "StableRegime"
    LC_NOT_KLT_BOUNDARY = "LcNotKltBoundary"


class Method(str, enum.Enum):
    DIRECT_FORMULA = "DirectFormula"
    VIA_COVER = "ViaCover"
    VIA_LANGER = "ViaLanger"


@dataclass(frozen=True)
class EulerResult:
    value: Fraction
    case_tag: CaseTag
    method: Method

    def __post_init__(self) -> None:
        if self.value < 0:
            raise AssertionError(f"negative local Euler number {self.value}")


@dataclass(frozen=True)
class Rank2BundleData:
    """Rank-2 bundle on a curve: determinant degree, polarization degree, known sub-line-bundles."""

    e: Fraction
    d: Fraction
    sub_degrees: tuple[Fraction, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "e", as_rat(self.e))
        object.__setattr__(self, "d", as_rat(self.d))
        object.__setattr__(self, "sub_degrees", tuple(as_rat(s) for s in self.sub_degrees))
        if self.d <= 0:
            raise SchemaError(f"polarization degree d must be positive, got {self.d}")


def euler_line_arrangement(arr: LineArrangement) -> EulerResult:
    """``e_orb(0; C^2, sum d_i L_i)`` by exact case analysis on ``delta``, ``delta_m``, ``delta'``.

    The tie ``delta_m == delta'`` goes to the unstable branch; both formulas
    agree there.
    """
    delta, dm, rest = arr.delta, arr.delta_max, arr.delta_rest
    if delta > 2:
        return EulerResult(Fraction(0), CaseTag.NOT_LOG_CANONICAL, Method.DIRECT_FORMULA)
    if delta == 2:
        return EulerResult(Fraction(0), CaseTag.LOG_CALABI_YAU, Method.DIRECT_FORMULA)
    if dm >= rest:
        tag = CaseTag.LC_NOT_KLT_BOUNDARY if dm == 1 else CaseTag.UNSTABLE_KLT
        return EulerResult((1 - delta + dm) * (1 - dm), tag, Method.DIRECT_FORMULA)
    return EulerResult((2 - delta) ** 2 / 4, CaseTag.STABLE_REGIME, Method.DIRECT_FORMULA)


def euler_orbifold_cone(cone: PolarizedCone) -> EulerResult:
    """Euler number of a cone over ``(P^1, Delta)`` polarized by ``L``.

    Pick ``k`` with ``kL`` a genuine line bundle of degree ``d``. The cone maps
    with degree ``k`` onto the ordinary cone ``Z`` over ``kL``, and the germ
    ``(C^2, sum d_i L_i)`` covers ``Z`` with degree ``d``. Multiplicativity
    gives ``e = (k/d) e_arr = e_arr / deg L``.
    """
    arrangement = euler_line_arrangement(LineArrangement(cone.base.points))
    return EulerResult(
        arrangement.value / cone.polarization_degree, arrangement.case_tag, Method.VIA_COVER
    )


def sbar(bundle: Rank2BundleData) -> Fraction:
    return max([bundle.e / 2, *bundle.sub_degrees])


def langer_local_c2(e: object, sbar: object, d: object) -> Fraction:
    """Local ``c_2`` at the vertex of the cone over a curve, ``-sbar (e - sbar) / d``."""
    e, sbar, d = as_rat(e), as_rat(sbar), as_rat(d)
    if d <= 0:
        raise PreconditionViolated(f"d must be positive, got {d}")
    if sbar < e / 2:
        raise PreconditionViolated(f"sbar = {sbar} is below e/2 = {e / 2}")
    return -sbar * (e - sbar) / d


def euler_via_langer(cone: PolarizedCone, cover_degree: int = 1) -> EulerResult:
    """Euler number through the extension sheaf on a degree-``N`` cover of the base.

    K-semistability of the base makes the extension sheaf slope semistable, so
    its maximal destabilizing degree is ``c_1 / 2``.
    """
    if isinstance(cover_degree, bool) or not isinstance(cover_degree, int) or cover_degree < 1:
        raise PreconditionViolated(f"cover degree must be a positive integer, got {cover_degree!r}")
    if not is_k_semistable(cone.base):
        raise NotSemistable(f"base {list(map(str, cone.base.weights))} fails the Troyanov condition")
    if classify_cone(cone) is not ConeClass.KLT:
        raise NotKlt(f"cone is {classify_cone(cone).value}, lambda = {lambda_of(cone)}")

    lam = lambda_of(cone)
    n = cover_degree
    pulled_back_degree = n * cone.polarization_degree
    c1 = -lam * pulled_back_degree
    c2 = langer_local_c2(c1, c1 / 2, pulled_back_degree)
    value = -c2 / n
    if value != lam**2 * cone.polarization_degree / 4:
        raise AssertionError(f"cover degree {n} changed the Euler number to {value}")

    tag = euler_line_arrangement(LineArrangement(cone.base.points)).case_tag
    return EulerResult(value, tag, Method.VIA_LANGER)


def euler_scaling(value: object, degree: int) -> Fraction:
    """Euler number upstairs of a finite quasi-étale cover of the given degree."""
    value = as_rat(value)
    if value < 0:
        raise PreconditionViolated(f"Euler number must be non-negative, got {value}")
    if isinstance(degree, bool) or not isinstance(degree, int) or degree < 1:
        raise PreconditionViolated(f"degree must be a positive integer, got {degree!r}")
    return value * degree
