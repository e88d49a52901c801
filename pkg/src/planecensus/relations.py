"""Euler-type relations over census vectors, as exact integer residuals.

Every relation is evaluated fraction-free (scaled by 2*eta or 2) so that
residuals are exact signed integers; a residual of 0 means the relation
holds.  Sign convention: left side minus right side of the relation as
written in its docstring.

Two relations exist in a "printed" variant alongside the normative
"corrected" one.  The printed variants are kept deliberately: they are
known-wrong transcriptions whose nonzero residuals the test suite pins as
counterexamples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .census import Census, GonalityHistogram
from .errors import BadEta, DegreeTooLarge, MixedGonalityOutOfRange, NegativePrediction

MASTER = "MASTER"
D4_GENERAL = "D4_GENERAL"
GAMMA2_CORRECTED = "GAMMA2_CORRECTED"
GAMMA2_PRINTED = "GAMMA2_PRINTED"
FACE_SYSTEM_INCIDENCE = "FACE_SYSTEM_INCIDENCE"
FACE_SYSTEM_COUNT = "FACE_SYSTEM_COUNT"
F3_PREDICTION = "F3_PREDICTION"

#: Every relation id, in stable report order.
CATALOG = (MASTER, D4_GENERAL, GAMMA2_CORRECTED, GAMMA2_PRINTED,
           FACE_SYSTEM_INCIDENCE, FACE_SYSTEM_COUNT, F3_PREDICTION)

Gamma2Variant = Literal["corrected", "printed"]


@dataclass(frozen=True)
class RelationReport:
    """One relation evaluated on one graph."""

    relation: str
    residual: Optional[int]
    applicable: bool
    notes: str = ""

    @property
    def holds(self) -> bool:
        return self.applicable and self.residual == 0


def _require_max_degree_4(c: Census) -> None:
    if c.max_degree > 4:
        raise DegreeTooLarge(
            f"relation needs maximum degree 4, census has degree {c.max_degree}")


def residual_master(c: Census, eta: int) -> int:
    """Master relation for uniform interior gonality eta, scaled by 2*eta.

    sum_d (2*eta - d*eta + 2d) * interior_d
      + sum_d (2*eta - d*eta + 2d - 2) * exterior_d  =  2*eta

    Zero for every 2-connected plane graph whose interior faces are all
    eta-gons, with no bound on vertex degrees.
    """
    if eta < 3:
        raise BadEta(f"gonality must be >= 3, got {eta}")
    total = 0
    for d in c.degrees():
        total += (2 * eta - d * eta + 2 * d) * c.interior(d)
        total += (2 * eta - d * eta + 2 * d - 2) * c.exterior(d)
    return total - 2 * eta


def residual_d4_general(c: Census, eta: int) -> int:
    """Degree-at-most-4 specialization of the master relation.

    int4*(8-2*eta) + ext4*(6-2*eta) + int3*(6-eta) + ext3*(4-eta)
      + 4*int2 + 2*ext2  =  2*eta

    Agrees with residual_master whenever max_degree <= 4.
    """
    if eta < 3:
        raise BadEta(f"gonality must be >= 3, got {eta}")
    _require_max_degree_4(c)
    return (c.interior(4) * (8 - 2 * eta)
            + c.exterior(4) * (6 - 2 * eta)
            + c.interior(3) * (6 - eta)
            + c.exterior(3) * (4 - eta)
            + 4 * c.interior(2)
            + 2 * c.exterior(2)
            - 2 * eta)


def residual_gamma2(c: Census, variant: Gamma2Variant = "corrected") -> int:
    """Quadrangulation (eta = 4) relation, in two variants.

    corrected:  int3 + 2*int2 = 4 + ext4 - ext2
    printed:    int3 + 2*int2 = 4 + ext4 + ext3 - ext2

    The printed variant carries a spurious ext3 term (its coefficient
    vanishes at eta = 4); it is kept as a documented counterexample and
    differs from the corrected residual by exactly -ext3.
    """
    _require_max_degree_4(c)
    residual = (c.interior(3) + 2 * c.interior(2)
                - (4 + c.exterior(4) - c.exterior(2)))
    if variant == "printed":
        residual -= c.exterior(3)
    elif variant != "corrected":
        raise ValueError(f"unknown variant {variant!r}")
    return residual


def check_face_system(c: Census, h: GonalityHistogram) -> tuple[int, int]:
    """Mixed-gonality incidence system; returns (incidence, count) residuals.

    incidence (any gonalities, 2-connected source):
        sum_d d*int_d + sum_d (d-1)*ext_d  =  sum_eta eta*F_eta
    count (doubled; needs degrees <= 4 and gonalities within {3,4}):
        2 + 2*(int4 + ext4) + (int3 + ext3)  =  2*(F3 + F4)
    """
    incidence = (sum(d * c.interior(d) for d in c.degrees())
                 + sum((d - 1) * c.exterior(d) for d in c.degrees())
                 - h.weighted_total)
    bad_gonality = [eta for eta in h.gonalities() if eta not in (3, 4)]
    if bad_gonality or c.max_degree > 4:
        raise MixedGonalityOutOfRange(
            f"count equation needs gonalities within {{3,4}} and degrees <= 4; "
            f"got gonalities {h.gonalities()} and max degree {c.max_degree}")
    count = (2
             + 2 * (c.interior(4) + c.exterior(4))
             + (c.interior(3) + c.exterior(3))
             - 2 * (h.count(3) + h.count(4)))
    return incidence, count


def predict_f3(c: Census) -> int:
    """Predicted number of interior triangles from the census alone.

    F3 = 4 + ext4 - int3 - 2*int2 - ext2

    Exact for every 2-connected plane graph with degrees <= 4 whose
    interior faces are all 3- or 4-gons; the degree bound is essential
    (degree-5 vertices contribute terms the formula omits).
    """
    _require_max_degree_4(c)
    value = (4 + c.exterior(4) - c.interior(3) - 2 * c.interior(2)
             - c.exterior(2))
    if value < 0:
        raise NegativePrediction(
            f"predicted triangle count {value} is negative; input is outside "
            "the formula's domain")
    return value


def evaluate_catalog(c: Census, h: GonalityHistogram,
                     two_connected: bool,
                     uniform_gonality: Optional[int]) -> list[RelationReport]:
    """Evaluate every relation in CATALOG, gating inapplicable ones.

    Produces exactly one report per catalog entry, so callers can render a
    complete relation table for any graph.
    """
    reports: list[RelationReport] = []
    deg_ok = c.max_degree <= 4
    gon34 = all(eta in (3, 4) for eta in h.gonalities())

    if two_connected and uniform_gonality is not None:
        eta = uniform_gonality
        reports.append(RelationReport(
            MASTER, residual_master(c, eta), True, notes=f"eta={eta}"))
        if deg_ok:
            reports.append(RelationReport(
                D4_GENERAL, residual_d4_general(c, eta), True, notes=f"eta={eta}"))
        else:
            reports.append(RelationReport(
                D4_GENERAL, None, False, notes="max degree exceeds 4"))
    else:
        why = ("not two-connected" if not two_connected
               else "interior gonality not uniform")
        reports.append(RelationReport(MASTER, None, False, notes=why))
        reports.append(RelationReport(D4_GENERAL, None, False, notes=why))

    if two_connected and uniform_gonality == 4 and deg_ok:
        reports.append(RelationReport(
            GAMMA2_CORRECTED, residual_gamma2(c, "corrected"), True))
        reports.append(RelationReport(
            GAMMA2_PRINTED, residual_gamma2(c, "printed"), True,
            notes="known-wrong printed variant, kept as counterexample"))
    else:
        why = ("not two-connected" if not two_connected
               else "not a uniform quadrangulation" if uniform_gonality != 4
               else "max degree exceeds 4")
        reports.append(RelationReport(GAMMA2_CORRECTED, None, False, notes=why))
        reports.append(RelationReport(GAMMA2_PRINTED, None, False, notes=why))

    if two_connected:
        if deg_ok and gon34:
            incidence, count = check_face_system(c, h)
            reports.append(RelationReport(FACE_SYSTEM_INCIDENCE, incidence, True))
            reports.append(RelationReport(FACE_SYSTEM_COUNT, count, True))
        else:
            incidence = (sum(d * c.interior(d) for d in c.degrees())
                         + sum((d - 1) * c.exterior(d) for d in c.degrees())
                         - h.weighted_total)
            reports.append(RelationReport(FACE_SYSTEM_INCIDENCE, incidence, True))
            reports.append(RelationReport(
                FACE_SYSTEM_COUNT, None, False,
                notes="needs gonalities within {3,4} and degrees <= 4"))
    else:
        reports.append(RelationReport(
            FACE_SYSTEM_INCIDENCE, None, False, notes="not two-connected"))
        reports.append(RelationReport(
            FACE_SYSTEM_COUNT, None, False, notes="not two-connected"))

    if two_connected and deg_ok and gon34:
        try:
            predicted = predict_f3(c)
        except NegativePrediction:
            reports.append(RelationReport(
                F3_PREDICTION, None, False, notes="negative prediction"))
        else:
            reports.append(RelationReport(
                F3_PREDICTION, predicted - h.count(3), True,
                notes=f"predicted={predicted} actual={h.count(3)}"))
    else:
        why = ("not two-connected" if not two_connected
               else "max degree exceeds 4" if not deg_ok
               else "gonalities outside {3,4}")
        reports.append(RelationReport(F3_PREDICTION, None, False, notes=why))

    return reports
