"""Recognition of the plane-graph classes built on uniform interior gonality.

Class 1: 2-connected plane graphs whose interior faces all share one
gonality eta.  Class 2: class-1 members with eta = 4 and at least one
interior vertex of degree != 4.  Class 3 is ambiguous in its source and
is reported under two readings:

  strict   -- class-1 member containing an interior triangle (uniform
              gonality then forces eta = 3);
  mixed34  -- 2-connected, every interior gonality in {3,4}, and at
              least one interior triangle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .census import classify_vertices, gonality_histogram
from .embedding import PlaneGraph, check_two_connected
from .errors import LengthMismatch

STRICT = "STRICT"
MIXED34 = "MIXED34"


@dataclass(frozen=True)
class ClassReport:
    two_connected: bool
    uniform_gonality: Optional[int]
    max_degree: int
    gamma1: bool
    gamma2: bool
    gamma3_strict: bool
    gamma3_mixed34: bool


@dataclass(frozen=True)
class ScanResult:
    """Outcome of the single-pass class-2 scan with its operation count."""

    is_member: bool
    row_visits: int

    def __bool__(self) -> bool:
        return self.is_member


def classify(pg: PlaneGraph) -> ClassReport:
    two_connected = check_two_connected(pg.embedding)
    hist = gonality_histogram(pg)
    gonalities = hist.gonalities()
    uniform = gonalities[0] if len(gonalities) == 1 else None

    gamma1 = two_connected and uniform is not None
    interior, _ = classify_vertices(pg)
    gamma2 = (gamma1 and uniform == 4
              and any(pg.embedding.degree(v) != 4 for v in interior))
    gamma3_strict = gamma1 and uniform == 3
    gamma3_mixed34 = (two_connected
                      and all(eta in (3, 4) for eta in gonalities)
                      and hist.count(3) >= 1)
    return ClassReport(
        two_connected=two_connected,
        uniform_gonality=uniform,
        max_degree=pg.embedding.max_degree,
        gamma1=gamma1,
        gamma2=gamma2,
        gamma3_strict=gamma3_strict,
        gamma3_mixed34=gamma3_mixed34,
    )


def gamma2_linear_scan(adjacency_rows: Sequence[Sequence[int]],
                       exterior_marks: Sequence[bool],
                       face_gonality_uniform4: bool) -> ScanResult:
    """Single pass over adjacency rows deciding class-2 membership.

    ``face_gonality_uniform4`` must be precomputed as "2-connected and all
    interior faces are 4-gons" (see :func:`scan_inputs`); the scan itself
    touches each row at most once and reports the visit count.
    """
    if len(adjacency_rows) != len(exterior_marks):
        raise LengthMismatch(
            f"{len(adjacency_rows)} rows but {len(exterior_marks)} marks")
    if not face_gonality_uniform4:
        return ScanResult(False, 0)
    visits = 0
    found = False
    for row, is_exterior in zip(adjacency_rows, exterior_marks):
        visits += 1
        if not is_exterior and len(row) != 4:
            found = True
    return ScanResult(found, visits)


def scan_inputs(pg: PlaneGraph) -> tuple[list, list, bool]:
    """Precompute (adjacency_rows, exterior_marks, uniform-4 flag) for the scan."""
    rows = [list(r) for r in pg.embedding.rotations]
    exterior = pg.outer_vertices
    marks = [v in exterior for v in range(pg.vertex_count)]
    gonalities = {pg.gonality(f) for f in pg.interior_face_ids()}
    flag = check_two_connected(pg.embedding) and gonalities == {4}
    return rows, marks, flag
