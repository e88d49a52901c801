"""Full analysis report for one plane graph, and its text rendering.

The rendered report is a flat ``key: value`` document with a stable key
order and exact integers only.  Every relation in the catalog appears
exactly once, either with its residual or gated with the reason it does
not apply.
"""

from __future__ import annotations

from dataclasses import dataclass

from .census import (
    Census,
    GonalityHistogram,
    IdentityVerdict,
    degree_census,
    gonality_histogram,
    verify_counting_identities,
)
from .classes import ClassReport, classify
from .embedding import PlaneGraph, check_two_connected, compute_genus
from .relations import RelationReport, evaluate_catalog

SCHEMA = "planecensus-report 1"


@dataclass(frozen=True)
class Report:
    vertex_count: int
    edge_count: int
    face_count: int
    genus: int
    two_connected: bool
    census: Census
    histogram: GonalityHistogram
    identities: list[IdentityVerdict]
    relations: list[RelationReport]
    classes: ClassReport


def build_report(pg: PlaneGraph) -> Report:
    census = degree_census(pg)
    histogram = gonality_histogram(pg)
    class_report = classify(pg)
    return Report(
        vertex_count=pg.vertex_count,
        edge_count=pg.edge_count,
        face_count=pg.face_count,
        genus=compute_genus(pg.embedding, pg.faces),
        two_connected=check_two_connected(pg.embedding),
        census=census,
        histogram=histogram,
        identities=verify_counting_identities(pg, census, histogram),
        relations=evaluate_catalog(census, histogram,
                                   class_report.two_connected,
                                   class_report.uniform_gonality),
        classes=class_report,
    )


def _bool(value: bool) -> str:
    return "true" if value else "false"


def serialize_report(report: Report) -> str:
    lines = [
        f"schema: {SCHEMA}",
        f"vertices: {report.vertex_count}",
        f"edges: {report.edge_count}",
        f"faces: {report.face_count}",
        f"genus: {report.genus}",
        f"two_connected: {_bool(report.two_connected)}",
        f"census.max_degree: {report.census.max_degree}",
    ]
    for d, count in report.census.interior_by_degree.items():
        lines.append(f"census.interior.d{d}: {count}")
    for d, count in report.census.exterior_by_degree.items():
        lines.append(f"census.exterior.d{d}: {count}")
    for eta, count in report.histogram.faces_by_gonality.items():
        lines.append(f"histogram.eta{eta}: {count}")
    for verdict in report.identities:
        prefix = f"identity.{verdict.name}"
        if verdict.applicable:
            lines.append(f"{prefix}.residual: {verdict.residual}")
        else:
            lines.append(f"{prefix}.applicable: false")
            lines.append(f"{prefix}.reason: {verdict.note}")
    for rel in report.relations:
        prefix = f"relation.{rel.relation}"
        if rel.applicable:
            lines.append(f"{prefix}.residual: {rel.residual}")
            if rel.notes:
                lines.append(f"{prefix}.notes: {rel.notes}")
        else:
            lines.append(f"{prefix}.applicable: false")
            lines.append(f"{prefix}.reason: {rel.notes}")
    c = report.classes
    lines.append(f"class.two_connected: {_bool(c.two_connected)}")
    lines.append("class.uniform_gonality: "
                 + (str(c.uniform_gonality) if c.uniform_gonality is not None
                    else "none"))
    lines.append(f"class.max_degree: {c.max_degree}")
    lines.append(f"class.gamma1: {_bool(c.gamma1)}")
    lines.append(f"class.gamma2: {_bool(c.gamma2)}")
    lines.append(f"class.gamma3.strict: {_bool(c.gamma3_strict)}")
    lines.append(f"class.gamma3.mixed34: {_bool(c.gamma3_mixed34)}")
    return "\n".join(lines) + "\n"
