"""Line-oriented embedding documents.

Grammar (ASCII, LF line endings, ``#`` comment lines ignored)::

    pg 1                  header with format version
    N                     vertex count
    i: n1 n2 ... nk       one line per vertex, neighbors in cyclic order
    outer: u v            optional; the face containing dart (u, v) is exterior

Without an ``outer`` directive the default rule applies (longest boundary,
smallest face id on ties).  Serialization names the outer face by the
first dart of its boundary walk, so parse(serialize(pg)) reproduces the
rotations and the outer-face choice exactly.
"""

from __future__ import annotations

from .embedding import (
    Dart,
    PlaneGraph,
    build_embedding,
    designate_outer_face,
    enumerate_faces,
)
from .errors import DocumentSyntaxError, InvalidEmbedding

FORMAT_HEADER = "pg 1"


def serialize_embedding(pg: PlaneGraph) -> str:
    lines = [FORMAT_HEADER, str(pg.vertex_count)]
    for v, rot in enumerate(pg.embedding.rotations):
        lines.append(f"{v}: " + " ".join(str(u) for u in rot))
    if pg.outer_darts:
        d = pg.outer_darts[0]
        lines.append(f"outer: {d.tail} {d.head}")
    return "\n".join(lines) + "\n"


def parse_embedding(text: str) -> PlaneGraph:
    """Parse a document into a validated plane graph.

    Syntax problems raise DocumentSyntaxError with the line number;
    embedding validation errors are re-raised with the offending line
    appended when it is known.
    """
    numbered = [(i + 1, line.strip()) for i, line in enumerate(text.splitlines())]
    lines = [(no, line) for no, line in numbered
             if line and not line.startswith("#")]
    if not lines:
        raise DocumentSyntaxError("empty document")

    pos = 0

    def take():
        nonlocal pos
        if pos >= len(lines):
            raise DocumentSyntaxError("unexpected end of document",
                                      line=lines[-1][0])
        item = lines[pos]
        pos += 1
        return item

    no, header = take()
    if header != FORMAT_HEADER:
        raise DocumentSyntaxError(f"expected header {FORMAT_HEADER!r}, got "
                                  f"{header!r}", line=no)
    no, count_text = take()
    try:
        vertex_count = int(count_text)
    except ValueError:
        raise DocumentSyntaxError(f"expected vertex count, got {count_text!r}",
                                  line=no) from None
    if vertex_count < 1:
        raise DocumentSyntaxError(f"vertex count must be >= 1, got {vertex_count}",
                                  line=no)

    rotations = []
    line_of_vertex = {}
    for v in range(vertex_count):
        no, line = take()
        head, _, rest = line.partition(":")
        try:
            index = int(head)
        except ValueError:
            raise DocumentSyntaxError(
                f"expected rotation line 'v: ...', got {line!r}", line=no) from None
        if index != v:
            raise DocumentSyntaxError(
                f"expected rotation for vertex {v}, got vertex {index}", line=no)
        try:
            rotations.append([int(tok) for tok in rest.split()])
        except ValueError:
            raise DocumentSyntaxError(
                f"non-integer neighbor in {line!r}", line=no) from None
        line_of_vertex[v] = no

    outer_dart = None
    if pos < len(lines):
        no, line = take()
        head, _, rest = line.partition(":")
        if head != "outer":
            raise DocumentSyntaxError(f"unexpected trailing line {line!r}", line=no)
        parts = rest.split()
        if len(parts) != 2:
            raise DocumentSyntaxError("outer directive needs two vertex ids",
                                      line=no)
        try:
            outer_dart = Dart(int(parts[0]), int(parts[1]))
        except ValueError:
            raise DocumentSyntaxError("outer directive needs integer vertex ids",
                                      line=no) from None
        if pos < len(lines):
            raise DocumentSyntaxError(f"unexpected trailing line {lines[pos][1]!r}",
                                      line=lines[pos][0])

    try:
        g = build_embedding(vertex_count, rotations)
    except InvalidEmbedding as exc:
        where = line_of_vertex.get(exc.vertex)
        if where is not None:
            raise type(exc)(f"{exc} (line {where})", vertex=exc.vertex) from None
        raise

    faces = enumerate_faces(g)
    if outer_dart is None:
        return designate_outer_face(g, faces)
    if outer_dart not in faces.face_of_dart:
        raise DocumentSyntaxError(
            f"outer directive names missing dart ({outer_dart.tail}, "
            f"{outer_dart.head})")
    return designate_outer_face(g, faces, faces.face_of_dart[outer_dart])
