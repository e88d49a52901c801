"""Parametric plane-graph families, class-preserving refinements, fuzzing,
and an exhaustive small-instance enumerator.

The parametric families (polygons, grids, prisms, wheels) populate the
graph classes the relation catalog targets.  Two local refinements grow
instances without leaving their class:

  quad split        -- a degree-2 vertex splits an interior 4-gon into two
                       4-gons, (V,E,F) += (1,2,1);
  stellar subdivide -- a degree-3 vertex splits an interior triangle into
                       three, (V,E,F) += (1,3,2).

``fuzz`` applies seeded pseudo-random refinements; ``enumerate_small``
exhaustively streams 2-connected genus-0 rotation systems on up to 8
vertices (up to graph isomorphism) as an independent brute-force oracle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Optional

from .embedding import (
    Dart,
    EmbeddedGraph,
    PlaneGraph,
    build_embedding,
    compute_genus,
    designate_outer_face,
    enumerate_faces,
)
from .errors import (
    BadSize,
    InternalInconsistency,
    NotInteriorQuad,
    NotInteriorTriangle,
    SizeTooLarge,
)

OPPOSITE_FIRST = 0   # split through corners 0 and 2 of the face walk
OPPOSITE_SECOND = 1  # split through corners 1 and 3


# ---------------------------------------------------------------------------
# parametric families
# ---------------------------------------------------------------------------

def gen_polygon(n: int) -> PlaneGraph:
    """The n-cycle; one interior n-gon, all vertices exterior of degree 2."""
    if n < 3:
        raise BadSize(f"polygon needs n >= 3, got {n}")
    rotations = [((i - 1) % n, (i + 1) % n) for i in range(n)]
    g = build_embedding(n, rotations)
    return designate_outer_face(g, enumerate_faces(g))


def gen_grid(m: int, n: int) -> PlaneGraph:
    """m x n grid of unit cells: (m+1)(n+1) vertices, all interior faces 4-gons."""
    if m < 2 or n < 2:
        raise BadSize(f"grid needs m, n >= 2, got {m}x{n}")
    width = m + 1

    def vid(x: int, y: int) -> int:
        return y * width + x

    rotations = []
    for y in range(n + 1):
        for x in range(m + 1):
            rot = []
            if x + 1 <= m:
                rot.append(vid(x + 1, y))
            if y + 1 <= n:
                rot.append(vid(x, y + 1))
            if x - 1 >= 0:
                rot.append(vid(x - 1, y))
            if y - 1 >= 0:
                rot.append(vid(x, y - 1))
            rotations.append(rot)
    g = build_embedding((m + 1) * (n + 1), rotations)
    return designate_outer_face(g, enumerate_faces(g))  # perimeter is longest


def _outer_ring_face(faces, n: int) -> int:
    """Face id of the unique face all of whose dart tails are below n."""
    for fid, cycle in enumerate(faces.faces):
        if cycle and all(d.tail < n for d in cycle):
            return fid
    raise InternalInconsistency("no face lies on the outer ring")


def gen_prism(n: int) -> PlaneGraph:
    """n-gonal prism: outer n-gon, inner n-gon, n spokes; outer ring exterior."""
    if n < 3:
        raise BadSize(f"prism needs n >= 3, got {n}")
    rotations = []
    for i in range(n):
        rotations.append(((i + 1) % n, n + i, (i - 1) % n))
    for i in range(n):
        rotations.append((i, n + (i + 1) % n, n + (i - 1) % n))
    g = build_embedding(2 * n, rotations)
    faces = enumerate_faces(g)
    return designate_outer_face(g, faces, _outer_ring_face(faces, n))


def gen_wheel(n: int) -> PlaneGraph:
    """Wheel: hub n joined to an n-cycle rim; all interior faces triangles."""
    if n < 3:
        raise BadSize(f"wheel needs n >= 3, got {n}")
    rotations = []
    for i in range(n):
        rotations.append(((i + 1) % n, n, (i - 1) % n))
    rotations.append(tuple(range(n)))
    g = build_embedding(n + 1, rotations)
    faces = enumerate_faces(g)
    return designate_outer_face(g, faces, _outer_ring_face(faces, n))


# ---------------------------------------------------------------------------
# refinements
# ---------------------------------------------------------------------------

def _insert_after(rot: list, anchor: int, new: int) -> list:
    i = rot.index(anchor)
    return rot[:i + 1] + [new] + rot[i + 1:]


def _apply_quad_split(rotations: list[list[int]], corners) -> int:
    """Rotation surgery for a quad split through corners[0] and corners[2].

    Returns the new vertex id.  ``corners`` is the face walk (w, x, y, z);
    the new vertex lands after z in the rotation at w and after x at y, so
    exactly the darts of the split face change successor.
    """
    w, x, y, z = corners
    c = len(rotations)
    rotations[w] = _insert_after(rotations[w], z, c)
    rotations[y] = _insert_after(rotations[y], x, c)
    rotations.append([w, y])
    return c


def _apply_stellar(rotations: list[list[int]], corners) -> int:
    """Rotation surgery joining a new vertex to all corners of a triangle."""
    a, b, c = corners
    v = len(rotations)
    rotations[a] = _insert_after(rotations[a], c, v)
    rotations[b] = _insert_after(rotations[b], a, v)
    rotations[c] = _insert_after(rotations[c], b, v)
    rotations.append([b, a, c])
    return v


def _rebuild(pg: PlaneGraph, rotations: list[list[int]]) -> PlaneGraph:
    """Re-embed after interior surgery, keeping the same outer face.

    Interior surgery never touches the outer boundary darts, so the old
    outer face is recovered through any of its darts.
    """
    outer_dart = pg.outer_darts[0]
    g = build_embedding(len(rotations), rotations)
    faces = enumerate_faces(g)
    return designate_outer_face(g, faces, faces.face_of_dart[outer_dart])


def quad_split(pg: PlaneGraph, face: int, corner_pair: int = OPPOSITE_FIRST) -> PlaneGraph:
    """Split an interior 4-gon into two through one pair of opposite corners."""
    if not 0 <= face < pg.face_count or face == pg.outer_face:
        raise NotInteriorQuad(f"face {face} is not an interior face")
    cycle = pg.faces.faces[face]
    corners = tuple(d.tail for d in cycle)
    if len(corners) != 4 or len(set(corners)) != 4:
        raise NotInteriorQuad(
            f"face {face} has boundary {corners}, not a 4-gon with distinct corners")
    if corner_pair not in (OPPOSITE_FIRST, OPPOSITE_SECOND):
        raise NotInteriorQuad(f"corner_pair must be 0 or 1, got {corner_pair}")
    if corner_pair == OPPOSITE_SECOND:
        corners = corners[1:] + corners[:1]
    rotations = [list(r) for r in pg.embedding.rotations]
    _apply_quad_split(rotations, corners)
    return _rebuild(pg, rotations)


def stellar_subdivide(pg: PlaneGraph, face: int) -> PlaneGraph:
    """Replace an interior triangle by three via a new degree-3 vertex."""
    if not 0 <= face < pg.face_count or face == pg.outer_face:
        raise NotInteriorTriangle(f"face {face} is not an interior face")
    cycle = pg.faces.faces[face]
    corners = tuple(d.tail for d in cycle)
    if len(corners) != 3 or len(set(corners)) != 3:
        raise NotInteriorTriangle(
            f"face {face} has boundary {corners}, not a triangle with distinct corners")
    rotations = [list(r) for r in pg.embedding.rotations]
    _apply_stellar(rotations, corners)
    return _rebuild(pg, rotations)


# ---------------------------------------------------------------------------
# fuzzing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FuzzConfig:
    """Deterministic refinement recipe: same config, same graph."""

    seed: int
    operations: int
    family: str


_QUAD_FAMILIES = {
    "C4": lambda: gen_polygon(4),
    "CUBE": lambda: gen_prism(4),
    "GRID": lambda: gen_grid(2, 2),
}
_TRI_FAMILIES = {
    "K4": lambda: gen_wheel(3),
    "WHEEL": lambda: gen_wheel(4),
}

FUZZ_FAMILIES = tuple(_QUAD_FAMILIES) + tuple(_TRI_FAMILIES)


def base_plane_graph(family: str) -> PlaneGraph:
    key = family.upper()
    if key in _QUAD_FAMILIES:
        return _QUAD_FAMILIES[key]()
    if key in _TRI_FAMILIES:
        return _TRI_FAMILIES[key]()
    raise BadSize(f"unknown fuzz family {family!r}; choose from {FUZZ_FAMILIES}")


def fuzz(config: FuzzConfig) -> PlaneGraph:
    """Apply seeded class-preserving refinements to the family's base graph.

    Quad families: the split pair is chosen among (face, opposite-pair)
    choices whose two corners still have degree <= 3, ties resolved toward
    the smallest degree sum, which keeps C4- and GRID-based runs inside
    the degree-4 domain of the quadrangulation relations indefinitely.
    When no capped choice exists any pair is taken; for the CUBE base this
    is unavoidable past 6 splits (exhaustive search: no longer capped
    sequence exists), so long CUBE runs acquire degree-5 vertices.
    Triangle families subdivide a uniformly chosen interior triangle;
    corner degrees grow without bound there by nature of the operation.
    """
    if config.operations < 0:
        raise BadSize(f"operations must be >= 0, got {config.operations}")
    key = config.family.upper()
    base = base_plane_graph(key)
    quad_mode = key in _QUAD_FAMILIES

    rotations = [list(r) for r in base.embedding.rotations]
    outer_dart = base.outer_darts[0] if base.outer_darts else None
    want = 4 if quad_mode else 3
    faces = [tuple(d.tail for d in base.faces.faces[fid])
             for fid in base.interior_face_ids()
             if base.gonality(fid) == want]
    rng = random.Random(config.seed)

    for _ in range(config.operations):
        if quad_mode:
            capped = [(fi, p,
                       len(rotations[corners[p]]) + len(rotations[corners[p + 2]]))
                      for fi, corners in enumerate(faces)
                      for p in (OPPOSITE_FIRST, OPPOSITE_SECOND)
                      if len(rotations[corners[p]]) <= 3
                      and len(rotations[corners[p + 2]]) <= 3]
            if capped:
                best = min(s for _, _, s in capped)
                eligible = [(fi, p) for fi, p, s in capped if s == best]
            else:
                eligible = [(fi, p) for fi in range(len(faces))
                            for p in (OPPOSITE_FIRST, OPPOSITE_SECOND)]
            fi, p = eligible[rng.randrange(len(eligible))]
            corners = faces[fi]
            if p == OPPOSITE_SECOND:
                corners = corners[1:] + corners[:1]
            w, x, y, z = corners
            c = _apply_quad_split(rotations, corners)
            faces[fi] = (w, c, y, z)
            faces.append((w, x, y, c))
        else:
            fi = rng.randrange(len(faces))
            a, b, c = faces[fi]
            v = _apply_stellar(rotations, faces[fi])
            faces[fi] = (a, b, v)
            faces.append((b, c, v))
            faces.append((c, a, v))

    g = build_embedding(len(rotations), rotations)
    face_set = enumerate_faces(g)
    return designate_outer_face(g, face_set, face_set.face_of_dart[outer_dart])


# ---------------------------------------------------------------------------
# exhaustive small-instance oracle
# ---------------------------------------------------------------------------

def enumerate_small(max_vertices: int,
                    gonality_filter: Optional[frozenset] = None
                    ) -> Iterator[PlaneGraph]:
    """Stream every 2-connected plane graph on 3..max_vertices vertices.

    Covers each 2-connected planar graph up to isomorphism, every genus-0
    rotation system of one fixed labeling of it, and every outer-face
    choice of every such rotation system.  With a gonality filter only
    plane graphs whose interior gonalities all lie in the filter are
    emitted.  Capped at 8 vertices; this is a brute-force oracle, not a
    production generator.
    """
    if max_vertices > 8:
        raise SizeTooLarge(
            f"exhaustive enumeration capped at 8 vertices, got {max_vertices}")
    if max_vertices < 3:
        raise BadSize(f"need max_vertices >= 3, got {max_vertices}")
    if gonality_filter is not None:
        gonality_filter = frozenset(gonality_filter)

    for adjacency in _two_connected_planar_adjacencies(max_vertices):
        n = len(adjacency)
        for rotations in _genus0_rotation_systems(adjacency):
            g = EmbeddedGraph(n, rotations)
            faces = enumerate_faces(g)
            if compute_genus(g, faces) != 0:
                raise InternalInconsistency("enumeration produced genus > 0")
            lengths = [faces.boundary_length(i) for i in range(len(faces))]
            for outer in range(len(faces)):
                if gonality_filter is not None:
                    if any(lengths[i] not in gonality_filter
                           for i in range(len(faces)) if i != outer):
                        continue
                yield PlaneGraph(g, faces, outer)


def _two_connected_planar_adjacencies(max_vertices: int):
    """Sorted adjacency lists of 2-connected planar graphs, one per iso class."""
    import networkx as nx

    def adjacency_of(G, n):
        return tuple(tuple(sorted(G[v])) for v in range(n))

    atlas = None
    for n in range(3, max_vertices + 1):
        if n <= 7:
            if atlas is None:
                atlas = nx.graph_atlas_g()
            for G in atlas:
                if (G.number_of_nodes() == n
                        and nx.is_connected(G)
                        and nx.is_biconnected(G)
                        and nx.check_planarity(G, counterexample=False)[0]):
                    yield adjacency_of(G, n)
        else:
            yield from (adjacency_of(G, n) for G in _extend_to_eight())


def _extend_to_eight():
    """All 2-connected planar graphs on 8 vertices, up to isomorphism.

    Deleting any vertex of a 2-connected graph leaves a connected planar
    graph on 7 vertices, so attaching a new vertex to every >= 2 subset of
    every connected planar 7-vertex graph covers all of them; duplicates
    are removed with an isomorphism check inside hash buckets.
    """
    import itertools

    import networkx as nx

    bases = [G for G in nx.graph_atlas_g()
             if G.number_of_nodes() == 7
             and nx.is_connected(G)
             and nx.check_planarity(G, counterexample=False)[0]]

    seen: dict = {}
    for base in bases:
        nodes = list(range(7))
        base_edges = base.number_of_edges()
        for size in range(2, 8):
            if base_edges + size > 18:  # planar bound 3*8 - 6
                continue
            for subset in itertools.combinations(nodes, size):
                G = base.copy()
                G.add_node(7)
                G.add_edges_from((7, u) for u in subset)
                if not nx.is_biconnected(G):
                    continue
                if not nx.check_planarity(G, counterexample=False)[0]:
                    continue
                key = (G.number_of_edges(),
                       tuple(sorted(d for _, d in G.degree())),
                       nx.weisfeiler_lehman_graph_hash(G))
                bucket = seen.setdefault(key, [])
                if any(nx.is_isomorphic(G, H) for H in bucket):
                    continue
                bucket.append(G)
                yield G


def _genus0_rotation_systems(adjacency) -> Iterator[tuple]:
    """Backtrack over all genus-0 rotation systems of a connected graph.

    Edges are inserted in a fixed connectivity-preserving order.  A tree
    edge (new endpoint) can go into any corner; a closing edge must join
    two corners of the same partial face, otherwise the insertion would
    merge faces and raise the genus (genus never decreases under edge
    insertion, so such branches are pruned).  Every genus-0 rotation
    system of the labeled graph is produced exactly once.
    """
    n = len(adjacency)
    order = _insertion_order(adjacency)
    rots: list[list[int]] = [[] for _ in range(n)]

    def next_of(v: int, u: int) -> int:
        rot = rots[v]
        return rot[(rot.index(u) + 1) % len(rot)]

    def trace_face(start: Dart) -> list[Dart]:
        cycle = [start]
        d = Dart(start.head, next_of(start.head, start.tail))
        while d != start:
            cycle.append(d)
            d = Dart(d.head, next_of(d.head, d.tail))
        return cycle

    def place(k: int) -> Iterator[tuple]:
        if k == len(order):
            yield tuple(tuple(r) for r in rots)
            return
        u, v = order[k]
        if not rots[u] and not rots[v]:
            rots[u].append(v)
            rots[v].append(u)
            yield from place(k + 1)
            rots[u].pop()
            rots[v].pop()
        elif not rots[v]:
            for i in range(len(rots[u])):
                rots[u].insert(i + 1, v)
                rots[v].append(u)
                yield from place(k + 1)
                rots[v].pop()
                del rots[u][i + 1]
        else:
            for i in range(len(rots[u])):
                anchor = rots[u][i]
                face = trace_face(Dart(u, next_of(u, anchor)))
                slots = [d.tail for d in face if d.head == v]
                for p in slots:
                    j = rots[v].index(p)
                    rots[u].insert(i + 1, v)
                    rots[v].insert(j + 1, u)
                    yield from place(k + 1)
                    del rots[v][j + 1]
                    del rots[u][i + 1]
        return

    yield from place(0)


def _insertion_order(adjacency) -> list[tuple[int, int]]:
    """Edge order keeping the placed subgraph connected; tree edge (u, v)
    always has u already placed."""
    n = len(adjacency)
    edges = {(min(u, v), max(u, v)) for u in range(n) for v in adjacency[u]}
    placed = [False] * n
    placed[0] = True
    order: list[tuple[int, int]] = []
    while edges:
        closing = sorted(e for e in edges if placed[e[0]] and placed[e[1]])
        if closing:
            for e in closing:
                order.append(e)
                edges.discard(e)
            continue
        tree = min((e for e in edges if placed[e[0]] or placed[e[1]]),
                   default=None)
        if tree is None:
            raise InternalInconsistency("graph is disconnected")
        u, v = tree
        if not placed[u]:
            u, v = v, u
        order.append((u, v))
        placed[v] = True
        edges.discard(tree)
    return order
