"""Combinatorial embeddings of simple connected graphs.

A plane (or, more generally, surface) embedding is encoded as a rotation
system: a cyclic order of neighbors at every vertex.  Faces are orbits of
darts (directed edge sides) under the fixed successor rule

    successor of (u, v) = (v, w)   where w immediately follows u
                                   in the cyclic rotation at v.

With that rule the number of faces is determined combinatorially and the
genus of the embedding is (2 - V + E - F) / 2; genus 0 means the rotation
system describes a plane drawing.  The mirror convention would produce the
same face multiset; this one is fixed for reproducibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Optional, Sequence

from .errors import (
    AsymmetricAdjacency,
    BadFaceId,
    Disconnected,
    DuplicateNeighbor,
    InternalInconsistency,
    InvalidEmbedding,
    LoopEdge,
    NonPlanarEmbedding,
)


class Dart(NamedTuple):
    """One side of an edge, traversed tail -> head."""

    tail: int
    head: int

    def reverse(self) -> "Dart":
        return Dart(self.head, self.tail)


@dataclass(frozen=True)
class EmbeddedGraph:
    """A simple connected graph with a cyclic neighbor order at each vertex.

    Instances are immutable; use :func:`build_embedding` to construct a
    validated one.
    """

    vertex_count: int
    rotations: tuple[tuple[int, ...], ...]

    @cached_property
    def edge_count(self) -> int:
        return sum(len(r) for r in self.rotations) // 2

    @cached_property
    def _next_neighbor(self) -> tuple[dict[int, int], ...]:
        # _next_neighbor[v][u] = neighbor following u in the rotation at v
        tables = []
        for rot in self.rotations:
            d = len(rot)
            tables.append({rot[i]: rot[(i + 1) % d] for i in range(d)})
        return tuple(tables)

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    @cached_property
    def max_degree(self) -> int:
        return max((len(r) for r in self.rotations), default=0)

    def darts(self) -> Iterator[Dart]:
        for u, rot in enumerate(self.rotations):
            for v in rot:
                yield Dart(u, v)

    def face_successor(self, d: Dart) -> Dart:
        return Dart(d.head, self._next_neighbor[d.head][d.tail])


@dataclass(frozen=True)
class FaceSet:
    """Partition of all darts into face boundary cycles."""

    faces: tuple[tuple[Dart, ...], ...]
    face_of_dart: dict

    def __len__(self) -> int:
        return len(self.faces)

    def boundary_length(self, face_id: int) -> int:
        return len(self.faces[face_id])


@dataclass(frozen=True)
class PlaneGraph:
    """A genus-0 embedded graph with one face designated exterior."""

    embedding: EmbeddedGraph
    faces: FaceSet
    outer_face: int

    @property
    def vertex_count(self) -> int:
        return self.embedding.vertex_count

    @property
    def edge_count(self) -> int:
        return self.embedding.edge_count

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @property
    def outer_darts(self) -> tuple[Dart, ...]:
        return self.faces.faces[self.outer_face]

    @cached_property
    def outer_vertices(self) -> frozenset:
        walk = self.outer_darts
        if not walk:
            # edgeless graph: the single vertex lies on the outer face
            return frozenset(range(self.vertex_count))
        return frozenset(d.tail for d in walk)

    def interior_face_ids(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.faces)) if i != self.outer_face)

    def gonality(self, face_id: int) -> int:
        return self.faces.boundary_length(face_id)


def build_embedding(vertex_count: int,
                    rotations: Sequence[Sequence[int]]) -> EmbeddedGraph:
    """Validate a rotation system and return the embedded graph.

    Raises LoopEdge, DuplicateNeighbor, AsymmetricAdjacency or Disconnected
    (all subclasses of InvalidEmbedding) naming the offending vertex.
    """
    if vertex_count < 1:
        raise InvalidEmbedding(f"vertex_count must be >= 1, got {vertex_count}")
    if len(rotations) != vertex_count:
        raise InvalidEmbedding(
            f"expected {vertex_count} rotation lists, got {len(rotations)}")

    neighbor_sets = []
    for v, rot in enumerate(rotations):
        seen = set()
        for u in rot:
            if not 0 <= u < vertex_count:
                raise InvalidEmbedding(
                    f"vertex {v} lists out-of-range neighbor {u}", vertex=v)
            if u == v:
                raise LoopEdge(f"vertex {v} lists itself as a neighbor", vertex=v)
            if u in seen:
                raise DuplicateNeighbor(
                    f"vertex {v} lists neighbor {u} twice", vertex=v)
            seen.add(u)
        neighbor_sets.append(seen)

    for v, nbrs in enumerate(neighbor_sets):
        for u in nbrs:
            if v not in neighbor_sets[u]:
                raise AsymmetricAdjacency(
                    f"vertex {v} lists {u} but {u} does not list {v}", vertex=u)

    # connectivity (BFS from 0)
    reached = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for u in neighbor_sets[v]:
            if u not in reached:
                reached.add(u)
                frontier.append(u)
    if len(reached) != vertex_count:
        missing = min(set(range(vertex_count)) - reached)
        raise Disconnected(
            f"graph is disconnected; vertex {missing} unreachable from 0",
            vertex=missing)

    return EmbeddedGraph(vertex_count, tuple(tuple(r) for r in rotations))


def enumerate_faces(g: EmbeddedGraph) -> FaceSet:
    """Trace every face boundary cycle of the embedding.

    Each dart belongs to exactly one face and the boundary lengths sum
    to 2E.  An edgeless single-vertex graph gets one empty face.
    """
    succ = g._next_neighbor
    face_of: dict = {}
    faces: list[tuple[Dart, ...]] = []
    for start in g.darts():
        if start in face_of:
            continue
        fid = len(faces)
        cycle = []
        d = start
        while True:
            face_of[d] = fid
            cycle.append(d)
            d = Dart(d.head, succ[d.head][d.tail])
            if d == start:
                break
        faces.append(tuple(cycle))
    if not faces:
        faces.append(())
    return FaceSet(tuple(faces), face_of)


def compute_genus(g: EmbeddedGraph, f: FaceSet) -> int:
    """Genus of the embedding: (2 - V + E - F) / 2, always a whole number >= 0."""
    doubled = 2 - g.vertex_count + g.edge_count - len(f)
    if doubled < 0 or doubled % 2:
        raise InternalInconsistency(
            f"2 - V + E - F = {doubled} is not a non-negative even number; "
            "face tracing is broken")
    return doubled // 2


def designate_outer_face(g: EmbeddedGraph, f: FaceSet,
                         choice: Optional[int] = None) -> PlaneGraph:
    """Pick the exterior face of a genus-0 embedding.

    Without an explicit choice the face of maximum boundary length wins,
    ties broken by smallest face id.
    """
    if compute_genus(g, f) != 0:
        raise NonPlanarEmbedding(
            f"embedding has genus {compute_genus(g, f)}; no plane drawing exists")
    if choice is not None:
        if not 0 <= choice < len(f):
            raise BadFaceId(f"face id {choice} outside 0..{len(f) - 1}")
        outer = choice
    else:
        outer = max(range(len(f)), key=lambda i: (f.boundary_length(i), -i))
    return PlaneGraph(g, f, outer)


def check_two_connected(g: EmbeddedGraph) -> bool:
    """True iff V >= 3 and the graph has no cut vertex (DFS low-point test)."""
    n = g.vertex_count
    if n < 3:
        return False
    adj = g.rotations
    depth = [-1] * n
    low = [0] * n
    parent = [-1] * n
    # iterative DFS from 0
    depth[0] = 0
    low[0] = 0
    root_children = 0
    stack = [(0, iter(adj[0]))]
    while stack:
        v, it = stack[-1]
        advanced = False
        for u in it:
            if depth[u] == -1:
                depth[u] = depth[v] + 1
                low[u] = depth[u]
                parent[u] = v
                if v == 0:
                    root_children += 1
                stack.append((u, iter(adj[u])))
                advanced = True
                break
            elif u != parent[v]:
                low[v] = min(low[v], depth[u])
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if p != 0 and low[v] >= depth[p]:
                    return False  # p is a cut vertex
    if root_children > 1:
        return False
    return True


def plane_graph_from_rotations(rotations: Sequence[Sequence[int]],
                               outer: Optional[int] = None) -> PlaneGraph:
    """Convenience: validate, trace faces and designate the outer face."""
    g = build_embedding(len(rotations), rotations)
    return designate_outer_face(g, enumerate_faces(g), outer)
