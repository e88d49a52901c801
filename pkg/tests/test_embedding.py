import itertools

import pytest

from planecensus import (
    Dart,
    build_embedding,
    check_two_connected,
    compute_genus,
    designate_outer_face,
    enumerate_faces,
    gen_grid,
    gen_wheel,
)
from planecensus.errors import (
    AsymmetricAdjacency,
    BadFaceId,
    Disconnected,
    DuplicateNeighbor,
    InvalidEmbedding,
    LoopEdge,
    NonPlanarEmbedding,
)

TOROIDAL_K4 = [(1, 3, 2), (2, 3, 0), (0, 3, 1), (2, 1, 0)]  # hub rotation reversed


class TestBuildEmbedding:
    def test_triangle(self):
        g = build_embedding(3, [[1, 2], [2, 0], [0, 1]])
        assert g.vertex_count == 3
        assert g.edge_count == 3

    def test_four_cycle(self):
        g = build_embedding(4, [[1, 3], [0, 2], [1, 3], [2, 0]])
        assert g.edge_count == 4
        assert [g.degree(v) for v in range(4)] == [2, 2, 2, 2]

    def test_duplicate_neighbor(self):
        with pytest.raises(DuplicateNeighbor) as info:
            build_embedding(2, [[1], [0, 0]])
        assert info.value.vertex == 1

    def test_loop(self):
        with pytest.raises(LoopEdge):
            build_embedding(2, [[1, 0], [0]])

    def test_asymmetric(self):
        with pytest.raises(AsymmetricAdjacency):
            build_embedding(3, [[1, 2], [0], []])

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            build_embedding(4, [[1], [0], [3], [2]])

    def test_out_of_range(self):
        with pytest.raises(InvalidEmbedding):
            build_embedding(2, [[1], [0, 5]])

    def test_bad_vertex_count(self):
        with pytest.raises(InvalidEmbedding):
            build_embedding(0, [])


class TestEnumerateFaces:
    def test_c4_two_squares(self, c4):
        lengths = sorted(len(f) for f in c4.faces.faces)
        assert lengths == [4, 4]

    def test_k4_four_triangles(self, k4):
        # oracle: direct dart-successor trace of the wheel embedding
        assert sorted(len(f) for f in k4.faces.faces) == [3, 3, 3, 3]

    def test_grid_faces(self, grid_2x2):
        # oracle: hand face-tracing of the 3x3 grid embedding
        assert sorted(len(f) for f in grid_2x2.faces.faces) == [4, 4, 4, 4, 8]

    def test_every_dart_covered_once(self, cube):
        faces = cube.faces
        darts = list(cube.embedding.darts())
        assert sorted(d for f in faces.faces for d in f) == sorted(darts)
        assert sum(len(f) for f in faces.faces) == 2 * cube.edge_count

    def test_single_edge(self):
        g = build_embedding(2, [[1], [0]])
        f = enumerate_faces(g)
        assert len(f) == 1
        assert f.boundary_length(0) == 2

    def test_single_vertex(self):
        g = build_embedding(1, [[]])
        f = enumerate_faces(g)
        assert len(f) == 1
        assert f.faces[0] == ()


class TestComputeGenus:
    def test_c4(self, c4):
        assert compute_genus(c4.embedding, c4.faces) == 0

    def test_planar_k4(self, k4):
        assert compute_genus(k4.embedding, k4.faces) == 0

    def test_toroidal_k4(self):
        g = build_embedding(4, TOROIDAL_K4)
        f = enumerate_faces(g)
        assert len(f) == 2
        assert compute_genus(g, f) == 1


class TestDesignateOuterFace:
    def test_c4_tie_break_smallest_id(self, c4):
        pg = designate_outer_face(c4.embedding, c4.faces)
        assert pg.outer_face == 0

    def test_grid_picks_perimeter(self, grid_2x2):
        assert len(grid_2x2.outer_darts) == 8

    def test_explicit_choice(self, k4):
        pg = designate_outer_face(k4.embedding, k4.faces, 2)
        assert pg.outer_face == 2

    def test_bad_face_id(self, k4):
        with pytest.raises(BadFaceId):
            designate_outer_face(k4.embedding, k4.faces, 99)

    def test_nonplanar_rejected(self):
        g = build_embedding(4, TOROIDAL_K4)
        with pytest.raises(NonPlanarEmbedding):
            designate_outer_face(g, enumerate_faces(g))


class TestTwoConnected:
    def test_triangle(self, c3):
        assert check_two_connected(c3.embedding)

    def test_bowtie(self, bowtie):
        assert not check_two_connected(bowtie.embedding)

    def test_single_edge(self):
        assert not check_two_connected(build_embedding(2, [[1], [0]]))

    def test_path(self):
        assert not check_two_connected(build_embedding(3, [[1], [0, 2], [1]]))

    @pytest.mark.parametrize("pg_name", ["grid", "cube", "wheel"])
    def test_against_deletion_oracle(self, pg_name):
        pg = {"grid": gen_grid(2, 2), "cube": __import__("planecensus").gen_prism(4),
              "wheel": gen_wheel(5)}[pg_name]
        assert check_two_connected(pg.embedding) == _deletion_oracle(pg.embedding)

    def test_bowtie_against_deletion_oracle(self, bowtie):
        assert _deletion_oracle(bowtie.embedding) is False


def _deletion_oracle(g):
    """Independent check: delete each vertex, test connectivity by BFS."""
    n = g.vertex_count
    if n < 3:
        return False
    for gone in range(n):
        start = 0 if gone != 0 else 1
        reached = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for u in g.rotations[v]:
                if u != gone and u not in reached:
                    reached.add(u)
                    frontier.append(u)
        if len(reached) != n - 1:
            return False
    return True


class TestRelabelingInvariance:
    def test_face_multiset_and_genus(self, cube):
        for perm in itertools.islice(itertools.permutations(range(8)), 0, 720, 97):
            rots = [None] * 8
            for v, rot in enumerate(cube.embedding.rotations):
                rots[perm[v]] = [perm[u] for u in rot]
            g = build_embedding(8, rots)
            f = enumerate_faces(g)
            assert compute_genus(g, f) == 0
            assert (sorted(len(x) for x in f.faces)
                    == sorted(len(x) for x in cube.faces.faces))

    def test_rotating_cyclic_lists(self, k4):
        rots = [tuple(rot[i % len(rot):]) + tuple(rot[:i % len(rot)])
                for i, rot in enumerate(k4.embedding.rotations)]
        g = build_embedding(4, rots)
        f = enumerate_faces(g)
        assert compute_genus(g, f) == 0
        assert sorted(len(x) for x in f.faces) == [3, 3, 3, 3]


def test_successor_closure(cube):
    g = cube.embedding
    for start in g.darts():
        d = start
        steps = 0
        while True:
            d = g.face_successor(d)
            steps += 1
            if d == start:
                break
        fid = cube.faces.face_of_dart[start]
        assert steps == cube.faces.boundary_length(fid)


def test_outer_walk_simple_when_two_connected(cube, grid_2x2):
    for pg in (cube, grid_2x2):
        walk = [d.tail for d in pg.outer_darts]
        assert len(walk) == len(set(walk))
