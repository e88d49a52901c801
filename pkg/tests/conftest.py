import pytest

from planecensus import (
    gen_grid,
    gen_polygon,
    gen_prism,
    gen_wheel,
    plane_graph_from_rotations,
)

BOWTIE_ROTATIONS = [(1, 2), (2, 0), (0, 1, 3, 4), (4, 2), (2, 3)]
SQUARE_DIAGONAL_ROTATIONS = [(1, 2, 3), (2, 0), (3, 0, 1), (0, 2)]


@pytest.fixture
def c3():
    return gen_polygon(3)


@pytest.fixture
def c4():
    return gen_polygon(4)


@pytest.fixture
def k4():
    return gen_wheel(3)


@pytest.fixture
def w4():
    return gen_wheel(4)


@pytest.fixture
def cube():
    return gen_prism(4)


@pytest.fixture
def prism3():
    return gen_prism(3)


@pytest.fixture
def grid_2x2():
    # the 3x3-vertex grid: 9 vertices, 12 edges, four interior 4-gons
    return gen_grid(2, 2)


@pytest.fixture
def bowtie():
    # two triangles glued at vertex 2; the classic cut-vertex fixture
    return plane_graph_from_rotations(BOWTIE_ROTATIONS)


@pytest.fixture
def square_diagonal():
    return plane_graph_from_rotations(SQUARE_DIAGONAL_ROTATIONS)
