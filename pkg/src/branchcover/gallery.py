"""Small named surfaces used as a golden corpus."""
from __future__ import annotations

from .surface import CombinatorialMap, LabeledMap, from_polygons, from_vertex_faces


def tetrahedron() -> CombinatorialMap:
    return from_vertex_faces([(1, 2, 3), (1, 3, 4), (1, 4, 2), (2, 4, 3)])


def octahedron() -> CombinatorialMap:
    # poles 1 (top) and 6 (bottom), equator 2 3 4 5
    top = [(1, a, b) for a, b in ((2, 3), (3, 4), (4, 5), (5, 2))]
    bottom = [(6, b, a) for a, b in ((2, 3), (3, 4), (4, 5), (5, 2))]
    return from_vertex_faces(top + bottom)


def two_triangle_sphere() -> CombinatorialMap:
    return from_vertex_faces([(1, 2, 3), (1, 3, 2)])


def one_vertex_torus() -> CombinatorialMap:
    """Square with opposite sides glued, cut along a diagonal."""
    v = "v"
    return from_polygons([
        [(v, "a"), (v, "b"), (v, "c")],
        [(v, "c"), (v, "a"), (v, "b")],
    ])


def cube_faces() -> list[tuple[int, ...]]:
    # vertices 0..7 by binary coordinates (x, y, z) = bits
    return [
        (0, 2, 3, 1), (4, 5, 7, 6),  # z = 0, z = 1
        (0, 1, 5, 4), (2, 6, 7, 3),  # y = 0, y = 1
        (0, 4, 6, 2), (1, 3, 7, 5),  # x = 0, x = 1
    ]


def cube(*, checkerboard: bool = True) -> CombinatorialMap | LabeledMap:
    labels = {v: bin(v).count("1") % 2 for v in range(8)} if checkerboard else None
    return from_vertex_faces(cube_faces(), labels)


def cube_quadrangulation() -> LabeledMap:
    lm = cube()
    assert isinstance(lm, LabeledMap)
    return lm


def torus_grid(n: int = 2) -> LabeledMap:
    """n x n square grid on the torus with checkerboard labels (n even)."""
    if n < 2 or n % 2:
        raise ValueError("checkerboard torus grid needs an even n >= 2")
    polys = []
    for i in range(n):
        for j in range(n):
            i1, j1 = (i + 1) % n, (j + 1) % n
            polys.append([
                ((i, j), ("h", i, j)),
                ((i1, j), ("v", i1, j)),
                ((i1, j1), ("h", i, j1)),
                ((i, j1), ("v", i, j)),
            ])
    labels = {(i, j): (i + j) % 2 for i in range(n) for j in range(n)}
    lm = from_polygons(polys, labels)
    assert isinstance(lm, LabeledMap)
    return lm


def golden_triangulations() -> dict[str, CombinatorialMap]:
    return {
        "tetrahedron": tetrahedron(),
        "octahedron": octahedron(),
        "two_triangle_sphere": two_triangle_sphere(),
        "one_vertex_torus": one_vertex_torus(),
    }
