import itertools

import networkx as nx
import pytest

from branchcover.gallery import cube_quadrangulation, octahedron, torus_grid
from branchcover.quads import (
    Matching,
    MatchingError,
    dual_graph,
    dual_matching,
    merge_to_hexagons,
    tutte_barrier,
    validate_hexagonation,
    validate_quadrangulation,
)
from branchcover.surface import InvalidMap, LabeledMap, from_vertex_faces, validate_map


def brute_perfect_matching_exists(g):
    """Exhaustive search over edge subsets; fine for a dozen edges."""
    nodes = set(g.nodes)
    if len(nodes) % 2:
        return False
    edges = list(g.edges)
    for combo in itertools.combinations(edges, len(nodes) // 2):
        if len({x for e in combo for x in e}) == len(nodes):
            return True
    return False


def assert_perfect(g, matching):
    assert matching.covered == frozenset(g.nodes)
    assert all(g.has_edge(a, b) for a, b in matching.pairs)


@pytest.mark.parametrize("lm, q, v, chi", [(torus_grid(), 4, 4, 0), (cube_quadrangulation(), 6, 8, 2)])
def test_quad_reports(lm, q, v, chi):
    r = validate_quadrangulation(lm)
    assert r.valid and (r.quads, r.vertices, r.euler_characteristic) == (q, v, chi)
    assert r.identity_holds


def test_non_alternating_quad_rejected():
    faces = [(1, 2, 3, 4), (4, 3, 2, 1)]
    lm = from_vertex_faces(faces, labels={1: 0, 2: 0, 3: 1, 4: 1})
    r = validate_quadrangulation(lm)
    assert validate_map(lm.map).valid and not r.valid
    assert any("alternate" in msg for msg in r.messages)
    with pytest.raises(InvalidMap):
        dual_matching(lm)


def test_triangles_are_not_quads():
    m = octahedron()
    lm = LabeledMap.from_dart_labels(m, {x: 0 for x in range(1, m.dart_count + 1)})
    assert not validate_quadrangulation(lm).valid


@pytest.mark.parametrize("lm, size", [(torus_grid(), 2), (cube_quadrangulation(), 3)])
def test_dual_matching_is_perfect(lm, size):
    g = dual_graph(lm.map)
    assert brute_perfect_matching_exists(g)
    matching = dual_matching(lm)
    assert len(matching.pairs) == size
    assert_perfect(g, matching)
    assert dual_matching(lm) == matching


def test_larger_grid_matching():
    lm = torus_grid(4)
    g = dual_graph(lm.map)
    assert g.number_of_nodes() == 16
    assert_perfect(g, dual_matching(lm))


def test_odd_face_count_fails_with_certificate():
    # one square folded onto the sphere: a path 1 - 2 - 3 seen from both sides
    lm = from_vertex_faces([(1, 2, 3, 2)], labels={1: 0, 2: 1, 3: 0})
    r = validate_quadrangulation(lm)
    assert r.valid and r.quads == 1 and r.euler_characteristic == 2
    with pytest.raises(MatchingError) as info:
        dual_matching(lm)
    assert "odd" in info.value.reason
    assert len(info.value.odd_components) > len(info.value.barrier)


def test_tutte_barrier_on_path():
    barrier, odd = tutte_barrier(nx.path_graph(3))
    assert barrier == {1}
    assert len(odd) == 2


def test_tutte_barrier_on_star():
    g = nx.star_graph(3)
    barrier, odd = tutte_barrier(g)
    assert barrier == {0}
    assert sorted(map(sorted, odd)) == [[1], [2], [3]]
    assert len(odd) - len(barrier) == 2


def test_tutte_barrier_empty_when_perfect():
    barrier, odd = tutte_barrier(nx.cycle_graph(6))
    assert barrier == set() and odd == []


def test_matching_error_carries_fields():
    err = MatchingError("none", {3, 1}, [{5, 4}])
    assert err.barrier == (1, 3) and err.odd_components == ((4, 5),)
    assert isinstance(err, ValueError)


def test_matching_normalizes_pairs():
    m = Matching(((9, 1), (5, 3)))
    assert m.pairs == ((1, 9), (3, 5))
    assert m.covered == frozenset({1, 3, 5, 9})


@pytest.mark.parametrize("lm, h, v, chi", [(torus_grid(), 2, 4, 0), (cube_quadrangulation(), 3, 8, 2)])
def test_merge_to_hexagons(lm, h, v, chi):
    merged = merge_to_hexagons(lm, dual_matching(lm))
    r = validate_hexagonation(merged)
    assert r.valid, r.messages
    assert (r.quads, r.vertices, r.euler_characteristic) == (h, v, chi)
    assert 2 * h == v - chi
    assert sorted(merged.labels.values()) == sorted(lm.labels.values())


def test_merge_needs_perfect_matching():
    lm = torus_grid()
    partial = Matching(dual_matching(lm).pairs[:1])
    with pytest.raises(InvalidMap):
        merge_to_hexagons(lm, partial)


def test_even_face_count_without_perfect_matching(monkeypatch):
    import branchcover.quads as quads

    monkeypatch.setattr(quads, "dual_graph", lambda m: nx.star_graph(3))
    with pytest.raises(MatchingError) as info:
        dual_matching(torus_grid())
    assert info.value.barrier == (0,)
    assert info.value.odd_components == ((1,), (2,), (3,))
