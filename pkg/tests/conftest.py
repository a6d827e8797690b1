from __future__ import annotations

import random

import pytest

from branchcover.constellation import Constellation
from branchcover.perm import Permutation, inverse, orbit_closure, product
from branchcover.surface import CombinatorialMap, glue_polygons, validate_map

ACCEPTANCE_RESULTS: list[str] = []


@pytest.fixture
def acceptance():
    def record(number: int, ok: bool, detail: str) -> None:
        ACCEPTANCE_RESULTS.append(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)


def random_permutation(rng: random.Random, d: int) -> Permutation:
    images = list(range(1, d + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


def random_identity_tuple(rng: random.Random, d: int, n: int) -> Constellation:
    """n permutations with identity product (not necessarily transitive)."""
    if n == 0:
        return Constellation(d, ())
    head = [random_permutation(rng, d) for _ in range(n - 1)]
    return Constellation(d, tuple(head) + (inverse(product(head, d)),))


def random_valid_constellation(rng: random.Random, max_degree: int = 6) -> Constellation:
    while True:
        d = rng.randint(1, max_degree)
        c = random_identity_tuple(rng, d, rng.randint(0, 6))
        if len(orbit_closure(c.perms, 1)) == d:
            return c


def random_triangulation(rng: random.Random, triangles: int) -> CombinatorialMap:
    """Random orientable gluing of triangle sides, retried until connected."""
    while True:
        keys = list(range(3 * triangles // 2)) * 2
        rng.shuffle(keys)
        polys = [[(None, keys[3 * t + i]) for i in range(3)] for t in range(triangles)]
        m, _ = glue_polygons(polys)
        if validate_map(m).valid:
            return m
