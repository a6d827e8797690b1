"""Closed oriented surfaces as combinatorial maps.

A map on darts 1..2E is a pair of permutations: ``alpha`` swaps the two
darts of each edge and ``sigma`` rotates the darts around each vertex.
Faces are the cycles of ``phi = compose(alpha, sigma)``, i.e. apply
``alpha`` and then ``sigma``.  A dart is based at the vertex of its sigma
cycle and points along its edge; with this convention each face cycle lists
the darts of its boundary in walking order, every dart based where the
previous one ended.

Vertices, edges and faces are identified by the least dart of their cycle.
"""
from __future__ import annotations

from collections.abc import Hashable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .constellation import Constellation
from .perm import Permutation, compose, cycles, inverse

Side = tuple[Hashable, Hashable]  # (name of the vertex the side starts at, edge key)


class InvalidMap(ValueError):
    pass


@dataclass(frozen=True)
class CombinatorialMap:
    alpha: Permutation
    sigma: Permutation

    def __post_init__(self) -> None:
        if self.alpha.degree != self.sigma.degree:
            raise ValueError("alpha and sigma act on different dart sets")

    @property
    def dart_count(self) -> int:
        return self.alpha.degree

    @cached_property
    def phi(self) -> Permutation:
        return compose(self.alpha, self.sigma)

    @cached_property
    def vertices(self) -> list[tuple[int, ...]]:
        return cycles(self.sigma, include_fixed=True)

    @cached_property
    def edges(self) -> list[tuple[int, ...]]:
        return cycles(self.alpha, include_fixed=True)

    @cached_property
    def faces(self) -> list[tuple[int, ...]]:
        return cycles(self.phi, include_fixed=True)

    @cached_property
    def _vertex_index(self) -> dict[int, int]:
        return {x: cyc[0] for cyc in self.vertices for x in cyc}

    @cached_property
    def _face_index(self) -> dict[int, int]:
        return {x: cyc[0] for cyc in self.faces for x in cyc}

    def vertex_of(self, dart: int) -> int:
        return self._vertex_index[dart]

    def face_of(self, dart: int) -> int:
        return self._face_index[dart]

    def edge_of(self, dart: int) -> int:
        return min(dart, self.alpha(dart))

    def face_darts(self, face: int) -> tuple[int, ...]:
        """Boundary darts of the face containing ``face``, starting there."""
        out = [face]
        x = self.phi(face)
        while x != face:
            out.append(x)
            x = self.phi(x)
        return tuple(out)

    @classmethod
    def from_face_permutation(cls, alpha: Permutation, phi: Permutation) -> CombinatorialMap:
        # phi = alpha then sigma, so sigma = alpha then phi
        return cls(alpha, compose(alpha, phi))


@dataclass(frozen=True)
class LabeledMap:
    """A map with a label on every vertex (keyed by vertex identity)."""

    map: CombinatorialMap
    vertex_labels: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        labels = tuple(sorted(dict(self.vertex_labels).items()))
        object.__setattr__(self, "vertex_labels", labels)
        ids = {cyc[0] for cyc in self.map.vertices}
        given = {v for v, _ in labels}
        if given != ids:
            missing = sorted(ids - given)
            extra = sorted(given - ids)
            raise InvalidMap(f"labels must cover each vertex once (missing {missing}, not vertices {extra})")

    @classmethod
    def from_dart_labels(cls, m: CombinatorialMap, labels: Mapping[int, int]) -> LabeledMap:
        """Labels given on arbitrary darts; each vertex must receive exactly one value."""
        by_vertex: dict[int, int] = {}
        for dart, label in labels.items():
            v = m.vertex_of(dart)
            if by_vertex.setdefault(v, label) != label:
                raise InvalidMap(f"vertex {v} labelled both {by_vertex[v]} and {label}")
        return cls(m, tuple(by_vertex.items()))

    @cached_property
    def labels(self) -> dict[int, int]:
        return dict(self.vertex_labels)

    def label(self, dart: int) -> int:
        return self.labels[self.map.vertex_of(dart)]

    def label_set(self) -> set[int]:
        return set(self.labels.values())


@dataclass(frozen=True)
class MapReport:
    valid: bool
    involution: bool
    fixed_point_free: bool
    connected: bool
    vertices: int
    edges: int
    faces: int
    euler_characteristic: int
    messages: tuple[str, ...] = ()

    @property
    def genus(self) -> int | None:
        if not self.valid:
            return None
        return (2 - self.euler_characteristic) // 2


def _connected(m: CombinatorialMap) -> bool:
    seen = {1}
    stack = [1]
    while stack:
        x = stack.pop()
        for y in (m.alpha(x), m.sigma(x)):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == m.dart_count


def validate_map(m: CombinatorialMap) -> MapReport:
    messages = []
    involution = compose(m.alpha, m.alpha).is_identity()
    if not involution:
        messages.append("alpha is not an involution")
    fixed = [x for x in range(1, m.dart_count + 1) if m.alpha(x) == x]
    if fixed:
        messages.append(f"alpha fixes darts {fixed}")
    connected = _connected(m)
    if not connected:
        messages.append("alpha and sigma do not act transitively on darts")
    v, e, f = len(m.vertices), len(m.edges), len(m.faces)
    return MapReport(
        valid=involution and not fixed and connected,
        involution=involution,
        fixed_point_free=not fixed,
        connected=connected,
        vertices=v,
        edges=e,
        faces=f,
        euler_characteristic=v - e + f,
        messages=tuple(messages),
    )


def require_valid_map(m: CombinatorialMap) -> MapReport:
    report = validate_map(m)
    if not report.valid:
        raise InvalidMap("; ".join(report.messages))
    return report


def euler_characteristic_map(m: CombinatorialMap) -> int:
    return require_valid_map(m).euler_characteristic


# -- construction -----------------------------------------------------------


def glue_polygons(polygons: Sequence[Sequence[Side]]) -> tuple[CombinatorialMap, tuple[Hashable, ...]]:
    """Glue oriented polygons into a map.

    Each side is ``(vertex_name, edge_key)``: the side starts at the named
    vertex, and the two sides sharing an edge key are glued.  Darts are
    numbered in reading order.  Returns the map and the vertex name of every
    dart (index ``dart - 1``).
    """
    names: list[Hashable] = []
    keys: list[Hashable] = []
    nxt: list[int] = []
    for poly in polygons:
        if not poly:
            raise InvalidMap("empty polygon")
        base = len(names) + 1
        for i, (name, key) in enumerate(poly):
            names.append(name)
            keys.append(key)
            nxt.append(base + (i + 1) % len(poly))
    partner: dict[Hashable, list[int]] = {}
    for dart, key in enumerate(keys, 1):
        partner.setdefault(key, []).append(dart)
    alpha = [0] * len(keys)
    for key, darts in partner.items():
        if len(darts) != 2:
            raise InvalidMap(f"edge {key!r} used {len(darts)} times, expected 2")
        a, b = darts
        alpha[a - 1], alpha[b - 1] = b, a
    m = CombinatorialMap.from_face_permutation(Permutation(tuple(alpha)), Permutation(tuple(nxt)))
    for cyc in m.vertices:
        seen = {names[x - 1] for x in cyc}
        if len(seen) > 1:
            raise InvalidMap(f"gluing identifies distinct vertex names {sorted(map(str, seen))}")
    return m, tuple(names)


def from_polygons(
    polygons: Sequence[Sequence[Side]], labels: Mapping[Hashable, int] | None = None
) -> CombinatorialMap | LabeledMap:
    m, names = glue_polygons(polygons)
    if labels is None:
        return m
    return LabeledMap.from_dart_labels(m, {d: labels[n] for d, n in enumerate(names, 1)})


def from_vertex_faces(
    faces: Sequence[Sequence[Hashable]], labels: Mapping[Hashable, int] | None = None
) -> CombinatorialMap | LabeledMap:
    """Faces as cyclic vertex sequences of a simple complex (each unordered
    vertex pair is one edge)."""
    polys = [[(f[i], frozenset((f[i], f[(i + 1) % len(f)]))) for i in range(len(f))] for f in faces]
    return from_polygons(polys, labels)


# -- barycentric subdivision and dessins -----------------------------------


def barycentric_subdivide(m: CombinatorialMap) -> LabeledMap:
    """Split every k-gon into 2k triangles around a centre.

    Original vertices get label 0, edge midpoints 1 and face centres 2.
    Per dart x of a face: triangle (v, mid, centre) and triangle
    (mid, next v, centre), which carry opposite label orientations.
    """
    require_valid_map(m)
    polygons = []
    for face in m.faces:
        c = ("f", face[0])
        k = len(face)
        for i, x in enumerate(face):
            x_next = face[(i + 1) % k]
            v = ("v", m.vertex_of(x))
            mid = ("e", m.edge_of(x))
            polygons.append([(v, ("h", x)), (mid, ("mc", x)), (c, ("vc", x))])
            polygons.append(
                [(mid, ("h", m.alpha(x))), (("v", m.vertex_of(x_next)), ("vc", x_next)), (c, ("mc", x))]
            )
    kinds = {"v": 0, "e": 1, "f": 2}
    sub, names = glue_polygons(polygons)
    return LabeledMap.from_dart_labels(sub, {d: kinds[n[0]] for d, n in enumerate(names, 1)})


def _induced(m: CombinatorialMap, keep: set[int], labels: Mapping[int, int]) -> LabeledMap:
    """Restrict to a union of edges; rotations skip removed darts; darts are
    renumbered in increasing order."""
    order = sorted(keep)
    new = {old: i for i, old in enumerate(order, 1)}
    alpha, sigma = [], []
    for x in order:
        alpha.append(new[m.alpha(x)])
        y = m.sigma(x)
        while y not in keep:
            y = m.sigma(y)
        sigma.append(new[y])
    sub = CombinatorialMap(Permutation(tuple(alpha)), Permutation(tuple(sigma)))
    return LabeledMap.from_dart_labels(sub, {new[x]: labels[x] for x in order})


def _dart_labels(lm: LabeledMap) -> dict[int, int]:
    return {x: lm.label(x) for x in range(1, lm.map.dart_count + 1)}


def extract_dessin(lm: LabeledMap) -> LabeledMap:
    """Keep only the edges joining a 0-vertex to a 1-vertex."""
    if not lm.label_set() <= {0, 1, 2}:
        raise InvalidMap(f"labels {sorted(lm.label_set())} are not barycentric types")
    m = lm.map
    labels = _dart_labels(lm)
    keep = {x for x in range(1, m.dart_count + 1) if {labels[x], labels[m.alpha(x)]} == {0, 1}}
    if not keep:
        raise InvalidMap("no edge joins a 0-vertex to a 1-vertex")
    return _induced(m, keep, labels)


def dessin_constellation(dessin: LabeledMap) -> Constellation:
    """Belyi monodromy (s0, s1, s_inf) with one sheet per dessin edge.

    Sheet j is the edge holding the j-th smallest dart at a 0-vertex; s0 and
    s1 turn edges around 0- and 1-vertices by the rotation, and s_inf closes
    the product to the identity.
    """
    m = dessin.map
    report = validate_map(m)
    if not report.valid:
        raise InvalidMap("dessin is not a valid connected map: " + "; ".join(report.messages))
    labels = _dart_labels(dessin)
    for x in range(1, m.dart_count + 1):
        if {labels[x], labels[m.alpha(x)]} != {0, 1}:
            raise InvalidMap(f"edge at dart {x} does not join a 0-vertex to a 1-vertex")
    zero_darts = [x for x in range(1, m.dart_count + 1) if labels[x] == 0]
    sheet = {}
    for j, x in enumerate(zero_darts, 1):
        sheet[x] = sheet[m.alpha(x)] = j
    d = len(zero_darts)
    s0, s1 = [0] * d, [0] * d
    for x in range(1, m.dart_count + 1):
        target = s0 if labels[x] == 0 else s1
        target[sheet[x] - 1] = sheet[m.sigma(x)]
    p0, p1 = Permutation(tuple(s0)), Permutation(tuple(s1))
    return Constellation(d, (p0, p1, inverse(compose(p0, p1))))


def belyi_constellation(m: CombinatorialMap) -> Constellation:
    """Subdivide, extract the dessin and read off its monodromy."""
    return dessin_constellation(extract_dessin(barycentric_subdivide(m)))


# -- flips and isomorphism ---------------------------------------------------


def edge_flip(m: CombinatorialMap, dart: int) -> CombinatorialMap:
    """Swap the diagonal of the square formed by the two triangles at ``dart``'s edge.

    The edge keeps its two darts; only the face permutation is rewired.
    """
    require_valid_map(m)
    if not 1 <= dart <= m.dart_count:
        raise IndexError(f"dart {dart} outside 1..{m.dart_count}")
    x, y = dart, m.alpha(dart)
    fx, fy = m.face_darts(x), m.face_darts(y)
    if m.face_of(x) == m.face_of(y):
        raise InvalidMap(f"edge at dart {dart} has the same face on both sides")
    if len(fx) != 3 or len(fy) != 3:
        raise InvalidMap(f"edge at dart {dart} does not separate two triangles")
    _, a1, a2 = fx
    _, b1, b2 = fy
    phi = list(m.phi.images)
    for u, v in ((a2, b1), (b1, x), (x, a2), (b2, a1), (a1, y), (y, b2)):
        phi[u - 1] = v
    return CombinatorialMap.from_face_permutation(m.alpha, Permutation(tuple(phi)))


def flippable_darts(m: CombinatorialMap) -> list[int]:
    """One dart per edge whose two sides are distinct triangles."""
    out = []
    for x, y in m.edges:
        if m.face_of(x) != m.face_of(y) and len(m.face_darts(x)) == 3 and len(m.face_darts(y)) == 3:
            out.append(x)
    return out


def canonical_code(m: CombinatorialMap) -> tuple[int, ...]:
    """Relabelling-invariant code of a connected map: the least breadth-first
    numbering over all starting darts."""
    n = m.dart_count
    best: tuple[int, ...] | None = None
    for start in range(1, n + 1):
        number = {start: 1}
        order = [start]
        i = 0
        while i < len(order):
            x = order[i]
            i += 1
            for y in (m.alpha(x), m.sigma(x)):
                if y not in number:
                    number[y] = len(order) + 1
                    order.append(y)
        if len(order) != n:
            raise InvalidMap("canonical_code needs a connected map")
        code = tuple(number[m.alpha(x)] for x in order) + tuple(number[m.sigma(x)] for x in order)
        if best is None or code < best:
            best = code
    assert best is not None
    return best


def is_isomorphic(m1: CombinatorialMap, m2: CombinatorialMap) -> bool:
    return m1.dart_count == m2.dart_count and canonical_code(m1) == canonical_code(m2)
