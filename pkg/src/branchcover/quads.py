"""Bicoloured quadrangulations, dual matchings and hexagon merging."""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

import networkx as nx

from .perm import Permutation
from .surface import CombinatorialMap, InvalidMap, LabeledMap, validate_map


@dataclass(frozen=True)
class QuadReport:
    valid: bool
    quads: int
    vertices: int
    euler_characteristic: int
    messages: tuple[str, ...] = ()

    @property
    def identity_holds(self) -> bool:
        return self.quads == self.vertices - self.euler_characteristic


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]
    covered: frozenset[int] = field(default=frozenset())

    def __post_init__(self) -> None:
        pairs = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "covered", frozenset(x for p in pairs for x in p))


class MatchingError(ValueError):
    """No perfect dual matching; carries a Tutte-style certificate.

    ``barrier`` is a face set whose removal leaves ``odd_components`` with
    more odd components than ``len(barrier)``.
    """

    def __init__(self, reason: str, barrier: Iterable[int] = (), odd_components: Iterable[Iterable[int]] = ()):
        super().__init__(reason)
        self.reason = reason
        self.barrier = tuple(sorted(barrier))
        self.odd_components = tuple(tuple(sorted(c)) for c in odd_components)


def _alternating_faces(lm: LabeledMap, size: int, kind: str) -> tuple[bool, list[str]]:
    m = lm.map
    messages = []
    for face in m.faces:
        if len(face) != size:
            messages.append(f"face {face[0]} has {len(face)} sides, expected {size}")
            continue
        labels = [lm.label(x) for x in face]
        if any(labels[i] == labels[(i + 1) % size] for i in range(size)) or set(labels) != {0, 1}:
            messages.append(f"face {face[0]} labels {labels} do not alternate 0,1")
    if lm.label_set() - {0, 1}:
        messages.append(f"{kind} labels must lie in {{0, 1}}, found {sorted(lm.label_set())}")
    return not messages, messages


def validate_quadrangulation(lm: LabeledMap) -> QuadReport:
    base = validate_map(lm.map)
    ok, messages = _alternating_faces(lm, 4, "quadrangulation")
    messages = list(base.messages) + messages
    return QuadReport(
        valid=base.valid and ok,
        quads=base.faces,
        vertices=base.vertices,
        euler_characteristic=base.euler_characteristic,
        messages=tuple(messages),
    )


def validate_hexagonation(lm: LabeledMap) -> QuadReport:
    """Same checks for six-sided faces; ``quads`` then counts hexagons."""
    base = validate_map(lm.map)
    ok, messages = _alternating_faces(lm, 6, "hexagon map")
    return QuadReport(
        valid=base.valid and ok,
        quads=base.faces,
        vertices=base.vertices,
        euler_characteristic=base.euler_characteristic,
        messages=tuple(list(base.messages) + messages),
    )


def dual_graph(m: CombinatorialMap) -> nx.Graph:
    """Faces as nodes, an arc wherever an edge separates two distinct faces."""
    g = nx.Graph()
    g.add_nodes_from(face[0] for face in m.faces)
    for x, y in m.edges:
        fx, fy = m.face_of(x), m.face_of(y)
        if fx != fy:
            g.add_edge(fx, fy)
    return g


def maximum_matching(g: nx.Graph) -> set[tuple[int, int]]:
    return nx.max_weight_matching(g, maxcardinality=True)


def tutte_barrier(g: nx.Graph) -> tuple[set[int], list[set[int]]]:
    """Gallai-Edmonds barrier: A = neighbours of the vertices some maximum
    matching misses.  Returns A and the odd components of G - A."""
    nu = len(maximum_matching(g))
    missable = set()
    for v in g.nodes:
        h = g.copy()
        h.remove_node(v)
        if len(maximum_matching(h)) == nu:
            missable.add(v)
    barrier = {u for v in missable for u in g[v]} - missable
    rest = g.subgraph(set(g.nodes) - barrier)
    odd = [set(c) for c in nx.connected_components(rest) if len(c) % 2]
    return barrier, odd


def dual_matching(lm: LabeledMap) -> Matching:
    """Perfect matching of quads across shared edges (Edmonds' blossom algorithm)."""
    report = validate_quadrangulation(lm)
    if not report.valid:
        raise InvalidMap("not a bicoloured quadrangulation: " + "; ".join(report.messages))
    g = dual_graph(lm.map)
    if g.number_of_nodes() % 2:
        raise MatchingError(f"odd number of faces ({g.number_of_nodes()})", (), [set(g.nodes)])
    pairs = maximum_matching(g)
    if 2 * len(pairs) != g.number_of_nodes():
        barrier, odd = tutte_barrier(g)
        raise MatchingError(
            f"maximum matching covers {2 * len(pairs)} of {g.number_of_nodes()} faces", barrier, odd
        )
    return Matching(tuple(pairs))


def merge_to_hexagons(lm: LabeledMap, matching: Matching) -> LabeledMap:
    """Delete one shared edge per matched pair (the one holding the least dart)."""
    m = lm.map
    faces = {face[0] for face in m.faces}
    if matching.covered != faces:
        raise InvalidMap("merge needs a perfect matching of the faces")
    removed: set[int] = set()
    for f, g in matching.pairs:
        shared = [x for x in range(1, m.dart_count + 1) if m.face_of(x) == f and m.face_of(m.alpha(x)) == g]
        if not shared:
            raise InvalidMap(f"matched faces {f} and {g} share no edge")
        x = min(min(x, m.alpha(x)) for x in shared)
        removed |= {x, m.alpha(x)}
    succ = {x: m.sigma(x) for x in range(1, m.dart_count + 1)}
    pred = {y: x for x, y in succ.items()}
    for x in sorted(removed):
        p, s = pred[x], succ[x]
        succ[p], pred[s] = s, p
        del succ[x], pred[x]
    order = sorted(succ)
    new = {old: i for i, old in enumerate(order, 1)}
    alpha = Permutation(tuple(new[m.alpha(x)] for x in order))
    sigma = Permutation(tuple(new[succ[x]] for x in order))
    merged = CombinatorialMap(alpha, sigma)
    return LabeledMap.from_dart_labels(merged, {new[x]: lm.label(x) for x in order})
