"""Permutations of {1..d} in one-line form.

Products read left to right: ``compose(p, q)`` first applies ``p`` and then
``q``, so ``compose(p, q)(x) == q(p(x))``.  A monodromy tuple written
``s1 s2 ... sn`` therefore multiplies in writing order.
"""
from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import reduce

#: documented once; every other module inherits it
COMPOSITION_ORDER = "left-to-right"


class ParseError(ValueError):
    """Malformed text input (cycle notation, files, braid words)."""


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..d}; ``images[i - 1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        d = len(images)
        if d < 1:
            raise ValueError("degree must be at least 1")
        if sorted(images) != list(range(1, d + 1)):
            raise ValueError(f"images {images} are not a bijection of 1..{d}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation.from_cycles({format_cycles(self)!r}, {self.degree})"

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> Permutation:
        return parse_cycles(text, degree)

    @classmethod
    def transposition(cls, degree: int, i: int, j: int) -> Permutation:
        if i == j or not (1 <= i <= degree and 1 <= j <= degree):
            raise ValueError(f"bad transposition ({i} {j}) in degree {degree}")
        images = list(range(1, degree + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, 1))


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation such as ``"(1 2)(3 4)"``; ``"()"`` is the identity."""
    if degree < 1:
        raise ParseError("degree must be at least 1")
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty cycle notation (use '()' for the identity)")
    images = list(range(1, degree + 1))
    seen: set[int] = set()
    pos = 0
    for match in _CYCLE.finditer(stripped):
        if stripped[pos:match.start()].strip():
            raise ParseError(f"unexpected text {stripped[pos:match.start()]!r} in {text!r}")
        pos = match.end()
        body = match.group(1).split()
        if not body:
            if stripped != "()":
                raise ParseError(f"empty cycle inside {text!r}")
            continue
        points = []
        for token in body:
            if not token.isdigit():
                raise ParseError(f"bad point {token!r} in {text!r}")
            x = int(token)
            if not 1 <= x <= degree:
                raise ParseError(f"point {x} outside 1..{degree}")
            if x in seen:
                raise ParseError(f"point {x} repeated in {text!r}")
            seen.add(x)
            points.append(x)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a - 1] = b
    if pos == 0 or stripped[pos:].strip():
        raise ParseError(f"malformed parentheses in {text!r}")
    return Permutation(tuple(images))


def cycles(p: Permutation, *, include_fixed: bool = False) -> list[tuple[int, ...]]:
    """Cycles sorted by least element, each starting at its least element."""
    seen = [False] * (p.degree + 1)
    out = []
    for start in range(1, p.degree + 1):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = p(start)
        while x != start:
            seen[x] = True
            cyc.append(x)
            x = p(x)
        if include_fixed or len(cyc) > 1:
            out.append(tuple(cyc))
    return out


def format_cycles(p: Permutation) -> str:
    """Canonical cycle notation: fixed points omitted, cycles by least element."""
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)


def _check_degrees(*perms: Permutation) -> int:
    degrees = {p.degree for p in perms}
    if len(degrees) > 1:
        raise ValueError(f"degree mismatch: {sorted(degrees)}")
    return degrees.pop()


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p`` then ``q``."""
    _check_degrees(p, q)
    return Permutation(tuple(q.images[x - 1] for x in p.images))


def product(perms: Iterable[Permutation], degree: int) -> Permutation:
    """Left-to-right product; the empty product is the identity of ``degree``."""
    return reduce(compose, perms, Permutation.identity(degree))


def inverse(p: Permutation) -> Permutation:
    images = [0] * p.degree
    for x, y in enumerate(p.images, 1):
        images[y - 1] = x
    return Permutation(tuple(images))


def conjugate(p: Permutation, g: Permutation) -> Permutation:
    """``g^-1 * p * g``: the cycles of ``p`` with every point relabelled by ``g``."""
    _check_degrees(p, g)
    images = [0] * p.degree
    for x, y in enumerate(p.images, 1):
        images[g(x) - 1] = g(y)
    return Permutation(tuple(images))


def cycle_count(p: Permutation) -> int:
    """Number of orbits on {1..d}, fixed points included."""
    return len(cycles(p, include_fixed=True))


def cycle_type(p: Permutation) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycles(p, include_fixed=True)), reverse=True))


def is_transposition(p: Permutation) -> bool:
    cs = cycles(p)
    return len(cs) == 1 and len(cs[0]) == 2


def orbit_closure(gens: Sequence[Permutation], start: int) -> set[int]:
    """Smallest set containing ``start`` and closed under ``gens``.

    For permutations of a finite set, closure under the generators already
    gives closure under their inverses.
    """
    if gens:
        d = _check_degrees(*gens)
        if not 1 <= start <= d:
            raise ValueError(f"start point {start} outside 1..{d}")
    elif start < 1:
        raise ValueError(f"start point {start} must be positive")
    orbit = {start}
    frontier = [start]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = g(x)
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return orbit
