"""Braid group action on constellations and the surface-bundle tuples."""
from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

from .constellation import (
    DEFAULT_CANONICAL_CAP,
    Constellation,
    require_valid,
    canonical_form,
)
from .perm import ParseError, Permutation, conjugate, inverse

DEFAULT_ORBIT_CAP = 10**6


class Direction(Enum):
    FORWARD = 1
    BACKWARD = -1


@dataclass(frozen=True)
class BraidWord:
    """Letter ``k`` is the generator at positions (k, k+1); ``-k`` its inverse."""

    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if any(k == 0 for k in self.letters):
            raise ValueError("braid letters must be nonzero")

    @classmethod
    def parse(cls, text: str) -> BraidWord:
        try:
            letters = tuple(int(tok) for tok in text.split())
        except ValueError as exc:
            raise ParseError(f"bad braid word {text!r}") from exc
        if any(k == 0 for k in letters):
            raise ParseError(f"zero letter in braid word {text!r}")
        return cls(letters)

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))


@dataclass(frozen=True)
class OrbitSummary:
    size: int
    representatives: tuple[Constellation, ...]
    truncated: bool = False


@dataclass(frozen=True)
class Movie:
    frames: tuple[Constellation, ...]
    initial_canonical: Constellation
    final_canonical: Constellation

    @property
    def closes_up(self) -> bool:
        return self.initial_canonical == self.final_canonical


def bundle_tuple(d: int) -> Constellation:
    """Four copies of (i i+1) for each i = 1..d-1: genus d-1, 4(d-1) simple
    branch points."""
    if d < 2:
        raise ValueError("bundle_tuple needs degree >= 2")
    perms = []
    for i in range(1, d):
        perms += [Permutation.transposition(d, i, i + 1)] * 4
    return Constellation(d, tuple(perms))


def hurwitz_move(c: Constellation, k: int, direction: Direction = Direction.FORWARD) -> Constellation:
    """Forward: (a, b) -> (a b a^-1, a) at positions k, k+1.  Backward is its inverse."""
    n = len(c.perms)
    if not 1 <= k < n:
        raise IndexError(f"move index {k} outside 1..{n - 1}")
    perms = list(c.perms)
    a, b = perms[k - 1], perms[k]
    if direction is Direction.FORWARD:
        perms[k - 1], perms[k] = conjugate(b, inverse(a)), a
    else:
        perms[k - 1], perms[k] = b, conjugate(a, b)
    return Constellation(c.degree, tuple(perms))


def apply_braid_word(c: Constellation, word: BraidWord | Sequence[int]) -> Constellation:
    letters = word.letters if isinstance(word, BraidWord) else tuple(word)
    n = len(c.perms)
    for k in letters:
        if k == 0 or abs(k) >= n:
            raise IndexError(f"braid letter {k} out of range for a tuple of length {n}")
    for k in letters:
        c = hurwitz_move(c, abs(k), Direction.FORWARD if k > 0 else Direction.BACKWARD)
    return c


def hurwitz_orbit(
    c: Constellation,
    cap: int = DEFAULT_ORBIT_CAP,
    canonical_cap: int = DEFAULT_CANONICAL_CAP,
) -> OrbitSummary:
    """Breadth-first closure of canonical forms under all moves of both signs."""
    require_valid(c)
    start = canonical_form(c, canonical_cap)
    seen = {start}
    queue = deque([start])
    truncated = False
    while queue and not truncated:
        current = queue.popleft()
        for k in range(1, len(current.perms)):
            for direction in Direction:
                nxt = canonical_form(hurwitz_move(current, k, direction), canonical_cap)
                if nxt in seen:
                    continue
                if len(seen) >= cap:
                    truncated = True
                    break
                seen.add(nxt)
                queue.append(nxt)
            if truncated:
                break
    reps = tuple(sorted(seen, key=Constellation.images))
    return OrbitSummary(size=len(reps), representatives=reps, truncated=truncated)


def monodromy_movie(d: int, word: BraidWord | Sequence[int]) -> Movie:
    """Frames of the bundle tuple under successive braid letters."""
    letters = word.letters if isinstance(word, BraidWord) else tuple(word)
    start = bundle_tuple(d)
    n = len(start.perms)
    for k in letters:
        if k == 0 or abs(k) >= n:
            raise IndexError(f"braid letter {k} out of range for a tuple of length {n}")
    frames = [start]
    for k in letters:
        frames.append(apply_braid_word(frames[-1], (k,)))
    return Movie(
        frames=tuple(frames),
        initial_canonical=canonical_form(start),
        final_canonical=canonical_form(frames[-1]),
    )

