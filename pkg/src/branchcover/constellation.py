"""Branched covers of the sphere encoded as tuples of permutations."""
from __future__ import annotations

import itertools
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from .perm import (
    Permutation,
    cycle_count,
    is_transposition,
    orbit_closure,
    product,
)

if TYPE_CHECKING:
    from .ledger import LedgerLine

DEFAULT_CANONICAL_CAP = 8


class InvalidConstellation(ValueError):
    """Raised when an operation needs a valid (identity product, transitive) tuple."""


@dataclass(frozen=True)
class Constellation:
    degree: int
    perms: tuple[Permutation, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "perms", tuple(self.perms))
        if self.degree < 1:
            raise ValueError("degree must be at least 1")
        for i, p in enumerate(self.perms, 1):
            if p.degree != self.degree:
                raise ValueError(f"entry {i} has degree {p.degree}, expected {self.degree}")

    def __len__(self) -> int:
        return len(self.perms)

    @classmethod
    def from_cycles(cls, degree: int, texts: Iterable[str]) -> Constellation:
        return cls(degree, tuple(Permutation.from_cycles(t, degree) for t in texts))

    def images(self) -> tuple[int, ...]:
        """Concatenated image sequences, the key for lexicographic comparison."""
        return tuple(itertools.chain.from_iterable(p.images for p in self.perms))


@dataclass(frozen=True)
class ValidationReport:
    product_is_identity: bool
    transitive: bool
    simple: bool
    degree: int
    branch_count: int
    euler_characteristic: int
    genus: int | None = None
    messages: tuple[str, ...] = field(default=())

    @property
    def valid(self) -> bool:
        return self.product_is_identity and self.transitive


def _riemann_hurwitz(c: Constellation) -> int:
    return 2 * c.degree - branching_total(c)


def validate(c: Constellation) -> ValidationReport:
    """Diagnose a tuple; never raises on malformed data."""
    messages = []
    prod = product(c.perms, c.degree)
    product_ok = prod.is_identity()
    if not product_ok:
        messages.append(f"product of the tuple is {prod}, not the identity")
    orbit = orbit_closure(c.perms, 1)
    transitive = len(orbit) == c.degree
    if not transitive:
        messages.append(f"not transitive: orbit of 1 is {sorted(orbit)}")
    simple = all(is_transposition(p) for p in c.perms)
    chi = _riemann_hurwitz(c)
    genus = None
    if product_ok and transitive and chi % 2 == 0:
        genus = (2 - chi) // 2
    if c.degree == 1:
        messages.append("degree 1 cover is the sphere; a closed leaf of higher genus needs degree >= 2")
    return ValidationReport(
        product_is_identity=product_ok,
        transitive=transitive,
        simple=simple,
        degree=c.degree,
        branch_count=len(c.perms),
        euler_characteristic=chi,
        genus=genus,
        messages=tuple(messages),
    )


def require_valid(c: Constellation) -> ValidationReport:
    report = validate(c)
    if not report.valid:
        raise InvalidConstellation("; ".join(report.messages))
    return report


def branching_total(c: Constellation) -> int:
    """Total branching, each entry contributing ``d - cycle_count``."""
    return sum(c.degree - cycle_count(p) for p in c.perms)


def euler_characteristic(c: Constellation) -> int:
    """Riemann-Hurwitz: ``2d - branching_total`` for a connected cover."""
    require_valid(c)
    return _riemann_hurwitz(c)


def genus(c: Constellation) -> int:
    report = require_valid(c)
    assert report.genus is not None
    return report.genus


def plumb(c: Constellation, n: int, anchor: int = 1) -> Constellation:
    """Append ``n`` new sheets, each joined to ``anchor`` by a pair of equal
    transpositions.  Genus is unchanged; degree grows by ``n`` and total
    branching by ``2n``."""
    require_valid(c)
    if n < 0:
        raise ValueError("plumbing degree must be non-negative")
    if not 1 <= anchor <= c.degree:
        raise ValueError(f"anchor {anchor} outside 1..{c.degree}")
    if n == 0:
        return c
    d = c.degree + n
    grown = [Permutation(p.images + tuple(range(c.degree + 1, d + 1))) for p in c.perms]
    for sheet in range(c.degree + 1, d + 1):
        swap = Permutation.transposition(d, anchor, sheet)
        grown += [swap, swap]
    return Constellation(d, tuple(grown))


def _conjugate_images(images: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    new = [0] * len(g)
    for x, y in enumerate(images):
        new[g[x] - 1] = g[y - 1]
    return tuple(new)


def canonical_form(c: Constellation, cap: int = DEFAULT_CANONICAL_CAP) -> Constellation:
    """Lexicographically least simultaneous conjugate over all of S_d.

    Candidates are filtered entry by entry: only relabellings that minimise
    the first entry can minimise the concatenation, and so on.
    """
    d = c.degree
    if d > cap:
        raise ValueError(f"degree {d} exceeds the canonical-form cap {cap}")
    candidates = list(itertools.permutations(range(1, d + 1)))
    out = []
    for p in c.perms:
        images = {g: _conjugate_images(p.images, g) for g in candidates}
        least = min(images.values())
        candidates = [g for g in candidates if images[g] == least]
        out.append(Permutation(least))
    return Constellation(d, tuple(out))


def parity_check(c: Constellation) -> LedgerLine:
    """The branch count of a closed leaf is even."""
    from .ledger import LedgerLine

    require_valid(c)
    b = branching_total(c)
    return LedgerLine(
        identity_name="parity: branching_total mod 2",
        left_value=b % 2,
        right_value=0,
        context=f"degree {c.degree}, {len(c)} entries, b = {b}",
    )
