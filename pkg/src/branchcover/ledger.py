"""Exact integer checks of counting identities for a branched cover of the sphere.

Each check compares two integers built from a cover of degree d with total
branching b over a closed surface of Euler characteristic chi, and, for the
constructed covers, the number y of points on one transversal copy.
"""
from __future__ import annotations

from dataclasses import dataclass

from .constellation import Constellation, branching_total, euler_characteristic, require_valid


@dataclass(frozen=True)
class LedgerLine:
    identity_name: str
    left_value: int
    right_value: int
    context: str = ""

    @property
    def passed(self) -> bool:
        return self.left_value == self.right_value

    def render(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{self.identity_name}: {self.left_value} = {self.right_value} [{verdict}] ({self.context})"

    def render_tsv(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return "\t".join([self.identity_name, str(self.left_value), str(self.right_value), verdict, self.context])


@dataclass(frozen=True)
class LedgerReport:
    lines: tuple[LedgerLine, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "lines", tuple(self.lines))

    @property
    def all_passed(self) -> bool:
        return all(line.passed for line in self.lines)

    def render(self, tsv: bool = False) -> str:
        return "".join((line.render_tsv() if tsv else line.render()) + "\n" for line in self.lines)


# closed-form branch counts for a leaf with y transversal points and Euler characteristic chi
def belyi_branch_count(y: int, chi: int) -> int:
    return 12 * y - 13 * chi


def quad_branch_count(y: int, chi: int) -> int:
    return 8 * y - 5 * chi


def hex_branch_count(y: int, chi: int) -> int:
    return 6 * y - 4 * chi


def _describe(c: Constellation) -> str:
    return f"degree {c.degree}, {len(c)} entries"


def leaf_euler_check(c: Constellation, chi: int | None = None) -> LedgerLine:
    """chi + b = 2d.  With ``chi`` omitted the cover's own Euler characteristic
    is used, which makes the line a pure Riemann-Hurwitz consistency check."""
    require_valid(c)
    source = "cover"
    if chi is None:
        chi = euler_characteristic(c)
    else:
        source = "leaf"
    b = branching_total(c)
    return LedgerLine(
        "euler: chi + b = 2d",
        chi + b,
        2 * c.degree,
        f"{_describe(c)}, {source} chi = {chi}, b = {b}",
    )


def belyi_constants_check(c: Constellation, v: int, chi: int) -> tuple[LedgerLine, LedgerLine]:
    require_valid(c)
    b, d = branching_total(c), c.degree
    ctx = f"{_describe(c)}, v = {v}, chi = {chi}"
    return (
        LedgerLine("belyi branch: b = 12v - 13chi", b, belyi_branch_count(v, chi), ctx),
        LedgerLine("belyi degree: 2d = 12v - 12chi", 2 * d, 12 * v - 12 * chi, ctx),
    )


def quad_constants_check(c: Constellation, y: int, chi: int) -> tuple[LedgerLine, LedgerLine]:
    if y <= 0:
        raise ValueError("a total transversal meets every leaf: y must be positive")
    require_valid(c)
    b, d = branching_total(c), c.degree
    ctx = f"{_describe(c)}, y = {y}, chi = {chi}"
    return (
        LedgerLine("quad degree: 2d = 8y - 4chi", 2 * d, 8 * y - 4 * chi, ctx),
        LedgerLine("quad branch: b = 8y - 5chi", b, quad_branch_count(y, chi), ctx),
    )


def hex_constants_check(c: Constellation, y: int, chi: int) -> tuple[LedgerLine, LedgerLine]:
    if y <= 0:
        raise ValueError("a total transversal meets every leaf: y must be positive")
    require_valid(c)
    b, d = branching_total(c), c.degree
    ctx = f"{_describe(c)}, y = {y}, chi = {chi}"
    return (
        LedgerLine("hex degree: 2d = 6y - 3chi", 2 * d, 6 * y - 3 * chi, ctx),
        LedgerLine("hex branch (derived, with euler): b = 6y - 4chi", b, hex_branch_count(y, chi), ctx),
    )


def count_line(name: str, left: int, right: int, context: str = "") -> LedgerLine:
    return LedgerLine(name, left, right, context)
