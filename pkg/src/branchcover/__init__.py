"""Combinatorial branched covers of the sphere: monodromy tuples, Hurwitz
moves, Belyi maps of triangulated surfaces, and their counting identities."""
from .constellation import (
    Constellation,
    InvalidConstellation,
    ValidationReport,
    branching_total,
    canonical_form,
    euler_characteristic,
    genus,
    parity_check,
    plumb,
    validate,
)
from .hurwitz import (
    BraidWord,
    Direction,
    OrbitSummary,
    apply_braid_word,
    bundle_tuple,
    hurwitz_move,
    hurwitz_orbit,
    monodromy_movie,
)
from .ledger import LedgerLine, LedgerReport
from .perm import (
    ParseError,
    Permutation,
    compose,
    conjugate,
    cycle_count,
    format_cycles,
    inverse,
    orbit_closure,
    parse_cycles,
)
from .surface import CombinatorialMap, InvalidMap, LabeledMap

__all__ = [
    "BraidWord",
    "CombinatorialMap",
    "Constellation",
    "Direction",
    "InvalidConstellation",
    "InvalidMap",
    "LabeledMap",
    "LedgerLine",
    "LedgerReport",
    "OrbitSummary",
    "ParseError",
    "Permutation",
    "ValidationReport",
    "apply_braid_word",
    "branching_total",
    "bundle_tuple",
    "canonical_form",
    "compose",
    "conjugate",
    "cycle_count",
    "euler_characteristic",
    "format_cycles",
    "genus",
    "hurwitz_move",
    "hurwitz_orbit",
    "inverse",
    "monodromy_movie",
    "orbit_closure",
    "parity_check",
    "parse_cycles",
    "plumb",
    "validate",
]
