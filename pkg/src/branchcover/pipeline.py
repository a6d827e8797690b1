"""End-to-end constructions on one closed leaf, each returning its ledger."""
from __future__ import annotations

from dataclasses import dataclass

from .constellation import Constellation, parity_check
from .ledger import (
    LedgerReport,
    belyi_constants_check,
    count_line,
    hex_constants_check,
    leaf_euler_check,
    quad_constants_check,
)
from .quads import (
    Matching,
    dual_matching,
    merge_to_hexagons,
    validate_hexagonation,
    validate_quadrangulation,
)
from .surface import (
    CombinatorialMap,
    InvalidMap,
    LabeledMap,
    barycentric_subdivide,
    dessin_constellation,
    extract_dessin,
    require_valid_map,
)


@dataclass(frozen=True)
class BelyiResult:
    subdivision: LabeledMap
    dessin: LabeledMap
    constellation: Constellation
    ledger: LedgerReport


@dataclass(frozen=True)
class QuadResult:
    constellation: Constellation
    ledger: LedgerReport


@dataclass(frozen=True)
class HexResult:
    matching: Matching
    hexagons: LabeledMap
    constellation: Constellation
    ledger: LedgerReport


def belyi_pipeline(m: CombinatorialMap) -> BelyiResult:
    report = require_valid_map(m)
    v, chi, t = report.vertices, report.euler_characteristic, report.faces
    sub = barycentric_subdivide(m)
    dessin = extract_dessin(sub)
    c = dessin_constellation(dessin)
    lines = [
        count_line("triangles: t/2 = v - chi", t, 2 * (v - chi), f"t = {t}, v = {v}, chi = {chi}"),
        count_line("belyi sheets: d = 3t", c.degree, 3 * t, f"t = {t}"),
        leaf_euler_check(c, chi),
        *belyi_constants_check(c, v, chi),
        parity_check(c),
    ]
    return BelyiResult(sub, dessin, c, LedgerReport(tuple(lines)))


def _transversal_lines(lm: LabeledMap) -> tuple[int, list]:
    zeros = sum(1 for label in lm.labels.values() if label == 0)
    ones = len(lm.labels) - zeros
    return zeros, [count_line("transversal copies: #Y0 = #Y1", zeros, ones, "vertices labelled 0 vs 1")]


def quad_pipeline(lm: LabeledMap) -> QuadResult:
    report = validate_quadrangulation(lm)
    if not report.valid:
        raise InvalidMap("not a bicoloured quadrangulation: " + "; ".join(report.messages))
    q, v, chi = report.quads, report.vertices, report.euler_characteristic
    y, lines = _transversal_lines(lm)
    c = dessin_constellation(extract_dessin(lm))
    lines += [
        count_line("quads: q = v - chi", q, v - chi, f"q = {q}, v = {v}, chi = {chi}"),
        count_line("quad sheets: d = 2q", c.degree, 2 * q, f"q = {q}"),
        leaf_euler_check(c, chi),
        *quad_constants_check(c, y, chi),
        parity_check(c),
    ]
    return QuadResult(c, LedgerReport(tuple(lines)))


def hex_pipeline(lm: LabeledMap, matching: Matching | None = None) -> HexResult:
    if matching is None:
        matching = dual_matching(lm)
    merged = merge_to_hexagons(lm, matching)
    report = validate_hexagonation(merged)
    if not report.valid:
        raise InvalidMap("merged map is not a hexagon map: " + "; ".join(report.messages))
    h, v, chi = report.quads, report.vertices, report.euler_characteristic
    y, lines = _transversal_lines(merged)
    c = dessin_constellation(extract_dessin(merged))
    lines += [
        count_line("hexagons: 2h = v - chi", 2 * h, v - chi, f"h = {h}, v = {v}, chi = {chi}"),
        count_line("hex sheets: d = 3h", c.degree, 3 * h, f"h = {h}"),
        leaf_euler_check(c, chi),
        *hex_constants_check(c, y, chi),
        parity_check(c),
    ]
    return HexResult(matching, merged, c, LedgerReport(tuple(lines)))
