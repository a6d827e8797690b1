"""Line-oriented text formats for constellations and maps.

Constellation::

    constellation
    degree <d>
    perm <cycle notation>
    end

Map::

    map
    darts <2E>
    alpha <cycle notation>
    sigma <cycle notation>
    label <dart> <0|1|2>
    end

``#`` starts a comment.  A file may hold several blocks.
"""
from __future__ import annotations

from collections.abc import Iterator

from .constellation import Constellation
from .perm import ParseError, format_cycles, parse_cycles
from .surface import CombinatorialMap, InvalidMap, LabeledMap


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split(None, 1)


def _int(token: str, what: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"line {lineno}: bad {what} {token!r}") from None


def parse_blocks(text: str) -> list[Constellation | CombinatorialMap | LabeledMap]:
    out: list[Constellation | CombinatorialMap | LabeledMap] = []
    block: str | None = None
    fields: dict = {}
    for lineno, words in _lines(text):
        key = words[0]
        rest = words[1] if len(words) > 1 else ""
        if block is None:
            if key not in ("constellation", "map") or rest:
                raise ParseError(f"line {lineno}: expected 'constellation' or 'map', got {key!r}")
            block, fields = key, {"perms": [], "labels": {}}
        elif key == "end":
            out.append(_finish(block, fields, lineno))
            block = None
        elif block == "constellation":
            if key == "degree":
                if "degree" in fields or fields["perms"]:
                    raise ParseError(f"line {lineno}: degree must come once, before perm lines")
                fields["degree"] = _int(rest, "degree", lineno)
            elif key == "perm":
                if "degree" not in fields:
                    raise ParseError(f"line {lineno}: perm before degree")
                fields["perms"].append(_cycles(rest, fields["degree"], lineno))
            else:
                raise ParseError(f"line {lineno}: unknown constellation field {key!r}")
        else:
            if key == "darts":
                fields["darts"] = _int(rest, "dart count", lineno)
            elif key in ("alpha", "sigma"):
                if "darts" not in fields:
                    raise ParseError(f"line {lineno}: {key} before darts")
                if key in fields:
                    raise ParseError(f"line {lineno}: {key} given twice")
                fields[key] = _cycles(rest, fields["darts"], lineno)
            elif key == "label":
                parts = rest.split()
                if len(parts) != 2:
                    raise ParseError(f"line {lineno}: label needs '<dart> <label>'")
                dart, label = (_int(p, "label field", lineno) for p in parts)
                if label not in (0, 1, 2):
                    raise ParseError(f"line {lineno}: label {label} not in 0, 1, 2")
                fields["labels"][dart] = label
            else:
                raise ParseError(f"line {lineno}: unknown map field {key!r}")
    if block is not None:
        raise ParseError(f"unterminated {block} block (missing 'end')")
    return out


def _cycles(text: str, degree: int, lineno: int):
    try:
        return parse_cycles(text, degree)
    except ValueError as exc:
        raise ParseError(f"line {lineno}: {exc}") from None


def _finish(block: str, fields: dict, lineno: int):
    if block == "constellation":
        if "degree" not in fields:
            raise ParseError(f"line {lineno}: constellation without degree")
        try:
            return Constellation(fields["degree"], tuple(fields["perms"]))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    for key in ("darts", "alpha", "sigma"):
        if key not in fields:
            raise ParseError(f"line {lineno}: map without {key}")
    m = CombinatorialMap(fields["alpha"], fields["sigma"])
    labels = fields["labels"]
    if not labels:
        return m
    if any(not 1 <= d <= m.dart_count for d in labels):
        raise ParseError(f"line {lineno}: label dart outside 1..{m.dart_count}")
    try:
        return LabeledMap.from_dart_labels(m, labels)
    except InvalidMap as exc:
        raise ParseError(f"line {lineno}: {exc}") from None


def parse_one(text: str):
    blocks = parse_blocks(text)
    if len(blocks) != 1:
        raise ParseError(f"expected exactly one block, found {len(blocks)}")
    return blocks[0]


def parse_constellation(text: str) -> Constellation:
    obj = parse_one(text)
    if not isinstance(obj, Constellation):
        raise ParseError("expected a constellation block")
    return obj


def parse_map(text: str) -> CombinatorialMap | LabeledMap:
    obj = parse_one(text)
    if isinstance(obj, Constellation):
        raise ParseError("expected a map block")
    return obj


def format_constellation(c: Constellation, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines += ["constellation", f"degree {c.degree}"]
    lines += [f"perm {format_cycles(p)}" for p in c.perms]
    lines.append("end")
    return "\n".join(lines) + "\n"


def format_map(m: CombinatorialMap | LabeledMap, comment: str | None = None) -> str:
    labels: tuple[tuple[int, int], ...] = ()
    if isinstance(m, LabeledMap):
        labels = m.vertex_labels
        m = m.map
    lines = [f"# {comment}"] if comment else []
    lines += ["map", f"darts {m.dart_count}", f"alpha {format_cycles(m.alpha)}", f"sigma {format_cycles(m.sigma)}"]
    lines += [f"label {v} {label}" for v, label in labels]
    lines.append("end")
    return "\n".join(lines) + "\n"
