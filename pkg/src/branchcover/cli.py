"""Command-line front end.

Exit codes: 0 success, 1 validation or identity failure, 2 parse/input
error, 3 search cap exceeded.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import sys
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

from . import formats
from .constellation import Constellation, InvalidConstellation, genus, parity_check, plumb, validate
from .hurwitz import DEFAULT_ORBIT_CAP, BraidWord, apply_braid_word, bundle_tuple, hurwitz_orbit, monodromy_movie
from .ledger import (
    LedgerReport,
    belyi_constants_check,
    hex_constants_check,
    leaf_euler_check,
    quad_constants_check,
)
from .perm import ParseError
from .pipeline import belyi_pipeline, hex_pipeline, quad_pipeline
from .quads import MatchingError, dual_matching, merge_to_hexagons, validate_quadrangulation
from .surface import CombinatorialMap, InvalidMap, LabeledMap, barycentric_subdivide, edge_flip, validate_map

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


@dataclass(frozen=True)
class CommandOutcome:
    exit_code: int
    stdout_payload: str
    diagnostics: str = ""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load(path: str):
    return formats.parse_one(_read(path))


def _load_constellation(path: str) -> Constellation:
    return formats.parse_constellation(_read(path))


def _load_map(path: str) -> CombinatorialMap | LabeledMap:
    return formats.parse_map(_read(path))


def _load_labeled(path: str) -> LabeledMap:
    m = _load_map(path)
    if not isinstance(m, LabeledMap):
        raise ParseError("this command needs a labelled map (label lines)")
    return m


def _plain(m: CombinatorialMap | LabeledMap) -> CombinatorialMap:
    return m.map if isinstance(m, LabeledMap) else m


def _report_text(report) -> str:
    lines = []
    for name, value in vars(report).items():
        if name == "messages":
            continue
        lines.append(f"{name}: {value}")
    if hasattr(report, "genus") and not any(line.startswith("genus:") for line in lines):
        lines.append(f"genus: {report.genus}")
    lines += [f"message: {msg}" for msg in report.messages]
    return "\n".join(lines) + "\n"


# -- subcommands ---------------------------------------------------------------


def cmd_validate(args) -> tuple[int, str]:
    obj = _load(args.file)
    if isinstance(obj, Constellation):
        report = validate(obj)
        return (EXIT_OK if report.valid else EXIT_FAILED), _report_text(report)
    if isinstance(obj, LabeledMap) and obj.label_set() <= {0, 1}:
        base, quad = validate_map(obj.map), validate_quadrangulation(obj)
        text = _report_text(base) + f"quadrangulation: {quad.valid}\n"
        text += "".join(f"message: {msg}\n" for msg in quad.messages)
        return (EXIT_OK if base.valid else EXIT_FAILED), text
    report = validate_map(_plain(obj))
    return (EXIT_OK if report.valid else EXIT_FAILED), _report_text(report)


def cmd_genus(args) -> tuple[int, str]:
    obj = _load(args.file)
    if isinstance(obj, Constellation):
        return EXIT_OK, f"{genus(obj)}\n"
    report = validate_map(_plain(obj))
    if not report.valid:
        raise InvalidMap("; ".join(report.messages))
    return EXIT_OK, f"{report.genus}\n"


def cmd_bundle(args) -> tuple[int, str]:
    c = bundle_tuple(_need(args.degree, "--degree"))
    return EXIT_OK, formats.format_constellation(c)


def cmd_braid(args) -> tuple[int, str]:
    c = _load_constellation(args.file)
    word = BraidWord.parse(args.word or "")
    return EXIT_OK, formats.format_constellation(apply_braid_word(c, word))


def cmd_orbit(args) -> tuple[int, str]:
    c = _load_constellation(args.file)
    summary = hurwitz_orbit(c, cap=args.cap)
    head = f"orbit size {summary.size}" + (" (truncated)" if summary.truncated else "")
    body = "".join(
        formats.format_constellation(rep, head if i == 0 else None) for i, rep in enumerate(summary.representatives)
    )
    return (EXIT_CAP if summary.truncated else EXIT_OK), body


def cmd_movie(args) -> tuple[int, str]:
    movie = monodromy_movie(_need(args.degree, "--degree"), BraidWord.parse(args.word or ""))
    out = [formats.format_constellation(f, f"frame {i}") for i, f in enumerate(movie.frames)]
    out.append(f"# closes up: {'yes' if movie.closes_up else 'no'}\n")
    out.append(formats.format_constellation(movie.final_canonical, "final canonical form"))
    return EXIT_OK, "".join(out)


def cmd_plumb(args) -> tuple[int, str]:
    c = _load_constellation(args.file)
    return EXIT_OK, formats.format_constellation(plumb(c, _need(args.degree, "--degree"), args.anchor))


def pipeline_belyi(args) -> tuple[int, str]:
    m = _plain(_load_map(args.file))
    result = belyi_pipeline(m)
    text = formats.format_constellation(result.constellation, "Belyi monodromy (s0, s1, s_inf)")
    text += result.ledger.render(args.tsv)
    return (EXIT_OK if result.ledger.all_passed else EXIT_FAILED), text


def cmd_subdivide(args) -> tuple[int, str]:
    return EXIT_OK, formats.format_map(barycentric_subdivide(_plain(_load_map(args.file))))


def cmd_flip(args) -> tuple[int, str]:
    m = _plain(_load_map(args.file))
    return EXIT_OK, formats.format_map(edge_flip(m, _need(args.edge, "--edge")))


def cmd_quads(args) -> tuple[int, str]:
    lm = _load_labeled(args.file)
    report = validate_quadrangulation(lm)
    text = _report_text(report) + f"identity q = v - chi: {report.identity_holds}\n"
    if not report.valid:
        return EXIT_FAILED, text
    result = quad_pipeline(lm)
    text += formats.format_constellation(result.constellation, "quadrangulation monodromy")
    text += result.ledger.render(args.tsv)
    return (EXIT_OK if result.ledger.all_passed and report.identity_holds else EXIT_FAILED), text


def cmd_match(args) -> tuple[int, str]:
    matching = dual_matching(_load_labeled(args.file))
    return EXIT_OK, "".join(f"pair {f} {g}\n" for f, g in matching.pairs)


def cmd_merge(args) -> tuple[int, str]:
    lm = _load_labeled(args.file)
    return EXIT_OK, formats.format_map(merge_to_hexagons(lm, dual_matching(lm)))


def cmd_ledger(args) -> tuple[int, str]:
    obj = _load(args.file)
    if isinstance(obj, Constellation):
        lines = [leaf_euler_check(obj, args.chi), parity_check(obj)]
        if args.kind:
            if args.transversal is None or args.chi is None:
                raise UsageError("--kind needs --transversal and --chi")
            check = {"belyi": belyi_constants_check, "quad": quad_constants_check, "hex": hex_constants_check}
            lines += check[args.kind](obj, args.transversal, args.chi)
        report = LedgerReport(tuple(lines))
    elif isinstance(obj, LabeledMap) and obj.label_set() <= {0, 1}:
        quad = quad_pipeline(obj)
        hexes = hex_pipeline(obj)
        report = LedgerReport(quad.ledger.lines + hexes.ledger.lines)
    else:
        report = belyi_pipeline(_plain(obj)).ledger
    return (EXIT_OK if report.all_passed else EXIT_FAILED), report.render(args.tsv)


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


COMMANDS = {
    "validate": (cmd_validate, "check a constellation or map file"),
    "genus": (cmd_genus, "print the genus of a constellation or map"),
    "bundle": (cmd_bundle, "surface-bundle tuple of a given degree"),
    "braid": (cmd_braid, "apply a braid word to a constellation"),
    "orbit": (cmd_orbit, "enumerate the Hurwitz orbit of a constellation"),
    "movie": (cmd_movie, "frames of the bundle tuple under a braid word"),
    "plumb": (cmd_plumb, "plumb a constellation with --degree new sheets"),
    "belyi": (pipeline_belyi, "Belyi monodromy of a triangulation with its ledger"),
    "subdivide": (cmd_subdivide, "barycentric subdivision with 0/1/2 labels"),
    "flip": (cmd_flip, "flip the edge holding dart --edge"),
    "quads": (cmd_quads, "check a 0/1-labelled quadrangulation and its constants"),
    "match": (cmd_match, "perfect matching of adjacent quadrilaterals"),
    "merge": (cmd_merge, "merge matched quadrilaterals into hexagons"),
    "ledger": (cmd_ledger, "verify the counting identities for a file"),
}

_NEEDS_FILE = set(COMMANDS) - {"bundle", "movie"}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="branchcover", description="Combinatorial branched covers of the sphere.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        if name in _NEEDS_FILE:
            p.add_argument("file", help="input file, or - for stdin")
        p.add_argument("--degree", type=int)
        p.add_argument("--word")
        p.add_argument("--cap", type=int, default=DEFAULT_ORBIT_CAP)
        p.add_argument("--anchor", type=int, default=1)
        p.add_argument("--edge", type=int)
        p.add_argument("--transversal", type=int)
        p.add_argument("--chi", type=int)
        p.add_argument("--kind", choices=["belyi", "quad", "hex"])
        p.add_argument("--tsv", action="store_true", help="tab-separated ledger lines")
        p.add_argument("--output", help="write the payload to this path instead of stdout")
    return parser


def run(argv: Sequence[str]) -> CommandOutcome:
    """Run one command without touching stdout; pure apart from file reads
    and an optional ``--output`` write."""
    try:
        with contextlib.redirect_stdout(io.StringIO()) as help_out:
            args = build_parser().parse_args(list(argv))
    except UsageError as exc:
        return CommandOutcome(EXIT_INPUT, "", f"{exc}\n")
    except SystemExit as exc:  # --help
        return CommandOutcome(int(exc.code or 0), help_out.getvalue(), "")
    handler = COMMANDS[args.command][0]
    try:
        code, payload = handler(args)
    except UsageError as exc:
        return CommandOutcome(EXIT_INPUT, "", f"error: {exc}\n")
    except (ParseError, OSError, UnicodeDecodeError) as exc:
        return CommandOutcome(EXIT_INPUT, "", f"input error: {exc}\n")
    except MatchingError as exc:
        text = f"no perfect matching: {exc.reason}\n"
        if exc.barrier or exc.odd_components:
            text += f"barrier: {list(exc.barrier)}\nodd components: {[list(c) for c in exc.odd_components]}\n"
        return CommandOutcome(EXIT_FAILED, "", text)
    except (InvalidConstellation, InvalidMap, ValueError, IndexError) as exc:
        return CommandOutcome(EXIT_FAILED, "", f"invalid: {exc}\n")
    if args.output:
        try:
            Path(args.output).write_text(payload, encoding="utf-8")
        except OSError as exc:
            return CommandOutcome(EXIT_INPUT, "", f"cannot write {args.output}: {exc}\n")
        payload = ""
    return CommandOutcome(code, payload)


def main(argv: Sequence[str] | None = None) -> int:
    outcome = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(outcome.stdout_payload)
    sys.stderr.write(outcome.diagnostics)
    return outcome.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
