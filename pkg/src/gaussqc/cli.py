"""Command line front end: ``gaussqc {field,code,css,table,simulate}``.

Every command builds a report document.  ``--format structured`` prints it
as sorted, indented JSON (re-emitting a parsed report gives identical bytes);
``--format text`` prints one ``key: value`` line per leaf.
"""

from __future__ import annotations

import argparse
import sys

from .documents import (
    code_report,
    css_from_spec,
    css_report,
    dump_document,
    field_report,
    load_document,
    parse_code,
    parse_field,
    parse_run,
    transcript_report,
)
from .errors import CapacityExceeded, GaussQCError, ParseError
from .linear_codes import DEFAULT_CAP
from .qudit_sim import STATE_CAP, run_css_protocol
from .table import INTERPRETATION_SETS, INTERPRETATIONS, reproduce_table

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_ERROR = 0, 1, 2, 3


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gaussqc", description="Codes over Gaussian integer residue fields.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--cap", type=_positive, default=None, help=f"enumeration cap (default {DEFAULT_CAP})")
    common.add_argument("--workers", type=_positive, default=1)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("field", "residue set and primitive pair of G_pi"),
        ("code", "parameters of a linear code and its dual"),
        ("css", "CSS code parameters, error counts and Singleton check"),
        ("simulate", "run the CSS error correction protocol"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--spec", required=True, help="path of the JSON spec document")
    p = sub.add_parser("table", parents=[common], help="reproduction report of the comparison table")
    p.add_argument("--interpretation", choices=tuple(INTERPRETATION_SETS), default="both")
    return parser


def _text_lines(doc, prefix: str = "") -> list[str]:
    if isinstance(doc, dict):
        out = []
        for key in sorted(doc):
            out += _text_lines(doc[key], f"{prefix}.{key}" if prefix else str(key))
        return out
    if isinstance(doc, list) and any(isinstance(v, (dict, list)) for v in doc):
        out = []
        for i, v in enumerate(doc):
            out += _text_lines(v, f"{prefix}[{i}]")
        return out
    if isinstance(doc, list):
        return [f"{prefix}: " + ", ".join(str(v) for v in doc)]
    return [f"{prefix}: {doc}"]


def _table_text(doc: dict) -> list[str]:
    lines = [f"interpretations: {', '.join(doc['interpretations'])}"]
    for key in doc["interpretations"]:
        lines.append(f"  {key}: {INTERPRETATIONS[key]}")
    for i, row in enumerate(doc["rows"], 1):
        lines.append(
            f"row {i}: pi={row['pi']} n={row['n']} claimed HM {row['claimed_hm']} MM {row['claimed_mm']} -> {row['status']}"
        )
        for key, e in row["interpretations"].items():
            if e.get("nested"):
                hm, mm = e["hm"], e["mm"]
                got = f"[[{hm[0]},{hm[1]},{hm[2]['text']}]] / MM d={mm[2]['text']}"
            elif e["constructible"]:
                got = "not nested"
            else:
                got = "not constructible"
            comps = ", ".join(
                f"{name} dM={c['mannheim']['text']} dH={c['hamming']['text']}" for name, c in e["components"].items()
            )
            lines.append(f"    {key}: k1={e['k1']} k2={e['k2']} {got}; {comps}")
        for note in row["notes"]:
            lines.append(f"    note: {note}")
    return lines


def _emit(doc: dict, fmt: str, out, table: bool = False) -> None:
    if fmt == "structured":
        out.write(dump_document(doc))
    else:
        out.write("\n".join(_table_text(doc) if table else _text_lines(doc)) + "\n")


def cmd_analyze(args) -> tuple[dict, int]:
    doc = load_document(args.spec)
    if args.command == "field":
        return field_report(parse_field(doc)), EXIT_OK
    if args.command == "code":
        return code_report(parse_code(doc), args.cap or DEFAULT_CAP, args.workers), EXIT_OK
    q = css_from_spec(doc, workers=args.workers, cap=args.cap)
    return css_report(q), EXIT_OK


def cmd_table(args) -> tuple[dict, int]:
    rows = reproduce_table(args.interpretation, args.cap or DEFAULT_CAP, args.workers)
    return {"interpretations": list(INTERPRETATION_SETS[args.interpretation]), "rows": rows}, EXIT_OK


def cmd_simulate(args) -> tuple[dict, int]:
    run = parse_run(load_document(args.spec))
    cap = args.cap or run["cap"]
    _, transcript = run_css_protocol(
        run["C1"], run["C2"], run["x"], run["e1"], run["e2"], mode=run["mode"], distance_cap=cap
    )
    return transcript_report(transcript), EXIT_OK if transcript.corrected else EXIT_FAILED


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    handler = {"table": cmd_table, "simulate": cmd_simulate}.get(args.command, cmd_analyze)
    try:
        doc, status = handler(args)
    except ParseError as exc:
        print(f"gaussqc: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityExceeded as exc:
        print(
            f"gaussqc: {exc}\n"
            f"the full state vector is limited to {STATE_CAP} amplitudes; "
            'set "mode": "syndrome-only" in the run spec to simulate the classical syndrome steps instead',
            file=sys.stderr,
        )
        return EXIT_USAGE
    except GaussQCError as exc:
        print(f"gaussqc: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    _emit(doc, args.format, out, table=args.command == "table" and args.format == "text")
    return status


if __name__ == "__main__":
    sys.exit(main())
