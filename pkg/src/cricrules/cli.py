"""Command-line interface.

Subcommands: ingest (build a corpus file), analyze (rules and biplots for one
filter), validate (holdout stability or comparison against a rule file),
lexicon lint, and serve (run the HTTP service). analyze and validate write the
same canonical JSON a running service would return.
"""

from __future__ import annotations

import argparse
import os
import sys
from datetime import date as Date
from pathlib import Path

from .analysis import AnalysisRequest, run_analysis, validation_payload
from .ca import correspondence_analysis
from .confrontation import (
    FilterTuple,
    Opponents,
    build_cm,
    filter_deliveries,
    load_roster,
)
from .corpus import LoadReport, import_raw, load_corpus, save_corpus
from .errors import EXIT_CODES, CricRulesError, InvalidFilter
from .features import CATEGORY_ORDER
from .jsonio import canonical_bytes
from .lexicon import default_lexicon, lint_lexicon, load_lexicon
from .rules import BiplotData, BiplotPoint, mine_all_rules, render_biplot_svg
from .service.app import create_app
from .validation import overlap_with_pairs, read_rule_file, validate_player

_ANALYSIS_TYPES = {"bat": "batting", "bowl": "bowling"}


def _parse_date(value: str | None, name: str) -> Date | None:
    if value is None:
        return None
    try:
        return Date.fromisoformat(value)
    except ValueError as exc:
        raise InvalidFilter(f"{name} must be an ISO-8601 date, got {value!r}") from exc


def _load_inputs(args):
    corpus, report = load_corpus(args.corpus)
    _print_rejects(report)
    lexicon = load_lexicon(args.lexicon) if args.lexicon else default_lexicon()
    roster = load_roster(args.roster) if getattr(args, "roster", None) else None
    return corpus, lexicon, roster


def _print_rejects(report: LoadReport) -> None:
    if report.rejected:
        print(f"warning: rejected {len(report.rejected)} lines", file=sys.stderr)
        for line_no, reason in report.rejected:
            print(f"  line {line_no}: {reason}", file=sys.stderr)


def _write_output(data: bytes, target: str) -> None:
    if target == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(target).write_bytes(data)


def cmd_ingest(args) -> int:
    if args.mode == "raw":
        if args.date is None:
            raise InvalidFilter("raw mode needs --date (raw lines carry no date)")
        corpus, report = import_raw(
            args.input,
            date=_parse_date(args.date, "--date"),
            match_id=args.match_id,
            innings=args.innings,
        )
    else:
        corpus, report = load_corpus(args.input)
    save_corpus(corpus, args.output)
    print(f"accepted {report.accepted} records, rejected {len(report.rejected)} lines")
    for line_no, reason in report.rejected:
        print(f"  line {line_no}: {reason}", file=sys.stderr)
    return 0


def _analysis_request(args) -> AnalysisRequest:
    categories = CATEGORY_ORDER
    if args.categories:
        categories = tuple(c.strip() for c in args.categories.split(","))
    return AnalysisRequest(
        player=args.player,
        analysis_type=_ANALYSIS_TYPES[args.type],
        opponents=Opponents.parse(args.opponents),
        date_from=_parse_date(getattr(args, "date_from", None), "--from"),
        date_to=_parse_date(getattr(args, "date_to", None), "--to"),
        categories=categories,
        top_k=args.top_k,
    )


def cmd_analyze(args) -> int:
    corpus, lexicon, roster = _load_inputs(args)
    request = _analysis_request(args)
    payload = run_analysis(corpus, lexicon, request, roster=roster)
    _write_output(canonical_bytes(payload), args.output)
    if args.svg:
        out_dir = Path(args.svg)
        out_dir.mkdir(parents=True, exist_ok=True)
        for category, bp in payload["biplots"].items():
            data = BiplotData(
                category=category,
                points=tuple(BiplotPoint(**p) for p in bp["points"]),
            )
            title = f"{request.player} {request.analysis_type} ({category})"
            (out_dir / f"{category}.svg").write_text(
                render_biplot_svg(data, title), encoding="utf-8"
            )
    return 0


def cmd_validate(args) -> int:
    corpus, lexicon, roster = _load_inputs(args)
    window = None
    date_from = _parse_date(args.date_from, "--from")
    date_to = _parse_date(args.date_to, "--to")
    if date_from is not None or date_to is not None:
        window = (date_from or Date.min, date_to or Date.max)
    flt = FilterTuple(
        player=args.player,
        opponents=Opponents.parse(args.opponents),
        time_window=window,
        analysis_type=_ANALYSIS_TYPES[args.type],
    )
    if args.compare_rules:
        selection = filter_deliveries(corpus, flt, roster=roster)
        ca = correspondence_analysis(build_cm(selection.records, lexicon, flt, corpus.digest))
        strength, weakness, others = mine_all_rules(ca, flt.analysis_type)
        rules = [r for r in (strength, weakness) if r is not None] + others
        pairs = read_rule_file(args.compare_rules)
        mined = sorted(
            {(r.anchor, f) for r in rules for f in r.top(args.top_k)}
        )
        payload = {
            "player": flt.player,
            "analysis_type": flt.analysis_type,
            "opponents": flt.opponents.to_dict(),
            "window_start": window[0].isoformat() if window else None,
            "window_end": window[1].isoformat() if window else None,
            "top_k": args.top_k,
            "rule_file": str(args.compare_rules),
            "reference_pairs": sorted([list(p) for p in pairs]),
            "mined_pairs": [list(p) for p in mined],
            "commonality_pct": overlap_with_pairs(rules, pairs, k=args.top_k),
        }
    else:
        report = validate_player(
            corpus,
            lexicon,
            flt,
            cutoff_date=_parse_date(args.cutoff, "--cutoff"),
            roster=roster,
            top_k=args.top_k,
            procrustes_category=args.procrustes_category,
        )
        payload = validation_payload(report)
    _write_output(canonical_bytes(payload), args.output)
    return 0


def cmd_lexicon(args) -> int:
    findings = lint_lexicon(args.path)
    if not findings:
        print(f"{args.path}: ok")
        return 0
    for finding in findings:
        print(f"{args.path}:{finding.line_no}: {finding.problem}")
    print(f"{len(findings)} problems found")
    return 1


def cmd_serve(args) -> int:
    import uvicorn

    corpus, lexicon, roster = _load_inputs(args)
    app = create_app(corpus, lexicon, roster)
    host, port = args.host, args.port
    bind = os.environ.get("CRICRULES_BIND")
    if bind:
        host, _, port_s = bind.rpartition(":")
        if not host or not port_s.isdigit():
            raise InvalidFilter(f"CRICRULES_BIND must be 'host:port', got {bind!r}")
        port = int(port_s)
    uvicorn.run(app, host=host, port=port)
    return 0


def _add_filter_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--player", required=True, help="player name as it appears in the corpus")
    sub.add_argument("--type", choices=("bat", "bowl"), default="bat", help="analysis side")
    sub.add_argument(
        "--opponents",
        default="all",
        help="'all', 'fast', 'spin', or comma-separated opponent names",
    )
    sub.add_argument("--from", dest="date_from", metavar="DATE", help="window start (inclusive)")
    sub.add_argument("--to", dest="date_to", metavar="DATE", help="window end (inclusive)")
    sub.add_argument("--top-k", type=int, default=3, help="features per rule sentence")
    sub.add_argument("--roster", help="bowler-class roster file (needed for fast/spin filters)")
    sub.add_argument("--lexicon", help="lexicon file (defaults to the packaged one)")
    sub.add_argument("-o", "--output", default="-", help="output path, '-' for stdout")


def build_parser() -> argparse.ArgumentParser:
    exit_codes = ", ".join(f"{code}={name}" for name, code in sorted(EXIT_CODES.items(), key=lambda kv: kv[1]))
    parser = argparse.ArgumentParser(
        prog="cricrules",
        description="Mine strength and weakness rules for cricket players from text commentary.",
        epilog=f"exit codes: 0=OK, {exit_codes}",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="build a corpus file from commentary")
    p.add_argument("input", help="input file")
    p.add_argument("-o", "--output", required=True, help="corpus file to write")
    p.add_argument(
        "--mode",
        choices=("structured", "raw"),
        default="structured",
        help="structured: tab-separated records; raw: one commentary line per delivery",
    )
    p.add_argument("--date", help="match date for raw mode (ISO-8601)")
    p.add_argument("--match-id", help="match id for raw mode (defaults to the file stem)")
    p.add_argument("--innings", type=int, default=1, help="innings number for raw mode")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("analyze", help="mine rules and biplots for one player")
    p.add_argument("corpus", help="corpus file")
    _add_filter_args(p)
    p.add_argument(
        "--categories",
        help=f"comma-separated subset of {','.join(CATEGORY_ORDER)} (default: all)",
    )
    p.add_argument("--svg", metavar="DIR", help="also write one SVG biplot per category")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("validate", help="check rule stability across a holdout split")
    p.add_argument("corpus", help="corpus file")
    _add_filter_args(p)
    p.add_argument("--cutoff", help="holdout cutoff date (default: last date minus one year)")
    p.add_argument(
        "--procrustes-category",
        choices=CATEGORY_ORDER,
        default="response",
        help="biplot category compared across the split",
    )
    p.add_argument(
        "--compare-rules",
        metavar="FILE",
        help="compare mined rules against 'anchor<TAB>bowling-feature' lines instead",
    )
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("lexicon", help="lexicon utilities")
    lex_sub = p.add_subparsers(dest="lexicon_command", required=True)
    lint = lex_sub.add_parser("lint", help="check a lexicon file")
    lint.add_argument("path", help="lexicon file")
    lint.set_defaults(func=cmd_lexicon)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("corpus", help="corpus file")
    p.add_argument("--lexicon", help="lexicon file (defaults to the packaged one)")
    p.add_argument("--roster", help="bowler-class roster file")
    p.add_argument("--host", default="127.0.0.1", help="bind address")
    p.add_argument("--port", type=int, default=8000, help="bind port")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CricRulesError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
