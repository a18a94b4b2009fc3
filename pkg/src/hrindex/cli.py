"""Command-line interface: ``hrindex {index,grid,profile,compare} ...``.

Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
1 unreadable or malformed input, 2 invalid arguments, 3 undefined value
(AIF with no eligible papers, percentage of a zero baseline).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .corpus import CorpusError, YearWindow, load_corpus
from .evolution import (
    DEFAULT_PRECISION,
    compare,
    corpus_grid,
    evolution_grid,
    final_profile,
    format_decimal,
)
from .indices import (
    DEFAULT_AIF_SPAN,
    InvalidVariantError,
    UndefinedAIFError,
    VariantKind,
    VariantSpec,
    aif,
    evaluate_variant,
    windowed_g,
)

EXIT_OK, EXIT_INPUT, EXIT_USAGE, EXIT_UNDEFINED = 0, 1, 2, 3

# suggested length of the recent-publication window, in years
RECENT_WINDOW_YEARS = 6


class UsageError(Exception):
    pass


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hrindex", description="Time-windowed Hirsch-type indices from yearly citation records."
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lenient", action="store_true",
                        help="accept citations dated before the publication year")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    common.add_argument("--precision", type=_positive_int, default=DEFAULT_PRECISION,
                        help="decimal places for non-integer values (default %(default)s)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", parents=[common], help="one index value")
    p.add_argument("input")
    p.add_argument("--year", type=int, required=True)
    p.add_argument("--variant", choices=[k.value for k in VariantKind], default="classic")
    p.add_argument("--from-year", type=int, help="start year r for the recent variant")
    p.add_argument("--stop-year", type=int, help="stop year s for the stopped variant")
    p.add_argument("--delta", type=int, help="window span for the incremental variant")
    p.add_argument("--last", type=_positive_int, nargs="?", const=RECENT_WINDOW_YEARS,
                   help="recent variant over the last N publication years, y-N+1..y "
                        f"(N defaults to {RECENT_WINDOW_YEARS})")
    p.add_argument("--metric", choices=["h", "g", "aif"], default="h")
    p.add_argument("--g-padding", action="store_true",
                   help="let g exceed the number of papers by padding with uncited papers")
    p.add_argument("--span", type=_positive_int, default=DEFAULT_AIF_SPAN,
                   help="AIF publication span in years (default %(default)s)")

    p = sub.add_parser("grid", parents=[common], help="h_r(y) evolution grid")
    p.add_argument("input")
    p.add_argument("--r-from", type=int)
    p.add_argument("--r-to", type=int)
    p.add_argument("--y-from", type=int)
    p.add_argument("--y-to", type=int)
    p.add_argument("--form", choices=["long", "wide"], default="long")
    p.add_argument("--truncated", action="store_true",
                   help="integer values in the wide form")

    p = sub.add_parser("profile", parents=[common], help="h_r(y), core survivors and gap per r")
    p.add_argument("input")
    p.add_argument("--year", type=int, required=True)
    p.add_argument("--percent", action="store_true",
                   help="add h_r as a percentage of the classic h")

    p = sub.add_parser("compare", parents=[common], help="profiles of several authors")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--year", type=int, required=True)
    p.add_argument("--align", choices=["calendar", "career_age"], default="calendar")
    p.add_argument("--career-start", action="append", metavar="YEAR|auto",
                   help="career start per input, in input order; 'auto' keeps the derived one")
    return parser


def _kv_report(items, fmt):
    if fmt == "json":
        return json.dumps(dict(items), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([k for k, _ in items])
        writer.writerow([v for _, v in items])
        return buf.getvalue()
    return "".join(f"{k}={v}\n" for k, v in items)


def _variant(args) -> VariantSpec:
    kind = VariantKind(args.variant)
    if args.last is not None:
        if kind not in (VariantKind.CLASSIC, VariantKind.RECENT):
            raise UsageError("--last only applies to the recent variant")
        if args.from_year is not None:
            raise UsageError("--last and --from-year are mutually exclusive")
        return VariantSpec.recent(args.year - args.last + 1)
    params = {
        VariantKind.RECENT: ("--from-year", args.from_year),
        VariantKind.STOPPED: ("--stop-year", args.stop_year),
        VariantKind.INCREMENTAL: ("--delta", args.delta),
    }
    if kind in params:
        flag, value = params[kind]
        if value is None:
            raise UsageError(f"variant {kind.value} needs {flag}")
        return VariantSpec(kind, value)
    return VariantSpec(kind)


def cmd_index(args, out) -> None:
    corpus = load_corpus(args.input, strict=not args.lenient)
    variant = _variant(args)
    res = evaluate_variant(corpus, variant, args.year)
    items = [
        ("variant", str(variant)),
        ("year", args.year),
        ("pub_window", str(res.pub_win)),
        ("cit_window", str(res.cit_win)),
        ("h_int", res.h_int),
        ("h_real", format_decimal(res.h_real, args.precision)),
        ("core_size", len(res.core_ids)),
        ("core", ";".join(res.core_ids)),
    ]
    if args.metric == "g":
        items.append(("g", windowed_g(corpus, res.pub_win, res.cit_win, args.g_padding)))
    elif args.metric == "aif":
        value = aif(corpus, args.year, args.span)
        items += [
            ("aif_span", args.span),
            ("aif", format_decimal(value, args.precision)),
            ("aif_exact", str(value)),
        ]
    out.write(_kv_report(items, args.format))


def cmd_grid(args, out) -> None:
    corpus = load_corpus(args.input, strict=not args.lenient)
    bounds = (args.r_from, args.r_to, args.y_from, args.y_to)
    interpolated = not args.truncated
    if all(b is None for b in bounds):
        grid = corpus_grid(corpus, interpolated)
    else:
        if not corpus.papers and None in bounds:
            raise UsageError("an empty corpus needs all of --r-from/--r-to/--y-from/--y-to")
        r_from, r_to, y_from, y_to = bounds
        first = corpus.r0 if corpus.papers else None
        last = corpus.last_year if corpus.papers else None
        r_range = YearWindow(first if r_from is None else r_from, last if r_to is None else r_to)
        y_range = YearWindow(first if y_from is None else y_from, last if y_to is None else y_to)
        grid = evolution_grid(corpus, r_range, y_range, interpolated)
    if args.format == "json":
        out.write(grid.to_json(args.precision))
    elif args.form == "wide":
        out.write(grid.to_wide_csv(args.precision))
    else:
        out.write(grid.to_long_csv(args.precision))


def cmd_profile(args, out) -> None:
    corpus = load_corpus(args.input, strict=not args.lenient)
    if not corpus.papers:
        profile_text = "r,h_r,survivors,gap" + (",h_r_percent" if args.percent else "") + "\n"
        out.write(profile_text if args.format != "json" else
                  json.dumps({"y": args.year, "points": []}, indent=2) + "\n")
        return
    profile = final_profile(corpus, args.year)
    if args.format == "json":
        out.write(profile.to_json(args.percent, args.precision))
    else:
        out.write(profile.to_csv(args.percent, args.precision))


def cmd_compare(args, out) -> None:
    if len(args.inputs) < 2:
        raise UsageError("compare needs at least two input files")
    corpora = [load_corpus(path, strict=not args.lenient) for path in args.inputs]
    starts = None
    if args.career_start:
        if len(args.career_start) != len(corpora):
            raise UsageError("give --career-start once per input file")
        try:
            starts = [None if s == "auto" else int(s) for s in args.career_start]
        except ValueError:
            raise UsageError(f"bad --career-start value in {args.career_start}") from None
    table = compare(corpora, args.year, args.align, starts)
    out.write(table.to_json() if args.format == "json" else table.to_csv())


COMMANDS = {"index": cmd_index, "grid": cmd_grid, "profile": cmd_profile, "compare": cmd_compare}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    buf = io.StringIO()
    try:
        COMMANDS[args.command](args, buf)
    except CorpusError as exc:
        print(f"hrindex: input error: {exc}", file=err)
        return EXIT_INPUT
    except (UndefinedAIFError, ZeroDivisionError) as exc:
        print(f"hrindex: undefined: {exc}", file=err)
        return EXIT_UNDEFINED
    except (UsageError, InvalidVariantError, ValueError) as exc:
        print(f"hrindex: {exc}", file=err)
        return EXIT_USAGE
    out.write(buf.getvalue())
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
