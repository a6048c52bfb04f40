"""Command-line frontend: ``lexdyn {analyze,curve,fit,compare,levelling,synth}``.

Exit codes: 0 success, 2 I/O or usage error, 3 empty input,
4 degenerate fit, 5 comparison mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .compare import compare_pair, compare_tables, levelling_out
from .errors import CompareError, FitError, StatsError
from .fitting import PowerFit, power_fit
from .growth import cumulative_curve, fragment_table, growth_curve, heaps_fit
from .ingest import chunk_by_delimiter, chunk_by_lines, read_document
from .lexstats import LexSummary, frequency_table, summary, zipf_fit
from .synthgen import ZipfSpec, write_corpus, zipf_text
from .tables import (
    csv_layout,
    read_count_table,
    read_curve,
    read_points,
    to_csv,
    to_json,
)

EXIT_OK = 0
EXIT_IO = 2
EXIT_EMPTY = 3
EXIT_FIT = 4
EXIT_COMPARE = 5

SUMMARY_COLUMNS = ["fragment", "type_count", "token_count", "ttr", "hapax_count", "hapax_share"]
CURVE_COLUMNS = ["cum_tokens", "cum_types", "ttr"]
FIT_COLUMNS = ["a", "b", "r2", "n_points"]


class UsageError(Exception):
    pass


def _is_csv(path) -> bool:
    return Path(path).suffix.lower() == ".csv"


def _fragments(args, doc):
    if args.chunk_lines is not None:
        return chunk_by_lines(doc, args.chunk_lines)
    if args.chunk_pattern is not None:
        return chunk_by_delimiter(doc, args.chunk_pattern)
    return None


def _load_doc(path):
    doc = read_document(path)
    if not doc.tokens:
        raise StatsError(f"{path}: no word tokens")
    return doc


def _text_curve(args, path):
    doc = _load_doc(path)
    if args.step is not None:
        return growth_curve(doc.tokens, args.step)
    frags = _fragments(args, doc)
    if frags is None:
        raise UsageError("curve needs --step or a chunk mode (--chunk-lines / --chunk-pattern)")
    return cumulative_curve(frags)


def _emit(args, text: str):
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _summary_row(label, s: LexSummary) -> dict:
    return {"fragment": label, **s.to_dict()}


# -- commands ---------------------------------------------------------------

def cmd_analyze(args):
    path = args.input
    zipf = None
    if _is_csv(path):
        table = read_count_table(path)
        rows = [_summary_row(lab, s) for lab, s in zip(table.labels, table.rows)]
        whole = table.whole if table.whole is not None else table.rows[-1]
        if table.kind == "cumulative":
            rows = [r for r in rows if r["fragment"] != "whole"]
        doc_id = Path(path).stem
    else:
        doc = _load_doc(path)
        doc_id = doc.id
        whole = summary(doc.tokens)
        frags = _fragments(args, doc)
        rows = []
        if frags is not None:
            rows = [_summary_row(f.index, s) for f, s in zip(frags, fragment_table(frags))]
        table = frequency_table(doc.tokens)
        if args.freq:
            Path(args.freq).write_text(
                to_csv(
                    [{"rank": r, "type": w, "frequency": f} for r, w, f in table.ranked],
                    ["rank", "type", "frequency"],
                ),
                encoding="utf-8",
                newline="\n",
            )
        try:
            zipf = zipf_fit(table).to_dict()
        except FitError:
            zipf = None

    if args.format == "json":
        _emit(args, to_json({
            "id": doc_id,
            "fragments": rows,
            "whole": whole.to_dict(),
            "zipf_fit": zipf,
        }))
    else:
        _emit(args, to_csv(rows + [_summary_row("whole", whole)], SUMMARY_COLUMNS))


def cmd_curve(args):
    path = args.input
    curve = read_curve(path) if _is_csv(path) else _text_curve(args, path)
    if args.format == "json":
        _emit(args, to_json({"granularity": curve.granularity, "points": curve.rows()}))
    else:
        _emit(args, to_csv(curve.rows(), CURVE_COLUMNS))


def _fit_input(args, path) -> PowerFit:
    if Path(path).suffix.lower() == ".json":
        with open(path, encoding="utf-8") as fh:
            return PowerFit.from_dict(json.load(fh))
    if _is_csv(path):
        return power_fit(read_points(path))
    if getattr(args, "zipf", False):
        return zipf_fit(frequency_table(_load_doc(path).tokens))
    return heaps_fit(_text_curve(args, path))


def cmd_fit(args):
    fit = _fit_input(args, args.input)
    if args.format == "json":
        _emit(args, to_json(fit.to_dict()))
    else:
        _emit(args, to_csv([fit.to_dict()], FIT_COLUMNS))


def _pair_input(args, path):
    if _is_csv(path):
        if csv_layout(path) == "fragment":
            return read_count_table(path)
        return read_curve(path)
    return _text_curve(args, path)


def cmd_compare(args):
    src = _pair_input(args, args.source)
    tgt = _pair_input(args, args.target)
    src_table = hasattr(src, "kind")
    if src_table != hasattr(tgt, "kind"):
        raise CompareError("cannot compare a per-fragment table with a growth curve")
    if src_table:
        report = compare_tables(src.rows, tgt.rows, src.whole, tgt.whole)
    else:
        report = compare_pair(src, tgt)
    d = report.to_dict()
    if args.format == "json":
        _emit(args, to_json(d))
    else:
        flat = {k: v for k, v in d.items() if not isinstance(v, dict)}
        for side in ("source_fit", "target_fit"):
            for k in FIT_COLUMNS:
                flat[f"{side}_{k}"] = d[side][k] if d[side] else None
        _emit(args, to_csv([flat], sorted(flat)))


def _read_manifest(path) -> list[Path]:
    base = Path(path).parent
    out = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            p = Path(line)
            out.append(p if p.is_absolute() else base / p)
    return out


def cmd_levelling(args):
    src = [_fit_input(args, p) for p in _read_manifest(args.source_manifest)]
    tgt = [_fit_input(args, p) for p in _read_manifest(args.target_manifest)]
    report = levelling_out(src, tgt)
    d = report.to_dict()
    if args.format == "json":
        _emit(args, to_json(d))
    else:
        _emit(args, to_csv([d], list(d)))


def cmd_synth(args):
    spec = ZipfSpec(
        vocab_size=args.vocab, exponent=args.exponent, n_tokens=args.tokens, seed=args.seed
    )
    tokens = zipf_text(spec)
    if args.out:
        write_corpus(tokens, args.out, tokens_per_line=args.line_width)
    else:
        for i in range(0, len(tokens), args.line_width):
            sys.stdout.write(" ".join(tokens[i:i + args.line_width]) + "\n")


# -- parser -----------------------------------------------------------------

def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _add_common(p, chunking=True, step=True):
    if chunking:
        g = p.add_mutually_exclusive_group()
        g.add_argument("--chunk-lines", type=_positive_int, metavar="N",
                       help="fragments of N lines each")
        g.add_argument("--chunk-pattern", metavar="REGEX",
                       help="new fragment at each line matching REGEX")
    if step:
        p.add_argument("--step", type=_positive_int, metavar="N",
                       help="curve point every N tokens")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", metavar="PATH", help="output file (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexdyn", description="Type/token dynamics of texts and translations."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="whole-text and per-fragment summaries")
    p.add_argument("input")
    p.add_argument("--freq", metavar="PATH", help="also write rank,type,frequency CSV")
    _add_common(p, step=False)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("curve", help="cumulative type/token growth curve")
    p.add_argument("input")
    _add_common(p)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("fit", help="power-law fit y = a * x**b")
    p.add_argument("input", help="x,y CSV, curve/count CSV, or text file")
    p.add_argument("--zipf", action="store_true",
                   help="for text input: rank-frequency fit instead of Heaps")
    _add_common(p)
    p.set_defaults(func=cmd_fit, format="json")

    p = sub.add_parser("compare", help="source vs translation report")
    p.add_argument("source")
    p.add_argument("target")
    _add_common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("levelling", help="spread of Heaps coefficients in two cohorts")
    p.add_argument("source_manifest")
    p.add_argument("target_manifest")
    _add_common(p)
    p.set_defaults(func=cmd_levelling)

    p = sub.add_parser("synth", help="write a seeded Zipf corpus")
    p.add_argument("--vocab", type=int, required=True)
    p.add_argument("--exponent", type=float, required=True)
    p.add_argument("--tokens", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--line-width", type=_positive_int, default=12,
                   help="tokens per output line")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_synth)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except FitError as exc:
        code, msg = EXIT_FIT, f"fit error: {exc}"
    except CompareError as exc:
        code, msg = EXIT_COMPARE, f"compare error: {exc}"
    except StatsError as exc:
        code, msg = EXIT_EMPTY, f"empty input: {exc}"
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        code, msg = EXIT_IO, str(exc)
    except (OSError, ValueError) as exc:
        code, msg = EXIT_IO, f"error: {exc}"
    else:
        return EXIT_OK
    print(f"lexdyn: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
