"""Command-line interface.

Exit codes: 0 success, 1 usage error (bad flags, unreadable input), 2 pipeline
or resource error (the error code is printed on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .corpus import build_index_from_dir, load_index, save_index
from .errors import SkewSumError
from .moments import ROUNDINGS
from .pipeline import PipelineConfig, segment_report, stats_report, summarize
from .selector import BOUNDARY_SPACES
from .stopwords import StopwordSet, load_stopword_dir
from .summarizer import MODES
from .weighting import IDF_VARIANTS, ORDERINGS, TF_VARIANTS

PRECISION = 6

STATS_LABELS = [
    ("E", "E"), ("D", "D"), ("σ", "sigma"), ("σ³", "sigma3"), ("E₁", "E1"),
    ("E₂", "E2"), ("E₃", "E3"), ("μ₃", "mu3"), ("A_s", "As"),
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _num(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, float):
        return f"{x:.{PRECISION}g}"
    return str(x)


def _add_pipeline_args(p: argparse.ArgumentParser):
    p.add_argument("file", help="input text (UTF-8); '-' reads standard input")
    sw = p.add_mutually_exclusive_group()
    sw.add_argument("--stopwords-dir", metavar="DIR",
                    help="directory with unigrams.txt, collocations.txt, rulebase.txt")
    sw.add_argument("--no-stopwords", action="store_true", help="skip stop-word removal")
    p.add_argument("--index", metavar="FILE",
                   help="corpus index JSON (default: the input as a one-document corpus)")
    p.add_argument("--n", type=int, default=3, help="n-gram order (default 3)")
    p.add_argument("--ratio", type=float, default=0.30,
                   help="summary budget as a fraction of input words (default 0.30)")
    p.add_argument("--mode", choices=MODES, default="token")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--epsilon", type=float, default=1e-9,
                   help="|skewness| at or below this counts as zero")
    p.add_argument("--rounding", choices=ROUNDINGS, default="nearest")
    p.add_argument("--ordering", choices=ORDERINGS, default="first_occurrence")
    p.add_argument("--tf", choices=TF_VARIANTS, default="relative", dest="tf_variant")
    p.add_argument("--idf", choices=IDF_VARIANTS, default="smooth", dest="idf_variant")
    p.add_argument("--boundaries-in", choices=BOUNDARY_SPACES, default="filtered")
    p.add_argument("--allow-degenerate", action="store_true",
                   help="keep the whole text when only one word carries weight")
    p.add_argument("--collocation-fixpoint", action="store_true",
                   help="repeat collocation removal until nothing matches")
    p.add_argument("-o", "--output", metavar="FILE", help="write to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="skewsum", description="Skewness-driven extractive summarization "
                     "of Uzbek (Latin-script) text.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("summarize", help="summarize a text")
    _add_pipeline_args(p)
    p = sub.add_parser("stats", help="print the word-position distribution statistics")
    _add_pipeline_args(p)
    p.add_argument("--vocab", action="store_true",
                   help="also list the weighted vocabulary (rank, word, first_pos, w, p)")
    p = sub.add_parser("segment", help="print the retained segment decision")
    _add_pipeline_args(p)

    p = sub.add_parser("index", help="build or inspect a corpus index")
    isub = p.add_subparsers(dest="index_command", required=True, parser_class=_Parser)
    b = isub.add_parser("build", help="index every *.txt file of a directory")
    b.add_argument("directory")
    b.add_argument("-o", "--output", required=True, metavar="FILE")
    s = isub.add_parser("show", help="describe an index file")
    s.add_argument("index_file")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--top", type=int, default=10, help="list the N most frequent terms")
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.buffer.read().decode("utf-8")
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"input file not found: {path}")
    return p.read_bytes().decode("utf-8")


def _config(args) -> PipelineConfig:
    return PipelineConfig(
        n=args.n, ratio=args.ratio, epsilon_skew=args.epsilon, rounding=args.rounding,
        ordering=args.ordering, idf_variant=args.idf_variant, tf_variant=args.tf_variant,
        mode=args.mode, allow_degenerate=args.allow_degenerate,
        boundaries_in=args.boundaries_in, collocation_fixpoint=args.collocation_fixpoint)


def _render_stats(d: dict) -> list[str]:
    st = d["stats"]
    lines = [f"{label}\t{_num(st[key])}" for label, key in STATS_LABELS]
    lines += [f"K\t{_num(st['k_idx'])}", f"M\t{_num(st['m_idx'])}",
              f"degenerate\t{str(st['degenerate']).lower()}"]
    lines += [f"{k}\t{v}" for k, v in d["counts"].items()]
    return lines


def _render_segment(d: dict) -> list[str]:
    seg = d["segment"]
    return [
        f"kind\t{seg['kind']}",
        f"k_word\t{seg['k_word'] or '-'}",
        f"m_word\t{seg['m_word'] or '-'}",
        f"k1\t{_num(seg['k1'])}",
        f"m1\t{_num(seg['m1'])}",
        f"token_range\t{seg['token_range'][0]}\t{seg['token_range'][1]}",
        f"char_range\t{seg['char_range'][0]}\t{seg['char_range'][1]}",
        f"space\t{seg['space']}",
    ]


def _run_pipeline(args) -> str:
    raw = _read_input(args.file)
    config = _config(args)
    sw = StopwordSet() if args.no_stopwords or not args.stopwords_dir \
        else load_stopword_dir(args.stopwords_dir)
    index = load_index(args.index) if args.index else None

    if args.command == "summarize":
        report = summarize(raw, config, sw, index)
    elif args.command == "segment":
        report = segment_report(raw, config, sw, index)
    else:
        report = stats_report(raw, config, sw, index)
    with_vocab = getattr(args, "vocab", False)
    d = report.to_dict(precision=PRECISION, vocabulary=with_vocab)
    if args.format == "json":
        return json.dumps(d, ensure_ascii=False, indent=2)

    if args.command == "summarize":
        return d["summary"]
    if args.command == "segment":
        return "\n".join(_render_segment(d))
    lines = _render_stats(d)
    if with_vocab:
        lines.append("")
        lines.append("rank\tword\tfirst_pos\tw\tp")
        lines += [f"{e['rank']}\t{e['word']}\t{e['first_pos']}\t{_num(e['w'])}\t{_num(e['p'])}"
                  for e in d["vocabulary"]]
    return "\n".join(lines)


def _run_index(args) -> str:
    if args.index_command == "build":
        index = build_index_from_dir(args.directory)
        save_index(index, args.output)
        return f"indexed {index.num_docs} documents, {len(index)} terms -> {args.output}"
    index = load_index(args.index_file)
    top = sorted(index.doc_freq.items(), key=lambda kv: (-kv[1], kv[0]))[:max(args.top, 0)]
    if args.format == "json":
        return json.dumps({"num_docs": index.num_docs, "fingerprint": index.fingerprint,
                           "terms": len(index), "top": [list(kv) for kv in top]},
                          ensure_ascii=False, indent=2)
    lines = [f"num_docs\t{index.num_docs}", f"terms\t{len(index)}",
             f"fingerprint\t{index.fingerprint}"]
    lines += [f"{term}\t{df}" for term, df in top]
    return "\n".join(lines)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1

    try:
        out = _run_index(args) if args.command == "index" else _run_pipeline(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"skewsum: error: {exc}", file=sys.stderr)
        return 1
    except UnicodeDecodeError as exc:
        print(f"skewsum: error: ENCODING_ERROR: {exc}", file=sys.stderr)
        return 2
    except SkewSumError as exc:
        print(f"skewsum: error: {exc.code}: {exc}", file=sys.stderr)
        return 2

    output = getattr(args, "output", None)
    if output and args.command != "index":
        Path(output).write_text(out + "\n", encoding="utf-8")
    else:
        sys.stdout.write(out + "\n")
    return 0


def main():
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    sys.exit(run())


if __name__ == "__main__":
    main()
