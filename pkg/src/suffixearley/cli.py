"""Command-line entry point.

Exit codes: 0 success (or accept), 1 reject, 2 usage or input error,
3 engines disagree, 4 sentence generation failed.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench, oracle
from .earley import recognize_earley
from .grammar import (GrammarError, UnknownTerminalError, format_sentences, parse_sentences,
                      read_grammar, serialize_grammar, tau2_transform)
from .sentgen import GenConfig, GenerationError, generate_sentences
from .variant import recognize_variant

EXIT_OK, EXIT_REJECT, EXIT_USAGE, EXIT_DISAGREE, EXIT_GENERATE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _write(text, out):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _read_text(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _load_grammar(path):
    try:
        return read_grammar(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def cmd_parse(args):
    g = _load_grammar(args.grammar)
    if args.input_file is not None:
        sentences = parse_sentences(_read_text(args.input_file)) or [()]
    else:
        sentences = [tuple(args.input.split())]
    if args.algorithm == "tau2-earley":
        g = tau2_transform(g)
    all_accepted = True
    for sentence in sentences:
        if args.algorithm == "variant":
            u, t, stats = recognize_variant(g, sentence)
            dump = u.dump() + t.dump()
        else:
            chart, stats = recognize_earley(g, sentence)
            dump = chart.dump()
        print("accept" if stats.accepted else "reject")
        if args.stats:
            print(stats.to_json())
        if args.dump_chart:
            sys.stdout.write(dump)
        all_accepted &= stats.accepted
    return EXIT_OK if all_accepted else EXIT_REJECT


def cmd_compare(args):
    g = _load_grammar(args.grammar)
    sentences = parse_sentences(_read_text(args.sentences))
    if not sentences:
        raise UsageError(f"{args.sentences} holds no sentences")
    try:
        row, _ = bench.compare(g, sentences, name=Path(args.grammar).stem)
    except (bench.EngineDisagreement, bench.InvariantViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    _write(bench.render_report([row], args.format), args.out)
    return EXIT_OK


def cmd_transform(args):
    g = _load_grammar(args.grammar)
    _write(serialize_grammar(tau2_transform(g)), args.out)
    return EXIT_OK


def cmd_generate(args):
    g = _load_grammar(args.grammar)
    try:
        cfg = GenConfig(seed=args.seed, count=args.count, max_depth=args.max_depth,
                        max_len=args.max_len, max_attempts=args.max_attempts)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    try:
        sentences = generate_sentences(g, cfg)
    except GenerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GENERATE
    _write(format_sentences(sentences), args.out)
    return EXIT_OK


def cmd_count_parses(args):
    g = _load_grammar(args.grammar)
    print(oracle.count_acyclic_parses(g, tuple(args.input.split())))
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="suffixearley", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="recognize one sentence")
    p.add_argument("grammar")
    p.add_argument("--algorithm", choices=("earley", "variant", "tau2-earley"), default="earley")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="whitespace-separated terminals")
    src.add_argument("--input-file", help="sentence file")
    p.add_argument("--dump-chart", action="store_true")
    p.add_argument("--stats", action="store_true")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("compare", help="run all engines over a sentence file")
    p.add_argument("grammar")
    p.add_argument("sentences")
    p.add_argument("--format", choices=("csv", "json", "md"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("transform", help="write the two-normal-form cover of a grammar")
    p.add_argument("grammar")
    p.add_argument("--out")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("generate", help="draw random sentences")
    p.add_argument("grammar")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-depth", type=int, default=64)
    p.add_argument("--max-len", type=int, default=40)
    p.add_argument("--max-attempts", type=int, default=1000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("count-parses", help="count acyclic parse trees")
    p.add_argument("grammar")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_count_parses)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GrammarError, UnknownTerminalError, oracle.OracleCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
