"""Command line interface: gbpe learn / apply / restore / stats.

Exit codes: 0 success, 2 usage error, 3 missing or unreadable file,
4 malformed codes file, 5 data error (bad UTF-8, empty corpus, marker
collision, misaligned streams). The GBPE_LOG_LEVEL environment variable
sets the default log level; -v/-q override it.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from contextlib import contextmanager
from typing import IO, Iterator, Optional, Sequence

from .applier import DEFAULT_MARKER, MergeApplier, read_codes, restore, write_codes
from .corpus import load_word_vocabulary
from .errors import (
    AlignmentError,
    CodesParseError,
    EmptyCorpusError,
    GbpeError,
    IngestionError,
    MarkerCollisionError,
)
from .learner import learn
from .measures import MEASURE_KINDS, MeasureConfig
from .stats import corpus_stats, per_sentence_tsv, report_to_tsv

logger = logging.getLogger("gbpe")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_CODES = 4
EXIT_DATA = 5


def _positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return number


def _marker_arg(value: str) -> str:
    if not value or any(ch in " \t\r\n" for ch in value):
        raise argparse.ArgumentTypeError("marker must be non-empty, no whitespace")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gbpe",
        description="Subword segmentation via learned merge operations "
        "under pluggable goodness measures.",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="increase log verbosity (-v info, -vv debug)",
    )
    parser.add_argument(
        "-q", "--quiet", action="store_true", help="only log errors"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    learn_p = sub.add_parser("learn", help="learn merge operations from text")
    learn_p.add_argument(
        "--input", "-i", action="append", required=True, metavar="PATH",
        help="tokenized input file, '-' for stdin; repeat to learn on the "
        "union of several corpora",
    )
    learn_p.add_argument(
        "--output", "-o", default="-", metavar="PATH",
        help="codes file to write (default: stdout)",
    )
    learn_p.add_argument(
        "--measure", choices=MEASURE_KINDS, default="frq",
        help="goodness measure (default: %(default)s)",
    )
    learn_p.add_argument(
        "--weighted", action=argparse.BooleanOptionalAction, default=True,
        help="frequency-weight the measure (default: on)",
    )
    learn_p.add_argument(
        "--merges", "-n", type=_positive_int, default=10000, metavar="N",
        help="number of merge operations to learn (default: %(default)s)",
    )
    learn_p.add_argument(
        "--min-pair-count", type=_positive_int, default=2, metavar="M",
        help="prune candidate pairs below this weighted count "
        "(default: %(default)s)",
    )

    apply_p = sub.add_parser("apply", help="segment text with learned codes")
    apply_p.add_argument("--codes", "-c", required=True, metavar="PATH")
    apply_p.add_argument("--input", "-i", default="-", metavar="PATH")
    apply_p.add_argument("--output", "-o", default="-", metavar="PATH")
    apply_p.add_argument("--marker", type=_marker_arg, default=DEFAULT_MARKER)
    apply_p.add_argument(
        "--escape", action="store_true",
        help="replace in-word marker text instead of failing",
    )

    restore_p = sub.add_parser("restore", help="undo segmentation")
    restore_p.add_argument("--input", "-i", default="-", metavar="PATH")
    restore_p.add_argument("--output", "-o", default="-", metavar="PATH")
    restore_p.add_argument("--marker", type=_marker_arg, default=DEFAULT_MARKER)

    stats_p = sub.add_parser(
        "stats", help="report segmentation statistics as TSV"
    )
    stats_p.add_argument(
        "--input", "-i", required=True, metavar="PATH", help="original text"
    )
    stats_p.add_argument(
        "--segmented", "-s", required=True, metavar="PATH", help="segmented text"
    )
    stats_p.add_argument("--codes", "-c", required=True, metavar="PATH")
    stats_p.add_argument("--output", "-o", default="-", metavar="PATH")
    stats_p.add_argument("--marker", type=_marker_arg, default=DEFAULT_MARKER)
    stats_p.add_argument(
        "--per-sentence", action="store_true",
        help="emit one row per line instead of corpus averages",
    )
    return parser


def _configure_logging(verbose: int, quiet: bool) -> None:
    env_level = os.environ.get("GBPE_LOG_LEVEL", "").upper()
    level = getattr(logging, env_level, logging.WARNING)
    if quiet:
        level = logging.ERROR
    elif verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr
    )


@contextmanager
def _open_text(path: str, mode: str) -> Iterator[IO[str]]:
    if path == "-":
        yield sys.stdin if mode == "r" else sys.stdout
        return
    with open(path, mode, encoding="utf-8", newline="\n" if mode == "w" else None) as f:
        yield f


def _cmd_learn(args: argparse.Namespace) -> int:
    sources = [sys.stdin.buffer if p == "-" else p for p in args.input]
    vocab = load_word_vocabulary(sources)
    logger.info(
        "loaded %d word types, %d tokens", len(vocab), sum(vocab.values())
    )
    config = MeasureConfig(args.measure, args.weighted)
    result = learn(
        vocab, config, n_merges=args.merges, min_count=args.min_pair_count
    )
    if result.exhausted:
        print(
            f"gbpe learn: candidates exhausted after "
            f"{result.merges_performed} of {args.merges} merges",
            file=sys.stderr,
        )
    with _open_text(args.output, "w") as out:
        write_codes(result.merge_list, out)
    logger.info(
        "learned %d merges (%s), %d distinct symbols",
        result.merges_performed, config.name, len(result.state.alphabet),
    )
    return EXIT_OK


def _cmd_apply(args: argparse.Namespace) -> int:
    applier = MergeApplier(read_codes(args.codes))
    with _open_text(args.input, "r") as src, _open_text(args.output, "w") as out:
        for line in src:
            out.write(
                applier.segment_line(line.rstrip("\r\n"), args.marker, args.escape)
            )
            out.write("\n")
    return EXIT_OK


def _cmd_restore(args: argparse.Namespace) -> int:
    with _open_text(args.input, "r") as src, _open_text(args.output, "w") as out:
        for line in src:
            out.write(restore(line.rstrip("\r\n"), args.marker))
            out.write("\n")
    return EXIT_OK


def _cmd_stats(args: argparse.Namespace) -> int:
    merges = read_codes(args.codes)
    with _open_text(args.input, "r") as orig, _open_text(args.segmented, "r") as seg:
        with _open_text(args.output, "w") as out:
            if args.per_sentence:
                for row in per_sentence_tsv(orig, seg, args.marker):
                    out.write(row + "\n")
            else:
                report = corpus_stats(orig, seg, merges, args.marker)
                out.write(report_to_tsv(report))
    return EXIT_OK


_COMMANDS = {
    "learn": _cmd_learn,
    "apply": _cmd_apply,
    "restore": _cmd_restore,
    "stats": _cmd_stats,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose, args.quiet)
    try:
        return _COMMANDS[args.command](args)
    except FileNotFoundError as exc:
        print(f"gbpe {args.command}: file not found: {exc.filename}", file=sys.stderr)
        return EXIT_IO
    except IsADirectoryError as exc:
        print(f"gbpe {args.command}: is a directory: {exc.filename}", file=sys.stderr)
        return EXIT_IO
    except CodesParseError as exc:
        print(f"gbpe {args.command}: {exc}", file=sys.stderr)
        return EXIT_CODES
    except (IngestionError, EmptyCorpusError, MarkerCollisionError, AlignmentError) as exc:
        print(f"gbpe {args.command}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except GbpeError as exc:
        print(f"gbpe {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
