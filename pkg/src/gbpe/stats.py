"""Segmentation statistics: how much segmentation changed the text.

Reports two per-sentence quantities and their corpus averages: the number
of words split into two or more subwords, and the token-count increase of
the segmented line over the original line.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .applier import DEFAULT_MARKER, MergeApplier, restore
from .corpus import tokens
from .errors import AlignmentError
from .learner import MergeList


@dataclass(frozen=True)
class SegStatsReport:
    avg_segmented_words_per_sentence: float
    avg_length_increase_per_sentence: float
    sentence_count: int
    distinct_symbol_count: int
    merge_count: int


def subword_groups(segmented_line: str, marker: str = DEFAULT_MARKER) -> list[list[str]]:
    """Group the subword tokens of a segmented line back into words.

    A token ending with the marker continues the current word. An
    unterminated trailing group is kept, mirroring restore's tolerance of
    truncated output.
    """
    groups: list[list[str]] = []
    current: list[str] = []
    for token in tokens(segmented_line):
        current.append(token)
        if not token.endswith(marker):
            groups.append(current)
            current = []
    if current:
        groups.append(current)
    return groups


def sentence_stats(
    original_line: str,
    segmented_line: str,
    marker: str = DEFAULT_MARKER,
) -> tuple[int, int]:
    """(words split into >= 2 subwords, token-count increase) for one line."""
    if restore(segmented_line, marker) != original_line:
        raise AlignmentError(
            f"segmented line does not restore to the original: "
            f"{segmented_line!r} vs {original_line!r}"
        )
    groups = subword_groups(segmented_line, marker)
    segmented_words = sum(1 for group in groups if len(group) >= 2)
    length_increase = sum(len(group) for group in groups) - len(tokens(original_line))
    return segmented_words, length_increase


def corpus_stats(
    original: Iterable[str],
    segmented: Iterable[str],
    merges: MergeList,
    marker: str = DEFAULT_MARKER,
) -> SegStatsReport:
    """Average sentence statistics over paired original/segmented streams.

    The distinct symbol count is obtained by segmenting every word type of
    the original stream with the merge list.
    """
    applier = MergeApplier(merges)
    sentence_count = 0
    split_total = 0
    increase_total = 0
    word_types: set[str] = set()
    original_iter = iter(original)
    segmented_iter = iter(segmented)
    while True:
        line = next(original_iter, None)
        seg_line = next(segmented_iter, None)
        if (line is None) != (seg_line is None):
            raise AlignmentError("original and segmented streams differ in length")
        if line is None:
            break
        line = line.rstrip("\r\n")
        seg_line = seg_line.rstrip("\r\n")
        split, increase = sentence_stats(line, seg_line, marker)
        sentence_count += 1
        split_total += split
        increase_total += increase
        word_types.update(tokens(line))
    symbols: set[str] = set()
    for word in word_types:
        symbols.update(applier.segment_word(word))
    return SegStatsReport(
        avg_segmented_words_per_sentence=(
            split_total / sentence_count if sentence_count else 0.0
        ),
        avg_length_increase_per_sentence=(
            increase_total / sentence_count if sentence_count else 0.0
        ),
        sentence_count=sentence_count,
        distinct_symbol_count=len(symbols),
        merge_count=len(merges.merges),
    )


REPORT_COLUMNS = (
    "sentences",
    "avg_segmented_words",
    "avg_length_increase",
    "distinct_symbols",
    "merges",
)

PER_SENTENCE_COLUMNS = ("line", "segmented_words", "length_increase")


def report_to_tsv(report: SegStatsReport) -> str:
    header = "\t".join(REPORT_COLUMNS)
    row = (
        f"{report.sentence_count}"
        f"\t{report.avg_segmented_words_per_sentence:.6f}"
        f"\t{report.avg_length_increase_per_sentence:.6f}"
        f"\t{report.distinct_symbol_count}"
        f"\t{report.merge_count}"
    )
    return header + "\n" + row + "\n"


def per_sentence_tsv(
    original: Iterable[str],
    segmented: Iterable[str],
    marker: str = DEFAULT_MARKER,
) -> Iterable[str]:
    """One TSV row per line pair, preceded by a header row."""
    yield "\t".join(PER_SENTENCE_COLUMNS)
    index = 0
    original_iter = iter(original)
    segmented_iter = iter(segmented)
    while True:
        line = next(original_iter, None)
        seg_line = next(segmented_iter, None)
        if (line is None) != (seg_line is None):
            raise AlignmentError("original and segmented streams differ in length")
        if line is None:
            break
        split, increase = sentence_stats(
            line.rstrip("\r\n"), seg_line.rstrip("\r\n"), marker
        )
        yield f"{index}\t{split}\t{increase}"
        index += 1
