"""Applying learned merges to text and restoring segmented text.

Merges are replayed in learned order: conceptually every merge operation
is applied, one after the other, to the character-split word with greedy
left-to-right replacement. :class:`MergeApplier` implements that replay
lazily per word, visiting only the merge ranks whose pairs actually occur,
and memoises results per word type, so segmenting Zipfian text costs one
dictionary lookup for almost every token.

Non-final subwords are suffixed with a continuation marker ("@@" by
default); :func:`restore` deletes marker-plus-space sequences (and a bare
trailing marker) to undo the segmentation.
"""

from __future__ import annotations

import re
from bisect import bisect_right
from heapq import heappop, heappush
from pathlib import Path
from typing import IO, Iterable, Optional, Union

from .corpus import Pair, greedy_replace, tokens
from .errors import CodesParseError, MarkerCollisionError
from .learner import MergeList
from .measures import MEASURE_KINDS, MeasureConfig

DEFAULT_MARKER = "@@"

#: Unicode noncharacter substituted for in-word marker text under --escape.
ESCAPE_CHAR = "﷐"

_HEADER_RE = re.compile(r"#gbpe v(\d+) measure=(\w+) weighted=([01]) merges=(\d+)")


class MergeApplier:
    """Replays a merge list over words, with a per-word-type memo cache.

    A loaded applier is safe to share across threads for segmentation; the
    memo cache is only ever written with values that are pure functions of
    the word, so racing writers agree.
    """

    def __init__(self, merges: MergeList, cache_size: Optional[int] = None):
        self.merges = merges
        self.cache_size = cache_size
        self._ops = list(merges.merges)
        ranks: dict[Pair, list[int]] = {}
        for rank, pair in enumerate(self._ops):
            ranks.setdefault(pair, []).append(rank)
        self._ranks = {pair: tuple(r) for pair, r in ranks.items()}
        self._cache: dict[str, tuple[str, ...]] = {}

    def segment_word(self, word: str) -> tuple[str, ...]:
        """Split one word into subword symbols by replaying the merges.

        Characters never seen in training simply pass through as
        single-character symbols.
        """
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        symbols = self._replay(list(word))
        result = tuple(symbols)
        if self.cache_size is not None and len(self._cache) >= self.cache_size:
            self._cache.pop(next(iter(self._cache)))
        self._cache[word] = result
        return result

    def _replay(self, symbols: list[str]) -> list[str]:
        ranks = self._ranks
        if len(symbols) < 2 or not ranks:
            return symbols
        heap: list[int] = []
        for pair in zip(symbols, symbols[1:]):
            pair_ranks = ranks.get(pair)
            if pair_ranks:
                heappush(heap, pair_ranks[0])
        cursor = -1
        while heap:
            rank = heappop(heap)
            if rank <= cursor:
                continue
            cursor = rank
            left, right = self._ops[rank]
            present = any(
                symbols[i] == left and symbols[i + 1] == right
                for i in range(len(symbols) - 1)
            )
            if not present:
                continue
            symbols, _ = greedy_replace(symbols, left, right, left + right)
            for pair in zip(symbols, symbols[1:]):
                pair_ranks = ranks.get(pair)
                if not pair_ranks:
                    continue
                index = bisect_right(pair_ranks, cursor)
                if index < len(pair_ranks):
                    heappush(heap, pair_ranks[index])
        return symbols

    def segment_line(
        self, line: str, marker: str = DEFAULT_MARKER, escape: bool = False
    ) -> str:
        """Segment every word of a whitespace-tokenized line.

        Subwords are joined by single spaces with every non-final subword
        suffixed by the marker. Words already containing the marker are an
        error unless ``escape`` substitutes the reserved escape character,
        since restoring them would be ambiguous.
        """
        _check_marker(marker)
        parts: list[str] = []
        for word in tokens(line):
            if marker in word:
                if not escape:
                    raise MarkerCollisionError(
                        f"input word contains the marker {marker!r}: {word!r}"
                    )
                word = word.replace(marker, ESCAPE_CHAR)
            subwords = self.segment_word(word)
            parts.extend(s + marker for s in subwords[:-1])
            parts.append(subwords[-1])
        return " ".join(parts)

    def segment_lines(
        self,
        lines: Iterable[str],
        marker: str = DEFAULT_MARKER,
        escape: bool = False,
    ) -> Iterable[str]:
        for line in lines:
            yield self.segment_line(line, marker, escape)


def _check_marker(marker: str) -> None:
    if not marker or any(ch in " \t\r\n" for ch in marker):
        raise ValueError(f"marker must be non-empty and whitespace-free: {marker!r}")


def _shared_applier(merges: MergeList) -> MergeApplier:
    applier = getattr(merges, "_applier", None)
    if applier is None or applier.merges is not merges:
        applier = MergeApplier(merges)
        merges._applier = applier
    return applier


def apply_merges(merges: MergeList, word: str) -> tuple[str, ...]:
    """Segment a single word with the merge list (memoised per word type)."""
    return _shared_applier(merges).segment_word(word)


def segment_text(
    merges: MergeList,
    line: str,
    marker: str = DEFAULT_MARKER,
    escape: bool = False,
) -> str:
    """Segment one line; see :meth:`MergeApplier.segment_line`."""
    return _shared_applier(merges).segment_line(line, marker, escape)


def restore(line: str, marker: str = DEFAULT_MARKER) -> str:
    """Rejoin subwords by deleting marker+space pairs and a trailing marker.

    Deletion runs to a fixed point so the operation is idempotent even on
    text that was never produced by segmentation; a trailing marker is
    tolerated as a truncation artifact.
    """
    _check_marker(marker)
    joined = marker + " "
    while joined in line:
        line = line.replace(joined, "")
    while line.endswith(marker):
        line = line[: -len(marker)]
    return line


# ---------------------------------------------------------------------------
# Codes file format: one header line, then one "LEFT RIGHT" line per merge.


def _format_header(merges: MergeList) -> str:
    config = merges.measure_config
    return (
        f"#gbpe v1 measure={config.kind} "
        f"weighted={int(config.weighted)} merges={merges.requested_merges}"
    )


def write_codes(merges: MergeList, destination: Union[str, Path, IO[str]]) -> None:
    """Write the merge list with its header; inverse of :func:`read_codes`."""
    text = _format_header(merges) + "\n" + "".join(
        f"{left} {right}\n" for left, right in merges.merges
    )
    if isinstance(destination, (str, Path)):
        with open(destination, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        destination.write(text)


def read_codes(source: Union[str, Path, IO[str]]) -> MergeList:
    """Parse a codes file, validating the header and every merge line."""
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8", newline="") as handle:
            text = handle.read()
        name = str(source)
    else:
        text = source.read()
        name = getattr(source, "name", "<codes>")
    if not text:
        raise CodesParseError(f"{name}: empty codes file")
    if not text.endswith("\n"):
        raise CodesParseError(f"{name}: truncated file (no final newline)")
    lines = text.split("\n")[:-1]
    match = _HEADER_RE.fullmatch(lines[0])
    if not match:
        raise CodesParseError(f"{name}: line 1: malformed header")
    version, kind, weighted, requested = match.groups()
    if version != "1":
        raise CodesParseError(f"{name}: unsupported codes version v{version}")
    if kind not in MEASURE_KINDS:
        raise CodesParseError(f"{name}: line 1: unknown measure {kind!r}")
    merges: list[Pair] = []
    for number, line in enumerate(lines[1:], start=2):
        fields = line.split(" ")
        if len(fields) != 2 or not fields[0] or not fields[1] or "\t" in line:
            raise CodesParseError(
                f"{name}: line {number}: expected 'LEFT RIGHT', got {line!r}"
            )
        merges.append((fields[0], fields[1]))
    if len(merges) > int(requested):
        raise CodesParseError(
            f"{name}: {len(merges)} merge lines exceed header merges={requested}"
        )
    return MergeList(
        merges,
        MeasureConfig(kind, weighted == "1"),  # type: ignore[arg-type]
        int(requested),
    )
