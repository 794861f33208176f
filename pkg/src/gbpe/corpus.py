"""Corpus ingestion and the mutable per-word segmentation state.

A corpus is reduced to a word-type frequency table (a plain ``Counter``).
:class:`SegmentationState` then tracks the current symbol sequence of every
word type together with incrementally maintained statistics: weighted
adjacent-pair counts, per-word occurrence counts, containing-type frequency
sums, weighted token counts and, optionally, accessor (neighbour symbol)
sets used by boundary-based scoring.

Adjacent pairs are counted greedily, left to right and without overlap
inside each word, so a run of k identical symbols holds ``k // 2``
occurrences of the self-pair. Every helper in this module uses that same
occurrence definition.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from importlib.resources import files
from pathlib import Path
from typing import IO, Iterable, Iterator, Mapping, Union

from .errors import EmptyCorpusError, IngestionError

Pair = tuple[str, str]

#: Accessor placeholder for occurrences that touch the start or end of a word.
WORD_BOUNDARY = None

TextSource = Union[str, Path, IO[bytes], IO[str], Iterable[str]]


def tokens(line: str) -> list[str]:
    """Split one line into words on ASCII space and tab."""
    return [t for t in line.rstrip("\r\n").replace("\t", " ").split(" ") if t]


def vocab_from_lines(lines: Iterable[str]) -> Counter[str]:
    vocab: Counter[str] = Counter()
    for line in lines:
        vocab.update(tokens(line))
    return vocab


def _vocab_from_binary(stream: IO[bytes], name: str) -> Counter[str]:
    vocab: Counter[str] = Counter()
    consumed = 0
    for raw in stream:
        try:
            line = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise IngestionError(
                f"{name}: invalid UTF-8 at byte offset {consumed + exc.start}"
            ) from exc
        vocab.update(tokens(line))
        consumed += len(raw)
    return vocab


def load_word_vocabulary(sources: Iterable[TextSource]) -> Counter[str]:
    """Count word types across one or more text sources (union semantics).

    Each source may be a path, an open binary or text file, or any iterable
    of lines. Counts from all sources are summed. Raises
    :class:`IngestionError` on invalid UTF-8 (with the byte offset for
    path/binary sources) and :class:`EmptyCorpusError` when no tokens at
    all were read.
    """
    vocab: Counter[str] = Counter()
    for source in sources:
        if isinstance(source, (str, Path)):
            with open(source, "rb") as handle:
                vocab += _vocab_from_binary(handle, str(source))
        elif hasattr(source, "read") and "b" in getattr(source, "mode", ""):
            vocab += _vocab_from_binary(source, getattr(source, "name", "<stream>"))
        else:
            try:
                vocab += vocab_from_lines(source)
            except UnicodeDecodeError as exc:
                raise IngestionError(
                    f"invalid UTF-8 at byte offset {exc.start}"
                ) from exc
    if sum(vocab.values()) == 0:
        raise EmptyCorpusError("no tokens found in any input")
    return vocab


def validate_vocabulary(vocab: Mapping[str, int]) -> None:
    if not vocab:
        raise EmptyCorpusError("vocabulary is empty")
    for word, freq in vocab.items():
        if not word:
            raise ValueError("empty word type in vocabulary")
        if any(ch in " \t\r\n" for ch in word):
            raise ValueError(f"word type contains whitespace: {word!r}")
        if freq < 1:
            raise ValueError(f"non-positive frequency for {word!r}: {freq}")


def sample_corpus_path() -> Path:
    """Path of the bundled synthetic sample corpus."""
    return Path(str(files("gbpe").joinpath("data/sample_corpus.txt")))


# ---------------------------------------------------------------------------
# Greedy occurrence helpers shared by the state, the scorers and the applier.


def iter_greedy_spans(symbols: list[str]) -> Iterator[tuple[Pair, int]]:
    """Yield ``(pair, start)`` for every greedy occurrence of every pair."""
    run_start = 0
    for i in range(len(symbols) - 1):
        a = symbols[i]
        if i and a != symbols[i - 1]:
            run_start = i
        b = symbols[i + 1]
        if a == b and (i - run_start) % 2:
            continue
        yield (a, b), i


def greedy_pair_counts(symbols: list[str]) -> dict[Pair, int]:
    counts: dict[Pair, int] = {}
    run_start = 0
    for i in range(len(symbols) - 1):
        a = symbols[i]
        if i and a != symbols[i - 1]:
            run_start = i
        b = symbols[i + 1]
        if a == b and (i - run_start) % 2:
            continue
        pair = (a, b)
        counts[pair] = counts.get(pair, 0) + 1
    return counts


def greedy_span_starts(symbols: list[str], left: str, right: str) -> list[int]:
    """Start indices of greedy occurrences of one specific pair."""
    starts = []
    i = 0
    last = len(symbols) - 1
    while i < last:
        if symbols[i] == left and symbols[i + 1] == right:
            starts.append(i)
            i += 2
        else:
            i += 1
    return starts


def greedy_replace(
    symbols: list[str], left: str, right: str, merged: str
) -> tuple[list[str], int]:
    """Replace greedy occurrences of (left, right) by the merged symbol.

    Returns the rewritten sequence and the number of replacements.
    """
    out: list[str] = []
    append = out.append
    i = 0
    size = len(symbols)
    replaced = 0
    while i < size:
        if i < size - 1 and symbols[i] == left and symbols[i + 1] == right:
            append(merged)
            i += 2
            replaced += 1
        else:
            append(symbols[i])
            i += 1
    return out, replaced


# ---------------------------------------------------------------------------


@dataclass
class PairStats:
    """Statistics of one candidate pair at one point in time."""

    count: int                      # weighted greedy occurrence count
    occurrences: dict[str, int]     # word type -> greedy occurrences in it
    freq_sum: int                   # summed f(w) over containing word types


@dataclass
class MergeDelta:
    """What one corpus-wide merge changed."""

    merged_symbol: str
    replaced: int                                  # weighted occurrences replaced
    count_changes: dict[Pair, tuple[int, int]]     # pair -> (before, after)
    accessor_affected: set[Pair] = field(default_factory=set)


class SegmentationState:
    """Current segmentation of every word type plus derived pair statistics.

    The state is built by a full scan and afterwards kept in sync
    incrementally by :meth:`apply_merge`; ``recounted()`` rebuilds an
    equivalent state from scratch, which the test suite uses to check that
    the incremental bookkeeping never drifts.

    Maintained maps:

    * ``seqs``: word type -> list of symbols (concatenation == word type)
    * ``pair_counts``: pair -> weighted greedy occurrence count
    * ``pair_occurrences``: pair -> {word type: greedy occurrences}, entries
      strictly positive
    * ``pair_freq_sums``: pair -> summed f(w) over containing word types
    * ``token_counts`` / ``total_tokens``: weighted symbol counts c(x), |X|

    When ``track_accessors`` is on, two refcount maps record how many
    greedy occurrences see each distinct left/right neighbour symbol
    (``WORD_BOUNDARY`` at word edges), giving O(1) distinct-neighbour
    counts.

    A state has a single writer (the learner); once mutation stops it can
    be shared freely for concurrent read-only scoring.
    """

    def __init__(
        self,
        freqs: Mapping[str, int],
        seqs: Mapping[str, list[str]],
        *,
        track_accessors: bool = False,
    ):
        self.freqs: dict[str, int] = dict(freqs)
        self.seqs: dict[str, list[str]] = {w: list(s) for w, s in seqs.items()}
        self.track_accessors = track_accessors
        self.token_counts: dict[str, int] = {}
        self.total_tokens = 0
        self.pair_counts: dict[Pair, int] = {}
        self.pair_occurrences: dict[Pair, dict[str, int]] = {}
        self.pair_freq_sums: dict[Pair, int] = {}
        self.pred_types: dict[Pair, dict[object, int]] = {}
        self.succ_types: dict[Pair, dict[object, int]] = {}
        self._rebuild()

    @property
    def alphabet(self) -> set[str]:
        """Symbol types currently present in at least one word."""
        return set(self.token_counts)

    def recounted(self) -> "SegmentationState":
        """Fresh state rebuilt from the current segmentations by full scan."""
        return SegmentationState(
            self.freqs, self.seqs, track_accessors=self.track_accessors
        )

    def _rebuild(self) -> None:
        token_counts = self.token_counts
        for word, symbols in self.seqs.items():
            if "".join(symbols) != word:
                raise ValueError(f"segmentation does not spell {word!r}")
            freq = self.freqs[word]
            for symbol in symbols:
                token_counts[symbol] = token_counts.get(symbol, 0) + freq
            self.total_tokens += freq * len(symbols)
            for pair, k in greedy_pair_counts(symbols).items():
                self.pair_counts[pair] = self.pair_counts.get(pair, 0) + k * freq
                self.pair_occurrences.setdefault(pair, {})[word] = k
                self.pair_freq_sums[pair] = self.pair_freq_sums.get(pair, 0) + freq
            if self.track_accessors:
                self._shift_accessors(symbols, +1)

    def _shift_accessors(self, symbols: list[str], delta: int) -> None:
        pred_types = self.pred_types
        succ_types = self.succ_types
        size = len(symbols)
        for pair, i in iter_greedy_spans(symbols):
            before = symbols[i - 1] if i else WORD_BOUNDARY
            after = symbols[i + 2] if i + 2 < size else WORD_BOUNDARY
            for table, accessor in ((pred_types, before), (succ_types, after)):
                entry = table.setdefault(pair, {})
                value = entry.get(accessor, 0) + delta
                if value:
                    entry[accessor] = value
                else:
                    del entry[accessor]
                    if not entry:
                        del table[pair]

    def apply_merge(self, pair: Pair) -> MergeDelta:
        """Merge every greedy occurrence of ``pair`` across all word types.

        Only word types containing the pair are touched. Returns the set of
        pair-statistic changes so callers can update caches incrementally.
        Raises ``KeyError`` when the pair has no occurrences.
        """
        left, right = pair
        merged = left + right
        containing = list(self.pair_occurrences[pair])
        changes: dict[Pair, tuple[int, int]] = {}
        accessor_affected: set[Pair] = set()
        replaced_total = 0
        self_pair = left == right
        token_counts = self.token_counts
        pair_counts = self.pair_counts
        pair_occurrences = self.pair_occurrences
        pair_freq_sums = self.pair_freq_sums
        track = self.track_accessors

        for word in containing:
            old = self.seqs[word]
            freq = self.freqs[word]
            new, replaced = greedy_replace(old, left, right, merged)
            weighted = replaced * freq
            replaced_total += weighted

            if self_pair:
                token_counts[left] -= 2 * weighted
            else:
                token_counts[left] -= weighted
                token_counts[right] -= weighted
            if token_counts[left] == 0:
                del token_counts[left]
            if not self_pair and token_counts.get(right) == 0:
                del token_counts[right]
            token_counts[merged] = token_counts.get(merged, 0) + weighted
            self.total_tokens -= weighted

            old_counts = greedy_pair_counts(old)
            new_counts = greedy_pair_counts(new)
            for p in old_counts.keys() | new_counts.keys():
                k_old = old_counts.get(p, 0)
                k_new = new_counts.get(p, 0)
                if k_old == k_new:
                    continue
                if p not in changes:
                    changes[p] = (pair_counts.get(p, 0), 0)
                total = pair_counts.get(p, 0) + (k_new - k_old) * freq
                if total:
                    pair_counts[p] = total
                else:
                    del pair_counts[p]
                occ = pair_occurrences.setdefault(p, {})
                if k_new:
                    if not k_old:
                        pair_freq_sums[p] = pair_freq_sums.get(p, 0) + freq
                    occ[word] = k_new
                else:
                    del occ[word]
                    pair_freq_sums[p] -= freq
                    if not occ:
                        del pair_occurrences[p]
                        del pair_freq_sums[p]

            if track:
                self._shift_accessors(old, -1)
                self._shift_accessors(new, +1)
                accessor_affected.update(old_counts)
                accessor_affected.update(new_counts)

            self.seqs[word] = new

        for p, (before, _) in changes.items():
            changes[p] = (before, self.pair_counts.get(p, 0))
        return MergeDelta(merged, replaced_total, changes, accessor_affected)


def init_segmentation(
    vocab: Mapping[str, int], *, track_accessors: bool = False
) -> SegmentationState:
    """Character-split every word type and build the initial statistics."""
    validate_vocabulary(vocab)
    return SegmentationState(
        vocab, {w: list(w) for w in vocab}, track_accessors=track_accessors
    )


def collect_pair_candidates(
    state: SegmentationState, min_count: int = 2
) -> dict[Pair, PairStats]:
    """All adjacent pairs whose weighted occurrence count reaches min_count.

    Pairs occurring fewer than ``min_count`` times (weighted) are pruned
    from the candidate list.
    """
    if min_count < 1:
        raise ValueError("min_count must be >= 1")
    out: dict[Pair, PairStats] = {}
    for pair, count in state.pair_counts.items():
        if count >= min_count:
            out[pair] = PairStats(
                count,
                dict(state.pair_occurrences[pair]),
                state.pair_freq_sums[pair],
            )
    return out
