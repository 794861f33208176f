"""Goodness measures scoring candidate pairs on a segmentation state.

Three measure families are provided:

* ``frq``: number of word types containing the candidate pair.
* ``av``: accessor variety, the smaller of the distinct left-neighbour and
  distinct right-neighbour type counts over all greedy occurrences, with
  word edges counted as one distinguished neighbour type per side.
* ``dlg``: gain in total Shannon-Fano code length obtained by replacing
  every occurrence of the pair with a fresh index symbol and appending a
  note of the two component symbols plus one delimiter token.

Each measure also has a frequency-weighted variant that multiplies the
base score by the summed corpus frequency of all word types containing
the pair. All functions are pure with respect to the supplied state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Mapping, Optional, Union

from .corpus import WORD_BOUNDARY, Pair, SegmentationState, greedy_span_starts

MEASURE_KINDS = ("frq", "av", "dlg")


@dataclass(frozen=True)
class MeasureConfig:
    """Which goodness measure to use and whether to frequency-weight it."""

    kind: Literal["frq", "av", "dlg"] = "frq"
    weighted: bool = True

    def __post_init__(self):
        if self.kind not in MEASURE_KINDS:
            raise ValueError(f"unknown measure kind: {self.kind!r}")

    @property
    def name(self) -> str:
        return self.kind + ("'" if self.weighted else "")


@dataclass(frozen=True)
class AccessorSets:
    """Distinct neighbour types seen left and right of a pair's occurrences.

    ``WORD_BOUNDARY`` (None) stands for occurrences touching a word edge.
    """

    left_accessors: frozenset
    right_accessors: frozenset


@dataclass(frozen=True)
class TokenCountTable:
    """Weighted token counts c(x) with their total |X|."""

    counts: Mapping[str, int]
    total: int

    @classmethod
    def from_counts(cls, counts: Mapping[str, int]) -> "TokenCountTable":
        return cls(dict(counts), sum(counts.values()))

    @classmethod
    def from_state(cls, state: SegmentationState) -> "TokenCountTable":
        return cls(dict(state.token_counts), state.total_tokens)


def _xlog2(value: Union[int, float]) -> float:
    return value * math.log2(value) if value > 0 else 0.0


def score_frq(pair: Pair, state: SegmentationState) -> int:
    """Number of word types whose current segmentation contains the pair."""
    return len(state.pair_occurrences.get(pair, ()))


def accessor_sets(pair: Pair, state: SegmentationState) -> AccessorSets:
    left, right = pair
    preds: set = set()
    succs: set = set()
    for word in state.pair_occurrences.get(pair, ()):
        symbols = state.seqs[word]
        size = len(symbols)
        for i in greedy_span_starts(symbols, left, right):
            preds.add(symbols[i - 1] if i else WORD_BOUNDARY)
            succs.add(symbols[i + 2] if i + 2 < size else WORD_BOUNDARY)
    return AccessorSets(frozenset(preds), frozenset(succs))


def score_av(pair: Pair, state: SegmentationState) -> int:
    """min(distinct left neighbours, distinct right neighbours); 0 if absent.

    Neighbour sets are type-based: a word type contributes each distinct
    neighbour once, no matter its frequency.
    """
    sets = accessor_sets(pair, state)
    if not sets.left_accessors:
        return 0
    return min(len(sets.left_accessors), len(sets.right_accessors))


def description_length(table: Union[TokenCountTable, Mapping[str, int]]) -> float:
    """Total Shannon-Fano code length, -sum c(x) * log2(c(x)/|X|), in bits."""
    counts = table.counts if isinstance(table, TokenCountTable) else table
    total = (
        table.total if isinstance(table, TokenCountTable) else sum(counts.values())
    )
    if total == 0:
        return 0.0
    return -sum(c * math.log2(c / total) for c in counts.values() if c > 0)


def score_dlg(pair: Pair, state: SegmentationState) -> float:
    """Code-length gain of rewriting the pair to a fresh index symbol.

    With c(x) the weighted token counts, T their total and n the pair's
    weighted occurrence count, the replacement table has
    c'(left) = c(left) - n + 1, c'(right) = c(right) - n + 1 (for
    left == right, c'(left) = c(left) - 2n + 2), a fresh index symbol with
    count n, one delimiter token, and total T - n + 3. The score is the
    code-length difference, evaluated in the canonical form

        xlog2(T) - xlog2(T - n + 3) + xlog2(c') - xlog2(c) [per side]
                 + xlog2(n)

    where xlog2(k) = k * log2(k). The canonical evaluation order makes the
    result bit-reproducible for any implementation that recomputes it from
    the same integer counts. Scores are frequently negative; that is valid.
    """
    n = state.pair_counts.get(pair, 0)
    if n < 1:
        raise ValueError(f"pair {pair!r} has no occurrences")
    left, right = pair
    counts = state.token_counts
    total = state.total_tokens
    c_left = counts[left]
    if left == right:
        side = _xlog2(c_left - 2 * n + 2) - _xlog2(c_left)
    else:
        c_right = counts[right]
        side = (
            _xlog2(c_left - n + 1)
            - _xlog2(c_left)
            + _xlog2(c_right - n + 1)
            - _xlog2(c_right)
        )
    return _xlog2(total) - _xlog2(total - n + 3) + side + _xlog2(n)


def apply_frequency_weight(
    pair: Pair,
    base: Union[int, float],
    state: SegmentationState,
) -> Union[int, float]:
    """base score times the summed frequency of word types containing pair."""
    return base * state.pair_freq_sums.get(pair, 0)


def score(
    pair: Pair, state: SegmentationState, config: Optional[MeasureConfig] = None
) -> Union[int, float]:
    """Score one pair under a measure configuration."""
    config = config or MeasureConfig()
    if config.kind == "frq":
        value: Union[int, float] = score_frq(pair, state)
    elif config.kind == "av":
        value = score_av(pair, state)
    else:
        value = score_dlg(pair, state)
    if config.weighted:
        value = apply_frequency_weight(pair, value, state)
    return value
