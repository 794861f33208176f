"""Iterative merge learning over a word-type corpus.

Each iteration scores all candidate pairs under the configured goodness
measure, selects the best one (ties broken by higher occurrence count,
then lexicographically smaller pair), merges every greedy occurrence
corpus-wide and records the merge. Learning stops after the requested
number of merges or as soon as no candidate reaches the occurrence
threshold.

Selection is organised per measure family:

* frq/av scores only change for pairs occurring in words touched by a
  merge, so candidates live in a lazy max-heap; entries are re-pushed
  whenever a pair's statistics change and verified against the live state
  when popped.
* dlg scores depend on global token counts and therefore shift on every
  merge; candidates are rescored by a full scan per iteration, which is
  cheap because each score is O(1) on the maintained counts.

Both strategies implement the same specification: rescore everything
each iteration and take the argmax. The test suite checks them against a
reference learner that literally recounts from scratch every iteration.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from typing import Callable, Mapping, Union

from . import measures
from .corpus import MergeDelta, Pair, SegmentationState, init_segmentation
from .errors import EmptyCorpusError, NoCandidatesError
from .measures import MeasureConfig

logger = logging.getLogger(__name__)

Score = Union[int, float]


@dataclass
class MergeList:
    """Ordered merge operations plus the configuration that produced them."""

    merges: list[Pair]
    measure_config: MeasureConfig = field(default_factory=MeasureConfig)
    requested_merges: int = 0

    def __post_init__(self):
        if self.requested_merges == 0:
            self.requested_merges = len(self.merges)
        if len(self.merges) > self.requested_merges:
            raise ValueError("more merges than requested")

    def __len__(self) -> int:
        return len(self.merges)

    def prefix(self, length: int) -> "MergeList":
        return MergeList(self.merges[:length], self.measure_config, length)


@dataclass(frozen=True)
class IterationRecord:
    iteration: int
    pair: Pair
    score: Score
    pair_count: int          # weighted occurrences at selection time
    candidate_count: int     # eligible candidate pairs at selection time


@dataclass
class LearnResult:
    merge_list: MergeList
    log: list[IterationRecord]
    state: SegmentationState
    exhausted: bool

    @property
    def merges_performed(self) -> int:
        return len(self.merge_list.merges)


def select_best_pair(scored: Mapping[Pair, tuple[Score, int]]) -> Pair:
    """Argmax by score, then higher occurrence count, then smaller pair."""
    if not scored:
        raise NoCandidatesError("no candidate pairs to select from")
    best_pair = None
    best_score: Score = 0
    best_count = 0
    for pair, (score, count) in scored.items():
        if (
            best_pair is None
            or score > best_score
            or (
                score == best_score
                and (count > best_count or (count == best_count and pair < best_pair))
            )
        ):
            best_pair, best_score, best_count = pair, score, count
    return best_pair


def merge_pair(state: SegmentationState, pair: Pair) -> MergeDelta:
    """Merge all occurrences of ``pair``; error if it has none.

    An absent pair signals a learner/scorer disagreement, so this raises
    instead of silently doing nothing.
    """
    if state.pair_counts.get(pair, 0) < 1:
        raise ValueError(f"cannot merge absent pair {pair!r}")
    return state.apply_merge(pair)


def _make_scorer(
    config: MeasureConfig, state: SegmentationState
) -> Callable[[Pair], Score]:
    if config.kind == "frq":
        occurrences = state.pair_occurrences

        def base(pair: Pair) -> Score:
            return len(occurrences[pair])

    elif config.kind == "av":
        pred_types = state.pred_types
        succ_types = state.succ_types

        def base(pair: Pair) -> Score:
            return min(len(pred_types[pair]), len(succ_types[pair]))

    else:

        def base(pair: Pair) -> Score:
            return measures.score_dlg(pair, state)

    if not config.weighted:
        return base
    freq_sums = state.pair_freq_sums
    return lambda pair: base(pair) * freq_sums[pair]


def learn(
    vocab: Mapping[str, int],
    config: MeasureConfig = MeasureConfig(),
    n_merges: int = 10000,
    min_count: int = 2,
) -> LearnResult:
    """Run up to ``n_merges`` merge iterations on the vocabulary.

    Merges are performed even when the best score is not positive (a
    warning is logged); only an empty candidate list stops learning early.
    """
    if n_merges < 1:
        raise ValueError("n_merges must be >= 1")
    if min_count < 1:
        raise ValueError("min_count must be >= 1")
    if not vocab:
        raise EmptyCorpusError("cannot learn from an empty vocabulary")

    state = init_segmentation(vocab, track_accessors=config.kind == "av")
    scorer = _make_scorer(config, state)
    use_heap = config.kind in ("frq", "av")
    eligible = sum(1 for count in state.pair_counts.values() if count >= min_count)

    heap: list[tuple[Score, int, Pair]] = []
    if use_heap:
        heap = [
            (-scorer(pair), -count, pair)
            for pair, count in state.pair_counts.items()
            if count >= min_count
        ]
        heapq.heapify(heap)

    merges: list[Pair] = []
    log: list[IterationRecord] = []
    exhausted = False
    warned_nonpositive = False

    for iteration in range(n_merges):
        if use_heap:
            picked = _pop_best(heap, state, scorer, min_count)
        else:
            picked = _scan_best(state, scorer, min_count)
        if picked is None:
            exhausted = True
            logger.warning(
                "candidate list exhausted after %d of %d merges", iteration, n_merges
            )
            break
        pair, score, count = picked
        if score <= 0:
            level = logging.DEBUG if warned_nonpositive else logging.WARNING
            logger.log(
                level, "merging %r with non-positive score %r", pair, score
            )
            warned_nonpositive = True
        log.append(IterationRecord(iteration, pair, score, count, eligible))
        logger.debug(
            "merge %d: %r score=%r count=%d candidates=%d",
            iteration, pair, score, count, eligible,
        )

        delta = state.apply_merge(pair)
        merges.append(pair)

        for changed, (before, after) in delta.count_changes.items():
            eligible += (after >= min_count) - (before >= min_count)
        if use_heap:
            affected = set(delta.count_changes)
            affected.update(delta.accessor_affected)
            pair_counts = state.pair_counts
            for changed in affected:
                count = pair_counts.get(changed, 0)
                if count >= min_count:
                    heapq.heappush(heap, (-scorer(changed), -count, changed))

    return LearnResult(
        MergeList(merges, config, n_merges), log, state, exhausted
    )


def _pop_best(heap, state, scorer, min_count):
    pair_counts = state.pair_counts
    while heap:
        neg_score, neg_count, pair = heapq.heappop(heap)
        count = pair_counts.get(pair, 0)
        if count < min_count or count != -neg_count:
            continue
        score = scorer(pair)
        if score != -neg_score:
            continue
        return pair, score, count
    return None


def _scan_best(state, scorer, min_count):
    best = None
    best_score: Score = 0
    best_count = 0
    for pair, count in state.pair_counts.items():
        if count < min_count:
            continue
        score = scorer(pair)
        if (
            best is None
            or score > best_score
            or (
                score == best_score
                and (count > best_count or (count == best_count and pair < best))
            )
        ):
            best, best_score, best_count = pair, score, count
    if best is None:
        return None
    return best, best_score, best_count


def iteration_log_to_tsv(log: list[IterationRecord]) -> str:
    """Render the iteration log as TSV with a header row."""
    lines = ["iteration\tleft\tright\tscore\tcount"]
    for record in log:
        lines.append(
            f"{record.iteration}\t{record.pair[0]}\t{record.pair[1]}"
            f"\t{record.score!r}\t{record.pair_count}"
        )
    return "\n".join(lines) + "\n"
