"""gbpe: subword segmentation via merge operations learned under
pluggable goodness measures (frequency, accessor variety, and
description-length gain, each with a frequency-weighted variant)."""

from .applier import (
    DEFAULT_MARKER,
    MergeApplier,
    apply_merges,
    read_codes,
    restore,
    segment_text,
    write_codes,
)
from .corpus import (
    WORD_BOUNDARY,
    Pair,
    PairStats,
    SegmentationState,
    collect_pair_candidates,
    init_segmentation,
    load_word_vocabulary,
    sample_corpus_path,
    vocab_from_lines,
)
from .errors import (
    AlignmentError,
    CodesParseError,
    EmptyCorpusError,
    GbpeError,
    IngestionError,
    MarkerCollisionError,
    NoCandidatesError,
)
from .learner import (
    IterationRecord,
    LearnResult,
    MergeList,
    iteration_log_to_tsv,
    learn,
    merge_pair,
    select_best_pair,
)
from .measures import (
    AccessorSets,
    MeasureConfig,
    TokenCountTable,
    accessor_sets,
    apply_frequency_weight,
    description_length,
    score,
    score_av,
    score_dlg,
    score_frq,
)
from .stats import SegStatsReport, corpus_stats, report_to_tsv, sentence_stats

__version__ = "0.1.0"


def __getattr__(name):
    # SubwordSegmenter pulls in scikit-learn; import it lazily so plain
    # library and CLI use stays stdlib-only at startup.
    if name == "SubwordSegmenter":
        from .estimator import SubwordSegmenter

        return SubwordSegmenter
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")

__all__ = [
    "AccessorSets",
    "AlignmentError",
    "CodesParseError",
    "DEFAULT_MARKER",
    "EmptyCorpusError",
    "GbpeError",
    "IngestionError",
    "IterationRecord",
    "LearnResult",
    "MarkerCollisionError",
    "MeasureConfig",
    "MergeApplier",
    "MergeList",
    "NoCandidatesError",
    "Pair",
    "PairStats",
    "SegStatsReport",
    "SegmentationState",
    "SubwordSegmenter",
    "TokenCountTable",
    "WORD_BOUNDARY",
    "accessor_sets",
    "apply_frequency_weight",
    "apply_merges",
    "collect_pair_candidates",
    "corpus_stats",
    "description_length",
    "init_segmentation",
    "iteration_log_to_tsv",
    "learn",
    "load_word_vocabulary",
    "merge_pair",
    "read_codes",
    "report_to_tsv",
    "restore",
    "sample_corpus_path",
    "score",
    "score_av",
    "score_dlg",
    "score_frq",
    "segment_text",
    "select_best_pair",
    "sentence_stats",
    "vocab_from_lines",
    "write_codes",
]
