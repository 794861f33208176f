"""Scikit-learn style estimator wrapping learning and application.

``SubwordSegmenter`` treats an iterable of text lines as the input
documents: ``fit`` learns the merge operations, ``transform`` segments
lines into continuation-marked subwords, and ``inverse_transform``
restores them. The class follows the usual estimator conventions
(parameters stored verbatim in ``__init__``, fitted attributes with a
trailing underscore, ``get_params``/``set_params`` via ``BaseEstimator``),
so it composes with sklearn pipelines.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Union

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .applier import DEFAULT_MARKER, MergeApplier, read_codes, restore, write_codes
from .corpus import vocab_from_lines
from .errors import EmptyCorpusError
from .learner import MergeList, learn
from .measures import MEASURE_KINDS, MeasureConfig


class SubwordSegmenter(BaseEstimator, TransformerMixin):
    """Learn merge operations from text and segment text with them.

    Parameters
    ----------
    measure : {"frq", "av", "dlg"}, default "frq"
        Goodness measure scoring candidate pairs during learning.
    weighted : bool, default True
        Multiply scores by the summed frequency of containing word types.
    merges : int, default 10000
        Number of merge operations to learn.
    min_pair_count : int, default 2
        Candidate pairs below this weighted occurrence count are pruned.
    marker : str, default "@@"
        Continuation marker appended to non-final subwords.
    escape : bool, default False
        Replace in-word marker text by a reserved escape character instead
        of raising.
    """

    def __init__(
        self,
        measure: str = "frq",
        weighted: bool = True,
        merges: int = 10000,
        min_pair_count: int = 2,
        marker: str = DEFAULT_MARKER,
        escape: bool = False,
    ):
        self.measure = measure
        self.weighted = weighted
        self.merges = merges
        self.min_pair_count = min_pair_count
        self.marker = marker
        self.escape = escape

    def _validate_params(self) -> None:
        if self.measure not in MEASURE_KINDS:
            raise ValueError(f"measure must be one of {MEASURE_KINDS}")
        if self.merges < 1:
            raise ValueError("merges must be >= 1")
        if self.min_pair_count < 1:
            raise ValueError("min_pair_count must be >= 1")
        if not self.marker:
            raise ValueError("marker must be non-empty")

    @staticmethod
    def _check_lines(X) -> Iterable[str]:
        if isinstance(X, (str, bytes)):
            raise TypeError("X must be an iterable of lines, not a single string")
        return X

    def fit(self, X: Iterable[str], y=None) -> "SubwordSegmenter":
        """Learn merge operations from an iterable of text lines."""
        self._validate_params()
        vocab = vocab_from_lines(self._check_lines(X))
        if not vocab:
            raise EmptyCorpusError("no tokens found in X")
        result = learn(
            vocab,
            MeasureConfig(self.measure, self.weighted),  # type: ignore[arg-type]
            n_merges=self.merges,
            min_count=self.min_pair_count,
        )
        self.merge_list_ = result.merge_list
        self.iteration_log_ = result.log
        self.exhausted_ = result.exhausted
        self.merges_performed_ = result.merges_performed
        self.alphabet_size_ = len(result.state.alphabet)
        self._applier = MergeApplier(self.merge_list_)
        return self

    def transform(self, X: Iterable[str]) -> list[str]:
        """Segment lines into continuation-marked subwords."""
        check_is_fitted(self, "merge_list_")
        return [
            self._applier.segment_line(line, self.marker, self.escape)
            for line in self._check_lines(X)
        ]

    def inverse_transform(self, X: Iterable[str]) -> list[str]:
        """Restore segmented lines to plain text."""
        check_is_fitted(self, "merge_list_")
        return [restore(line, self.marker) for line in self._check_lines(X)]

    def save_codes(self, path: Union[str, Path]) -> None:
        """Persist the learned merges as a codes file."""
        check_is_fitted(self, "merge_list_")
        write_codes(self.merge_list_, path)

    @classmethod
    def from_codes(
        cls,
        source: Union[str, Path, MergeList],
        marker: str = DEFAULT_MARKER,
        escape: bool = False,
    ) -> "SubwordSegmenter":
        """Build a fitted segmenter from a codes file or merge list."""
        merges = source if isinstance(source, MergeList) else read_codes(source)
        config = merges.measure_config
        segmenter = cls(
            measure=config.kind,
            weighted=config.weighted,
            merges=max(merges.requested_merges, 1),
            marker=marker,
            escape=escape,
        )
        segmenter.merge_list_ = merges
        segmenter.iteration_log_ = []
        segmenter.exhausted_ = len(merges.merges) < merges.requested_merges
        segmenter.merges_performed_ = len(merges.merges)
        segmenter.alphabet_size_ = 0
        segmenter._applier = MergeApplier(merges)
        return segmenter
