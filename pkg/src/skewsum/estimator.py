"""scikit-learn compatible wrapper.

``fit`` builds the background document-frequency index from a corpus;
``transform`` summarizes each input document. Hyper-parameters mirror
:class:`~skewsum.pipeline.PipelineConfig`, so ``get_params``/``set_params``,
``clone`` and grid search work as usual.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .corpus import CorpusIndex, build_corpus_index
from .pipeline import PipelineConfig, segment_report, stats_report, summarize
from .stopwords import StopwordSet
from .validation import check_documents


class SkewSummarizer(TransformerMixin, BaseEstimator):
    """Extractive summarizer driven by the skewness of TF-IDF word weights.

    Parameters
    ----------
    n : int, default=3
        Order of the n-grams used to assemble the summary.
    ratio : float, default=0.30
        Summary budget as a fraction of the original word count.
    mode : {"token", "sentence"}, default="token"
        Emit n-gram chains, or whole sentences re-scored by their n-grams.
    stopwords : StopwordSet or None
        Stop-word lists; None disables filtering.
    epsilon_skew, rounding, ordering, idf_variant, tf_variant,
    allow_degenerate, boundaries_in, collocation_fixpoint
        See :class:`~skewsum.pipeline.PipelineConfig`.

    Attributes
    ----------
    index_ : CorpusIndex
        Document-frequency index built by ``fit``.
    n_documents_ : int
        Number of documents seen during ``fit``.
    """

    def __init__(self, n=3, ratio=0.30, mode="token", stopwords=None, epsilon_skew=1e-9,
                 rounding="nearest", ordering="first_occurrence", idf_variant="smooth",
                 tf_variant="relative", allow_degenerate=False, boundaries_in="filtered",
                 collocation_fixpoint=False):
        self.n = n
        self.ratio = ratio
        self.mode = mode
        self.stopwords = stopwords
        self.epsilon_skew = epsilon_skew
        self.rounding = rounding
        self.ordering = ordering
        self.idf_variant = idf_variant
        self.tf_variant = tf_variant
        self.allow_degenerate = allow_degenerate
        self.boundaries_in = boundaries_in
        self.collocation_fixpoint = collocation_fixpoint

    def _config(self) -> PipelineConfig:
        return PipelineConfig(
            n=self.n, ratio=self.ratio, epsilon_skew=self.epsilon_skew, rounding=self.rounding,
            ordering=self.ordering, idf_variant=self.idf_variant, tf_variant=self.tf_variant,
            mode=self.mode, allow_degenerate=self.allow_degenerate,
            boundaries_in=self.boundaries_in, collocation_fixpoint=self.collocation_fixpoint)

    def _stopwords(self) -> StopwordSet:
        sw = self.stopwords
        if sw is not None and not isinstance(sw, StopwordSet):
            raise TypeError(f"stopwords must be a StopwordSet or None, got {type(sw).__name__}")
        return sw or StopwordSet()

    def fit(self, X, y=None):
        """Build the document-frequency index from the documents in ``X``."""
        self._config()  # validate hyper-parameters early
        docs = check_documents(X)
        self.index_ = build_corpus_index(docs)
        self.n_documents_ = len(docs)
        return self

    def fit_index(self, index: CorpusIndex):
        """Use a prebuilt (e.g. loaded from disk) index instead of fitting."""
        if not isinstance(index, CorpusIndex):
            raise TypeError("index must be a CorpusIndex")
        self._config()
        self.index_ = index
        self.n_documents_ = index.num_docs
        return self

    def report(self, document):
        """Full :class:`~skewsum.pipeline.SummaryReport` for one document."""
        check_is_fitted(self, "index_")
        return summarize(document, self._config(), self._stopwords(), self.index_)

    def segment(self, document):
        check_is_fitted(self, "index_")
        return segment_report(document, self._config(), self._stopwords(), self.index_)

    def stats(self, document):
        check_is_fitted(self, "index_")
        return stats_report(document, self._config(), self._stopwords(), self.index_)

    def transform(self, X):
        """Summary text of every document in ``X``, as a list of strings."""
        check_is_fitted(self, "index_")
        docs = check_documents(X, allow_empty=True)
        config, sw = self._config(), self._stopwords()
        return [summarize(d, config, sw, self.index_).summary.text for d in docs]

    def _more_tags(self):
        return {"X_types": ["string"], "requires_y": False}
