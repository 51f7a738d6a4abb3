"""End-to-end summarization: normalize, filter, weight, measure skew, cut, summarize."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .corpus import CorpusIndex, build_corpus_index
from .errors import DegenerateDistribution, EmptyAfterFiltering, EmptyInput
from .moments import ROUNDINGS, DistributionStats, distribution_stats
from .normalizer import ensure_text, split_sentences, tokenize_text
from .selector import BOUNDARY_SPACES, SegmentDecision, segment_tokens, select_segment
from .stopwords import StopwordSet, filter_tokens
from .summarizer import (MODES, Summary, build_ngram_model, compute_budget,
                         summarize_sentences, summarize_tokens)
from .validation import check_choice, check_epsilon, check_order, check_ratio
from .weighting import IDF_VARIANTS, ORDERINGS, TF_VARIANTS, WeightedVocabulary, \
    build_weighted_vocabulary


@dataclass(frozen=True)
class PipelineConfig:
    n: int = 3
    ratio: float = 0.30
    epsilon_skew: float = 1e-9
    rounding: str = "nearest"
    ordering: str = "first_occurrence"
    idf_variant: str = "smooth"
    tf_variant: str = "relative"
    mode: str = "token"
    allow_degenerate: bool = False
    boundaries_in: str = "filtered"
    collocation_fixpoint: bool = False

    def __post_init__(self):
        check_order(self.n)
        check_ratio(self.ratio)
        check_epsilon(self.epsilon_skew)
        check_choice(self.rounding, ROUNDINGS, "rounding")
        check_choice(self.ordering, ORDERINGS, "ordering")
        check_choice(self.idf_variant, IDF_VARIANTS, "idf_variant")
        check_choice(self.tf_variant, TF_VARIANTS, "tf_variant")
        check_choice(self.mode, MODES, "mode")
        check_choice(self.boundaries_in, BOUNDARY_SPACES, "boundaries_in")

    def to_dict(self) -> dict:
        return asdict(self)


def _sig(x, digits):
    if isinstance(x, float):
        return float(f"{x:.{digits}g}")
    if isinstance(x, dict):
        return {k: _sig(v, digits) for k, v in x.items()}
    if isinstance(x, list):
        return [_sig(v, digits) for v in x]
    return x


@dataclass(frozen=True)
class SummaryReport:
    """Everything one run produced. ``summary``/``decision`` are None for the
    stats-only and segment-only entry points."""

    stats: DistributionStats
    counts: dict
    config: PipelineConfig
    vocabulary: WeightedVocabulary
    decision: SegmentDecision | None = None
    summary: Summary | None = None

    def to_dict(self, precision: int | None = None, vocabulary: bool = False) -> dict:
        d: dict = {}
        if self.summary is not None:
            d.update(summary=self.summary.text, mode=self.summary.mode, n=self.config.n,
                     budget=self.summary.budget, word_count=self.summary.word_count,
                     truncated=self.summary.truncated,
                     selected=[list(r) for r in self.summary.selected])
        d["stats"] = self.stats.to_dict()
        if self.decision is not None:
            d["segment"] = self.decision.to_dict()
        d["counts"] = dict(self.counts)
        d["config"] = self.config.to_dict()
        if vocabulary:
            d["vocabulary"] = [
                {"rank": i, "word": e.word, "first_pos": e.first_pos, "w": e.weight, "p": e.prob}
                for i, e in enumerate(self.vocabulary, 1)
            ]
        return _sig(d, precision) if precision else d


@dataclass(frozen=True)
class _Analysis:
    raw: str
    tokens: list
    filtered: object
    vocab: WeightedVocabulary
    stats: DistributionStats

    def counts(self):
        return {"original_tokens": len(self.tokens), "filtered_tokens": len(self.filtered),
                "unique_words": len(self.vocab)}


def _analyze(raw, config: PipelineConfig, stopwords: StopwordSet | None,
             index: CorpusIndex | None) -> _Analysis:
    raw = ensure_text(raw)
    tokens = tokenize_text(raw)
    if not tokens:
        raise EmptyInput("no words in input text")
    filtered = filter_tokens(tokens, stopwords or StopwordSet(),
                             fixpoint=config.collocation_fixpoint)
    if not len(filtered):
        raise EmptyAfterFiltering("every word of the input is a stop word")
    if index is None:
        index = build_corpus_index([raw])
    vocab = build_weighted_vocabulary(filtered, index, tf_variant=config.tf_variant,
                                      idf_variant=config.idf_variant, ordering=config.ordering)
    stats = distribution_stats(vocab, rounding=config.rounding)
    if stats.degenerate and not config.allow_degenerate:
        raise DegenerateDistribution(
            "only one word carries weight; skewness is undefined (see allow_degenerate)")
    return _Analysis(raw, tokens, filtered, vocab, stats)


def _decide(a: _Analysis, config: PipelineConfig) -> SegmentDecision:
    return select_segment(a.stats, a.vocab, a.filtered, epsilon=config.epsilon_skew,
                          boundaries_in=config.boundaries_in, original_tokens=a.tokens,
                          allow_degenerate=config.allow_degenerate)


def stats_report(raw, config: PipelineConfig | None = None, stopwords: StopwordSet | None = None,
                 index: CorpusIndex | None = None) -> SummaryReport:
    """Run up to the distribution statistics."""
    config = config or PipelineConfig()
    a = _analyze(raw, config, stopwords, index)
    return SummaryReport(a.stats, a.counts(), config, a.vocab)


def segment_report(raw, config: PipelineConfig | None = None, stopwords: StopwordSet | None = None,
                   index: CorpusIndex | None = None) -> SummaryReport:
    """Run up to the segment decision."""
    config = config or PipelineConfig()
    a = _analyze(raw, config, stopwords, index)
    return SummaryReport(a.stats, a.counts(), config, a.vocab, _decide(a, config))


def summarize(raw, config: PipelineConfig | None = None, stopwords: StopwordSet | None = None,
              index: CorpusIndex | None = None) -> SummaryReport:
    """Summarize ``raw`` and return the full report.

    Without an ``index`` the text is treated as a one-document corpus, which
    makes every IDF equal and the weights proportional to term frequency.
    """
    config = config or PipelineConfig()
    a = _analyze(raw, config, stopwords, index)
    decision = _decide(a, config)
    segment = segment_tokens(decision, a.filtered, a.tokens)
    model = build_ngram_model(segment, config.n)
    budget = compute_budget(len(a.tokens), config.ratio)
    if config.mode == "token":
        summary = summarize_tokens(segment, model, budget)
    else:
        sentences = split_sentences(a.raw, a.tokens)
        summary = summarize_sentences(decision, sentences, model, budget,
                                      raw=a.raw, tokens=a.tokens, segment=segment)
    assert summary.word_count <= budget
    return SummaryReport(a.stats, a.counts(), config, a.vocab, decision, summary)
