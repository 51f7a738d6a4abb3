"""Extractive summarization of Uzbek text driven by the skewness of TF-IDF weights."""

__version__ = "0.1.0"

from .corpus import (CorpusIndex, build_corpus_index, build_index_from_dir, document_frequency,
                     load_index, save_index)
from .errors import (BoundaryOutOfRange, DegenerateDistribution, EmptyAfterFiltering,
                     EmptyCorpus, EmptyInput, EncodingError, IndexCorrupt, IndexVersionError,
                     InvalidConfig, MalformedEntry, ResourceMissing, SkewSumError)
from .estimator import SkewSummarizer
from .moments import (DistributionStats, distribution_stats, raw_moment, round_position,
                      skewness, third_central_moment)
from .normalizer import Sentence, Token, normalize_text, split_sentences, tokenize, tokenize_text
from .pipeline import PipelineConfig, SummaryReport, segment_report, stats_report, summarize
from .selector import SegmentDecision, locate_boundary, select_segment
from .stopwords import (FilteredText, StopwordSet, filter_tokens, load_stopword_dir,
                        load_stopword_set)
from .summarizer import (NgramModel, Summary, build_ngram_model, compute_budget, gram_score,
                         summarize_sentences, summarize_tokens)
from .weighting import (VocabEntry, WeightedVocabulary, build_weighted_vocabulary,
                        inverse_document_frequency, probabilities, term_frequency)

__all__ = [
    "BoundaryOutOfRange", "build_corpus_index", "build_index_from_dir", "build_ngram_model",
    "build_weighted_vocabulary", "compute_budget", "CorpusIndex", "DegenerateDistribution",
    "distribution_stats", "DistributionStats", "document_frequency", "EmptyAfterFiltering",
    "EmptyCorpus", "EmptyInput", "EncodingError", "filter_tokens", "FilteredText",
    "gram_score", "IndexCorrupt", "IndexVersionError", "InvalidConfig",
    "inverse_document_frequency", "load_index", "load_stopword_dir", "load_stopword_set",
    "locate_boundary", "MalformedEntry", "NgramModel", "normalize_text", "PipelineConfig",
    "probabilities", "raw_moment", "ResourceMissing", "round_position", "save_index",
    "segment_report", "SegmentDecision", "select_segment", "Sentence", "skewness",
    "SkewSumError", "SkewSummarizer", "split_sentences", "stats_report", "StopwordSet",
    "summarize", "summarize_sentences", "summarize_tokens", "Summary", "SummaryReport",
    "term_frequency", "third_central_moment", "Token", "tokenize", "tokenize_text",
    "VocabEntry", "WeightedVocabulary",
]
