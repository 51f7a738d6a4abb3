"""Pick the retained segment of the text from the sign of the skewness."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import BoundaryOutOfRange, DegenerateDistribution, InvalidConfig
from .moments import DistributionStats
from .normalizer import Token
from .stopwords import FilteredText
from .weighting import WeightedVocabulary

KINDS = ("prefix", "suffix", "middle", "whole")
BOUNDARY_SPACES = ("filtered", "original")


@dataclass(frozen=True)
class SegmentDecision:
    """Which part of the text is kept.

    ``token_range`` is half-open and indexes the filtered token sequence, or
    the original one when ``space == "original"``.
    """

    kind: str
    token_range: tuple[int, int]
    char_range: tuple[int, int]
    k1: int | None = None
    m1: int | None = None
    k_word: str | None = None
    m_word: str | None = None
    space: str = "filtered"

    def __len__(self):
        return self.token_range[1] - self.token_range[0]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "k1": self.k1,
            "m1": self.m1,
            "k_word": self.k_word,
            "m_word": self.m_word,
            "token_range": list(self.token_range),
            "char_range": list(self.char_range),
            "space": self.space,
        }


def locate_boundary(vocab: WeightedVocabulary, boundary_idx: int) -> int:
    """Filtered-text position of the first occurrence of the ``boundary_idx``-th word (1-based)."""
    if not 1 <= boundary_idx <= len(vocab):
        raise BoundaryOutOfRange(f"boundary {boundary_idx} outside [1, {len(vocab)}]")
    return vocab[boundary_idx - 1].first_pos


def _char_range(tokens: Sequence[Token], lo: int, hi: int) -> tuple[int, int]:
    return tokens[lo].char_start, tokens[hi - 1].char_end


def whole_segment(filtered: FilteredText) -> SegmentDecision:
    toks = filtered.tokens
    return SegmentDecision("whole", (0, len(toks)), _char_range(toks, 0, len(toks)))


def select_segment(stats: DistributionStats, vocab: WeightedVocabulary, filtered: FilteredText, *,
                   epsilon: float = 1e-9, boundaries_in: str = "filtered",
                   original_tokens: Sequence[Token] | None = None,
                   allow_degenerate: bool = False) -> SegmentDecision:
    """Keep the prefix (skew > eps), the suffix (skew < -eps) or the middle.

    Boundary words are included on the kept side. With
    ``boundaries_in="original"`` the boundary words are looked up in, and the
    segment cut from, the unfiltered token sequence instead.
    """
    if boundaries_in not in BOUNDARY_SPACES:
        raise InvalidConfig(f"boundaries_in must be one of {', '.join(BOUNDARY_SPACES)}; "
                            f"got {boundaries_in!r}")
    if stats.degenerate:
        if not allow_degenerate:
            raise DegenerateDistribution(
                "zero spread over unique words; skewness is undefined")
        return whole_segment(filtered)

    k1 = locate_boundary(vocab, stats.k_idx)
    m1 = locate_boundary(vocab, stats.m_idx)
    k_word, m_word = vocab[stats.k_idx - 1].word, vocab[stats.m_idx - 1].word
    toks: Sequence[Token] = filtered.tokens
    if boundaries_in == "original":
        if original_tokens is None:
            raise InvalidConfig("boundaries_in='original' needs the original tokens")
        toks = original_tokens
        first: dict[str, int] = {}
        for i, t in enumerate(toks):
            first.setdefault(t.surface, i)
        k1, m1 = first[k_word], first[m_word]

    size = len(toks)
    if stats.As > epsilon:
        kind, lo, hi = "prefix", 0, k1 + 1
    elif stats.As < -epsilon:
        kind, lo, hi = "suffix", m1, size
    else:
        kind, lo, hi = "middle", min(k1, m1), max(k1, m1) + 1
    if hi <= lo:
        hi = lo + 1
    return SegmentDecision(kind, (lo, hi), _char_range(toks, lo, hi),
                           k1, m1, k_word, m_word, boundaries_in)


def segment_tokens(decision: SegmentDecision, filtered: FilteredText,
                   original_tokens: Sequence[Token] | None = None) -> list[Token]:
    toks = original_tokens if decision.space == "original" else filtered.tokens
    lo, hi = decision.token_range
    return list(toks[lo:hi])
