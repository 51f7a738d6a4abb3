"""N-gram scoring of the retained segment and summary assembly under a word budget."""

from __future__ import annotations

import math
from bisect import bisect_left
from collections import Counter
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .normalizer import Sentence, Token
from .selector import SegmentDecision

GRAM_SEPARATOR = " … "
MODES = ("token", "sentence")


@dataclass(frozen=True)
class NgramModel:
    """Add-one smoothed n-gram counts over one token sequence.

    ``counts`` maps every prefix (length 1..n) of every n-word window to the
    number of windows starting with it, so ``counts[g[:j-1]]`` is the context
    count for the j-th word of a gram. For ``n == 1`` it is the unigram count.
    """

    n: int
    counts: Mapping[tuple[str, ...], int] = field(default_factory=dict)
    vocab_size: int = 0
    n_windows: int = 0

    def gram_counts(self) -> dict[tuple[str, ...], int]:
        return {g: c for g, c in self.counts.items() if len(g) == self.n}


@dataclass(frozen=True)
class Summary:
    text: str
    word_count: int
    mode: str
    budget: int
    selected: tuple[tuple[int, int], ...] = ()
    truncated: bool = False

    def to_dict(self) -> dict:
        return {
            "text": self.text,
            "word_count": self.word_count,
            "mode": self.mode,
            "budget": self.budget,
            "selected": [list(r) for r in self.selected],
            "truncated": self.truncated,
        }


def _words(tokens) -> list[str]:
    return [t.surface if isinstance(t, Token) else t for t in tokens]


def compute_budget(original_token_count: int, ratio: float = 0.30) -> int:
    """``floor(ratio * count)``, never below 1.

    The ratio is read as the decimal it prints as, so 0.29 of 100 is 29, not 28.
    """
    return max(1, math.floor(Fraction(repr(float(ratio))) * original_token_count))


def build_ngram_model(tokens, n: int = 3) -> NgramModel:
    """Count sliding ``n``-word windows; fewer than ``n`` tokens gives an empty model."""
    if n < 1:
        raise ValueError("n must be >= 1")
    words = _words(tokens)
    counts: Counter[tuple[str, ...]] = Counter()
    n_windows = max(0, len(words) - n + 1)
    for i in range(n_windows):
        window = tuple(words[i:i + n])
        for j in range(1, n + 1):
            counts[window[:j]] += 1
    return NgramModel(n, dict(counts), len(set(words)), n_windows)


def gram_score(model: NgramModel, gram: Sequence[str]) -> float:
    """Forward-chain log-probability of ``gram`` under add-one smoothing.

    ``sum_{j=2..n} ln((c(w_1..w_j) + 1) / (c(w_1..w_{j-1}) + V))``. A unigram
    model scores ``ln((c(w) + 1) / (windows + V))`` instead.
    """
    gram = tuple(gram)
    if len(gram) != model.n:
        raise ValueError(f"gram has {len(gram)} words, model order is {model.n}")
    v = model.vocab_size
    c = model.counts
    if model.n == 1:
        return math.log((c.get(gram, 0) + 1) / (model.n_windows + v))
    score = 0.0
    for j in range(2, model.n + 1):
        score += math.log((c.get(gram[:j], 0) + 1) / (c.get(gram[:j - 1], 0) + v))
    return score


def _span(tokens: Sequence[Token], lo: int, hi: int) -> tuple[int, int]:
    return tokens[lo].char_start, tokens[hi - 1].char_end


def summarize_tokens(segment: Sequence[Token], model: NgramModel, budget: int) -> Summary:
    """Greedy selection of the best-scoring non-overlapping grams.

    Grams are ranked by score (earlier first occurrence breaks ties) and
    accepted until the next one would push the word count past ``budget``.
    Accepted grams are emitted in text order.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    words = _words(segment)
    n = model.n

    if model.n_windows == 0 or len(words) < n:
        keep = min(budget, len(words))
        text = " ".join(words[:keep])
        sel = (_span(segment, 0, keep),) if keep else ()
        return Summary(text, keep, "token", budget, sel)

    first: dict[tuple[str, ...], int] = {}
    for i in range(len(words) - n + 1):
        first.setdefault(tuple(words[i:i + n]), i)
    ranked = sorted(first.items(), key=lambda kv: (-gram_score(model, kv[0]), kv[1]))

    taken = bytearray(len(words))
    accepted: list[int] = []
    used = 0
    for gram, pos in ranked:
        if any(taken[pos:pos + n]):
            continue
        if used + n > budget:
            break
        taken[pos:pos + n] = b"\x01" * n
        accepted.append(pos)
        used += n

    if not accepted:
        # budget < n: emit the head of the best gram
        gram, pos = ranked[0]
        keep = min(budget, n)
        return Summary(" ".join(gram[:keep]), keep, "token", budget,
                       (_span(segment, pos, pos + keep),), truncated=True)

    accepted.sort()
    text = GRAM_SEPARATOR.join(" ".join(words[p:p + n]) for p in accepted)
    sel = tuple(_span(segment, p, p + n) for p in accepted)
    return Summary(text, used, "token", budget, sel)


def sentence_scores(decision: SegmentDecision, sentences: Sequence[Sentence],
                    model: NgramModel, segment: Sequence[Token]) -> list[tuple[Sentence, float]]:
    """Mean gram score of every sentence overlapping the decision's span.

    Only the segment's own tokens count towards a sentence's grams; sentences
    with fewer than ``n`` of them score ``-inf``.
    """
    lo_c, hi_c = decision.char_range
    starts = [t.char_start for t in segment]
    words = _words(segment)
    out = []
    for s in sentences:
        if s.char_end <= lo_c or s.char_start >= hi_c:
            continue
        a, b = bisect_left(starts, s.char_start), bisect_left(starts, s.char_end)
        sw = words[a:b]
        if len(sw) < model.n:
            out.append((s, -math.inf))
            continue
        grams = [sw[i:i + model.n] for i in range(len(sw) - model.n + 1)]
        out.append((s, math.fsum(gram_score(model, g) for g in grams) / len(grams)))
    return out


def summarize_sentences(decision: SegmentDecision, sentences: Sequence[Sentence],
                        model: NgramModel, budget: int, *, raw: str,
                        tokens: Sequence[Token], segment: Sequence[Token]) -> Summary:
    """Pick whole sentences by score and re-emit them verbatim in text order.

    ``tokens`` is the original (unfiltered) token sequence the sentences'
    ``token_range`` refers to; ``segment`` is the retained token sequence.
    Budget counts original words. When no sentence fits, the best one is cut
    after ``budget`` words and the summary is flagged as truncated.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    scored = sentence_scores(decision, sentences, model, segment)
    if not scored:
        return Summary("", 0, "sentence", budget)

    ranked = sorted(scored, key=lambda sv: (-sv[1], sv[0].char_start))
    finite = [s for s, v in ranked if v != -math.inf]
    chosen: list[Sentence] = []
    used = 0
    for pool in (finite, [s for s, v in scored if v == -math.inf]):
        for s in pool:
            if used + s.n_tokens <= budget:
                chosen.append(s)
                used += s.n_tokens
        if chosen:
            break

    if not chosen:
        best = ranked[0][0]
        last = tokens[best.token_range[0] + budget - 1]
        return Summary(raw[best.char_start:last.char_end], budget, "sentence", budget,
                       ((best.char_start, last.char_end),), truncated=True)

    chosen.sort(key=lambda s: s.char_start)
    text = " ".join(raw[s.char_start:s.char_end] for s in chosen)
    return Summary(text, used, "sentence", budget,
                   tuple((s.char_start, s.char_end) for s in chosen))
