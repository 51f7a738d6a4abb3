"""TF-IDF weights over the unique words of a filtered text, and their
normalization into a probability distribution over vocabulary positions.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .corpus import CorpusIndex, document_frequency
from .errors import DegenerateDistribution, EmptyInput, InvalidConfig
from .stopwords import FilteredText

TF_VARIANTS = ("relative", "raw")
IDF_VARIANTS = ("smooth", "plain")
ORDERINGS = ("first_occurrence", "by_weight", "alphabetical")


@dataclass(frozen=True, slots=True)
class VocabEntry:
    word: str
    first_pos: int
    count: int
    weight: float
    prob: float


@dataclass(frozen=True)
class WeightedVocabulary:
    entries: tuple[VocabEntry, ...]
    ordering: str = "first_occurrence"

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    @property
    def words(self) -> list[str]:
        return [e.word for e in self.entries]

    @property
    def probs(self) -> list[float]:
        return [e.prob for e in self.entries]

    @property
    def weights(self) -> list[float]:
        return [e.weight for e in self.entries]


def _check_choice(value, choices, name):
    if value not in choices:
        raise InvalidConfig(f"{name} must be one of {', '.join(choices)}; got {value!r}")


def term_frequency(filtered: FilteredText, term: str, variant: str = "relative") -> float:
    """Occurrences of ``term`` divided by the filtered length (or the raw count)."""
    _check_choice(variant, TF_VARIANTS, "tf variant")
    if not len(filtered):
        raise EmptyInput("term frequency of an empty text")
    count = sum(1 for t in filtered.tokens if t.surface == term)
    return float(count) if variant == "raw" else count / len(filtered)


def inverse_document_frequency(index: CorpusIndex, term: str, variant: str = "smooth") -> float:
    """``ln((1+N)/(1+df)) + 1`` by default; ``ln(N/df)`` for the plain variant.

    The plain variant clamps df to at least 1 so corpus-unseen words get the
    maximal weight instead of dividing by zero.
    """
    _check_choice(variant, IDF_VARIANTS, "idf variant")
    n = index.num_docs
    df = document_frequency(index, term)
    if variant == "smooth":
        return math.log((1 + n) / (1 + df)) + 1.0
    return math.log(n / max(df, 1))


def probabilities(weights) -> list[float]:
    """Normalize non-negative weights to sum to one.

    The weights are treated as exact rationals (floats, ints and Fractions are
    all accepted) and each ratio ``w_i / sum(w)`` is rounded to float once.
    The result therefore does not depend on summation order, and scaling every
    weight by the same exact positive constant leaves it bit-for-bit unchanged.
    """
    ratios = []
    for w in weights:
        if isinstance(w, float) and not math.isfinite(w):
            raise ValueError(f"non-finite weight {w!r}")
        num, den = w.as_integer_ratio()
        if num < 0:
            raise ValueError(f"negative weight {w!r}")
        ratios.append((num, den))
    if not ratios:
        raise EmptyInput("no weights to normalize")
    common = math.lcm(*{den for _, den in ratios})
    scaled = [num * (common // den) for num, den in ratios]
    total = sum(scaled)
    if total == 0:
        raise DegenerateDistribution("all weights are zero")
    return [s / total for s in scaled]


def build_weighted_vocabulary(filtered: FilteredText, index: CorpusIndex, *,
                              tf_variant: str = "relative", idf_variant: str = "smooth",
                              ordering: str = "first_occurrence") -> WeightedVocabulary:
    """Unique words of ``filtered`` with TF-IDF weights and probabilities."""
    _check_choice(tf_variant, TF_VARIANTS, "tf variant")
    _check_choice(idf_variant, IDF_VARIANTS, "idf variant")
    _check_choice(ordering, ORDERINGS, "ordering")
    length = len(filtered)
    if not length:
        raise EmptyInput("cannot weight an empty text")

    counts: Counter[str] = Counter()
    first: dict[str, int] = {}
    for pos, tok in enumerate(filtered.tokens):
        counts[tok.surface] += 1
        first.setdefault(tok.surface, pos)

    words = list(first)  # dict order == first occurrence
    exact = {}
    for w in words:
        idf = Fraction(inverse_document_frequency(index, w, idf_variant))
        tf = Fraction(counts[w], length) if tf_variant == "relative" else Fraction(counts[w])
        exact[w] = tf * idf
    if idf_variant == "smooth":
        assert all(v > 0 for v in exact.values()), "smoothed idf must give positive weights"

    if ordering == "by_weight":
        words.sort(key=lambda w: (-exact[w], first[w]))
    elif ordering == "alphabetical":
        words.sort()

    probs = probabilities([exact[w] for w in words])
    entries = tuple(
        VocabEntry(w, first[w], counts[w], float(exact[w]), p)
        for w, p in zip(words, probs)
    )
    return WeightedVocabulary(entries, ordering)
