"""Stop-word resources and three-stage removal.

Removal runs in a fixed order: two-word collocations, then single words,
then the rule-base lexicon (pronouns, adverbs, conjunctions, introductory
and auxiliary words...). The rule-base stage is a plain lexicon lookup; no
part-of-speech tagging happens here.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from pathlib import Path

from .errors import MalformedEntry, ResourceMissing
from .normalizer import Token, surfaces

UNIGRAMS_FILE = "unigrams.txt"
COLLOCATIONS_FILE = "collocations.txt"
RULEBASE_FILE = "rulebase.txt"


@dataclass(frozen=True)
class StopwordSet:
    unigrams: frozenset[str] = frozenset()
    collocations: frozenset[tuple[str, str]] = frozenset()
    rulebase: frozenset[str] = frozenset()
    categories: Mapping[str, str] = field(default_factory=dict, compare=False)

    def __len__(self):
        return len(self.unigrams) + len(self.collocations) + len(self.rulebase)

    @classmethod
    def from_words(cls, unigrams=(), collocations=(), rulebase=()):
        """Build a set from in-memory entries, normalizing them like the loader."""
        uni = {_single(w, "<memory>", 0) for w in unigrams}
        col = {_pair(" ".join(c) if not isinstance(c, str) else c, "<memory>", 0)
               for c in collocations}
        rb = {_single(w, "<memory>", 0) for w in rulebase}
        return cls(frozenset(uni), frozenset(col), frozenset(rb))


@dataclass(frozen=True)
class FilteredText:
    tokens: tuple[Token, ...]
    original_token_count: int

    def __len__(self):
        return len(self.tokens)

    @property
    def surfaces(self) -> list[str]:
        return [t.surface for t in self.tokens]


def _single(entry: str, path, line: int) -> str:
    words = surfaces(entry)
    if len(words) != 1:
        raise MalformedEntry(path, line, f"expected one word, got {len(words)}: {entry!r}")
    return words[0]


def _pair(entry: str, path, line: int) -> tuple[str, str]:
    words = surfaces(entry)
    if len(words) != 2:
        raise MalformedEntry(path, line, f"expected two words, got {len(words)}: {entry!r}")
    return words[0], words[1]


def _entries(path):
    """Yield ``(line_number, stripped_line)`` for non-blank, non-comment lines."""
    if path is None:
        return
    path = Path(path)
    if not path.is_file():
        raise ResourceMissing(f"stop-word file not found: {path}")
    with path.open(encoding="utf-8-sig") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            yield lineno, line


def load_stopword_set(unigram_path=None, collocation_path=None, rulebase_path=None) -> StopwordSet:
    """Load the three stop-word lists; a ``None`` path means an empty list.

    Raises ResourceMissing for a path that does not exist and MalformedEntry
    (with the offending line number) for entries that do not normalize to
    the expected number of words.
    """
    unigrams = {_single(line, unigram_path, n) for n, line in _entries(unigram_path)}
    collocations = {_pair(line, collocation_path, n) for n, line in _entries(collocation_path)}

    rulebase: set[str] = set()
    categories: dict[str, str] = {}
    for n, line in _entries(rulebase_path):
        word, _, category = line.partition("\t")
        word = _single(word, rulebase_path, n)
        rulebase.add(word)
        category = category.strip()
        if category:
            categories[word] = category

    return StopwordSet(frozenset(unigrams), frozenset(collocations),
                       frozenset(rulebase), categories)


def load_stopword_dir(directory) -> StopwordSet:
    """Load ``unigrams.txt``, ``collocations.txt`` and ``rulebase.txt`` from a directory.

    Missing files are treated as empty lists; a missing directory is an error.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise ResourceMissing(f"stop-word directory not found: {directory}")

    def opt(name):
        p = directory / name
        return p if p.is_file() else None

    return load_stopword_set(opt(UNIGRAMS_FILE), opt(COLLOCATIONS_FILE), opt(RULEBASE_FILE))


def _drop_collocations(tokens: list[Token], collocations) -> list[Token]:
    out = []
    i, n = 0, len(tokens)
    while i < n:
        if i + 1 < n and (tokens[i].surface, tokens[i + 1].surface) in collocations:
            i += 2
            continue
        out.append(tokens[i])
        i += 1
    return out


def filter_tokens(tokens: Sequence[Token], stopwords: StopwordSet, *,
                  fixpoint: bool = False) -> FilteredText:
    """Remove stop words in three stages, keeping survivors' provenance.

    Collocation removal is a single leftmost, non-overlapping pass unless
    ``fixpoint`` is set, in which case it repeats until no adjacent pair of
    survivors matches.
    """
    kept = list(tokens)
    if stopwords.collocations:
        while True:
            before = len(kept)
            kept = _drop_collocations(kept, stopwords.collocations)
            if not fixpoint or len(kept) == before:
                break
    if stopwords.unigrams:
        kept = [t for t in kept if t.surface not in stopwords.unigrams]
    if stopwords.rulebase:
        kept = [t for t in kept if t.surface not in stopwords.rulebase]
    return FilteredText(tuple(kept), len(tokens))
