"""Text normalization, tokenization and sentence splitting for Uzbek Latin script.

All character offsets are Unicode codepoint indices into the *raw* text the
caller passed in (i.e. plain ``str`` indices), never byte offsets.
"""

from __future__ import annotations

import re
import unicodedata
from bisect import bisect_left
from dataclasses import dataclass

from .errors import EncodingError

OKINA = "ʻ"  # MODIFIER LETTER TURNED COMMA, the oʻ / gʻ mark
APOSTROPHES = "'‘’`ʼ"

_APOSTROPHE_AFTER_OG = re.compile(r"(?<=[og])['‘’`ʼ]")
_WORD = re.compile(r"[a-z][a-zʻ]*")
_TERMINATOR = re.compile(r"[.!?…]+(?=\s|$)")


@dataclass(frozen=True, slots=True)
class Token:
    surface: str
    char_start: int
    char_end: int
    orig_index: int


@dataclass(frozen=True, slots=True)
class Sentence:
    char_start: int
    char_end: int
    token_range: tuple[int, int]

    @property
    def n_tokens(self) -> int:
        return self.token_range[1] - self.token_range[0]


def ensure_text(raw) -> str:
    if isinstance(raw, (bytes, bytearray)):
        try:
            return bytes(raw).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise EncodingError(f"input is not valid UTF-8: {exc}") from None
    if not isinstance(raw, str):
        raise TypeError(f"expected str or bytes, got {type(raw).__name__}")
    try:
        raw.encode("utf-8")
    except UnicodeEncodeError as exc:
        raise EncodingError(f"input is not encodable as UTF-8: {exc}") from None
    return raw


def _fold(chunk: str) -> str:
    return unicodedata.normalize("NFKC", unicodedata.normalize("NFKC", chunk).lower())


def _normalize_mapped(raw: str) -> tuple[str, list[tuple[int, int]] | None]:
    """Normalize ``raw`` and map every output codepoint back to a raw span.

    Returns ``(text, origin)``; ``origin`` is ``None`` when the mapping is the
    identity (pure ASCII input).
    """
    if raw.isascii():
        return _APOSTROPHE_AFTER_OG.sub(OKINA, raw.lower()), None

    out: list[str] = []
    origin: list[tuple[int, int]] = []
    n = len(raw)
    i = 0
    while i < n:
        j = i + 1
        # a cluster is a starter plus any trailing combining marks
        while j < n and unicodedata.combining(raw[j]):
            j += 1
        piece = _fold(raw[i:j])
        out.append(piece)
        origin.extend([(i, j)] * len(piece))
        i = j
    text = _APOSTROPHE_AFTER_OG.sub(OKINA, "".join(out))
    return text, origin


def normalize_text(raw: str | bytes) -> str:
    """Lowercase, NFKC-normalize and unify the oʻ/gʻ apostrophe.

    Any apostrophe-like mark directly after ``o`` or ``g`` becomes U+02BB;
    elsewhere the mark is left alone and the tokenizer treats it as a
    separator.
    """
    return _normalize_mapped(ensure_text(raw))[0]


def tokenize(normalized: str) -> list[Token]:
    """Split already-normalized text into word tokens.

    Offsets refer to ``normalized`` itself. Use :func:`tokenize_text` to get
    offsets into un-normalized input.
    """
    return [
        Token(m.group(), m.start(), m.end(), k)
        for k, m in enumerate(_WORD.finditer(normalized))
    ]


def tokenize_text(raw: str | bytes) -> list[Token]:
    """Normalize and tokenize ``raw``; spans point into ``raw``."""
    raw = ensure_text(raw)
    text, origin = _normalize_mapped(raw)
    if origin is None:
        return tokenize(text)
    return [
        Token(m.group(), origin[m.start()][0], origin[m.end() - 1][1], k)
        for k, m in enumerate(_WORD.finditer(text))
    ]


def surfaces(raw: str | bytes) -> list[str]:
    """Token surfaces only (cheaper than building Token objects)."""
    return _WORD.findall(normalize_text(raw))


def split_sentences(raw: str | bytes, tokens: list[Token] | None = None) -> list[Sentence]:
    """Segment ``raw`` at ``.``, ``!``, ``?`` or ``…`` runs followed by whitespace/end.

    Fragments holding no word token are merged into a neighbour, so every
    returned sentence covers at least one token and the sentences tile the
    stripped text.
    """
    raw = ensure_text(raw)
    if tokens is None:
        tokens = tokenize_text(raw)
    if not tokens:
        return []
    starts = [t.char_start for t in tokens]

    pieces: list[tuple[int, int]] = []
    pos = 0
    for m in _TERMINATOR.finditer(raw):
        pieces.append((pos, m.end()))
        pos = m.end()
    if pos < len(raw):
        pieces.append((pos, len(raw)))

    spans: list[list[int]] = []  # [char_start, char_end, tok_lo, tok_hi]
    pending_start: int | None = None
    for lo, hi in pieces:
        seg = raw[lo:hi]
        stripped = seg.strip()
        if not stripped:
            continue
        cs = lo + (len(seg) - len(seg.lstrip()))
        ce = cs + len(stripped)
        t_lo, t_hi = bisect_left(starts, cs), bisect_left(starts, ce)
        if t_lo == t_hi:
            if spans and pending_start is None and t_lo == len(tokens):
                spans[-1][1] = ce
            elif pending_start is None:
                pending_start = cs
            continue
        if pending_start is not None:
            cs, pending_start = pending_start, None
        spans.append([cs, ce, t_lo, t_hi])

    return [Sentence(cs, ce, (lo, hi)) for cs, ce, lo, hi in spans]
