"""Background document-frequency index used for IDF."""

from __future__ import annotations

import hashlib
import json
import os
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from pathlib import Path

from .errors import EmptyCorpus, IndexCorrupt, IndexVersionError, ResourceMissing
from .normalizer import surfaces

INDEX_VERSION = 1


@dataclass(frozen=True)
class CorpusIndex:
    num_docs: int
    doc_freq: Mapping[str, int] = field(default_factory=dict)
    fingerprint: str = ""

    def __post_init__(self):
        if self.num_docs < 1:
            raise ValueError("num_docs must be >= 1")

    def __len__(self):
        return len(self.doc_freq)

    def __contains__(self, term):
        return term in self.doc_freq

    def to_dict(self) -> dict:
        d = {
            "version": INDEX_VERSION,
            "num_docs": self.num_docs,
            "fingerprint": self.fingerprint,
            "doc_freq": {t: self.doc_freq[t] for t in sorted(self.doc_freq)},
        }
        d["checksum"] = _checksum(d)
        return d


def _checksum(obj: dict) -> str:
    """Hash of the canonical serialization of everything but the checksum itself."""
    body = {k: obj.get(k) for k in ("version", "num_docs", "fingerprint", "doc_freq")}
    canon = json.dumps(body, ensure_ascii=False, sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(canon.encode("utf-8")).hexdigest()


def _fingerprint(doc_hashes: Iterable[str]) -> str:
    # order-insensitive, like the index itself
    h = hashlib.sha256()
    for d in sorted(doc_hashes):
        h.update(d.encode("ascii"))
    return "sha256:" + h.hexdigest()


def build_corpus_index(documents: Iterable[str]) -> CorpusIndex:
    """Count, for every term, how many documents contain it.

    Documents are normalized and tokenized but stop words are kept, so the
    statistics describe the unfiltered corpus vocabulary.
    """
    df: Counter[str] = Counter()
    hashes = []
    for doc in documents:
        hashes.append(hashlib.sha256(doc.encode("utf-8")).hexdigest())
        df.update(set(surfaces(doc)))
    if not hashes:
        raise EmptyCorpus("cannot build an index from zero documents")
    return CorpusIndex(len(hashes), dict(df), _fingerprint(hashes))


def build_index_from_dir(directory, pattern: str = "*.txt") -> CorpusIndex:
    """One document per file matching ``pattern`` (sorted by name)."""
    directory = Path(directory)
    if not directory.is_dir():
        raise ResourceMissing(f"corpus directory not found: {directory}")
    paths = sorted(p for p in directory.glob(pattern) if p.is_file())
    if not paths:
        raise EmptyCorpus(f"no {pattern} files in {directory}")
    return build_corpus_index(p.read_text(encoding="utf-8-sig") for p in paths)


def document_frequency(index: CorpusIndex, term: str) -> int:
    return index.doc_freq.get(term, 0)


def save_index(index: CorpusIndex, path) -> None:
    path = Path(path)
    data = json.dumps(index.to_dict(), ensure_ascii=False, indent=1, sort_keys=False)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(data + "\n", encoding="utf-8")
    os.replace(tmp, path)


def index_from_dict(obj) -> CorpusIndex:
    if not isinstance(obj, dict):
        raise IndexCorrupt("index root must be a JSON object")
    # checked before the version so a damaged version field reads as corruption
    if "checksum" in obj and obj["checksum"] != _checksum(obj):
        raise IndexCorrupt("index checksum mismatch")
    if "version" not in obj:
        raise IndexCorrupt("index has no version field")
    if obj["version"] != INDEX_VERSION:
        raise IndexVersionError(
            f"index version {obj['version']!r} is not supported (expected {INDEX_VERSION})")
    try:
        num_docs = obj["num_docs"]
        fingerprint = obj["fingerprint"]
        raw_df = obj["doc_freq"]
    except KeyError as exc:
        raise IndexCorrupt(f"index is missing field {exc.args[0]!r}") from None
    if type(num_docs) is not int or num_docs < 1:
        raise IndexCorrupt(f"num_docs must be a positive integer, got {num_docs!r}")
    if not isinstance(fingerprint, str):
        raise IndexCorrupt("fingerprint must be a string")
    if not isinstance(raw_df, dict):
        raise IndexCorrupt("doc_freq must be an object")
    for term, df in raw_df.items():
        if type(df) is not int or not 1 <= df <= num_docs:
            raise IndexCorrupt(f"doc_freq[{term!r}]={df!r} outside [1, {num_docs}]")
    return CorpusIndex(num_docs, dict(raw_df), fingerprint)


def load_index(path) -> CorpusIndex:
    path = Path(path)
    if not path.is_file():
        raise ResourceMissing(f"index file not found: {path}")
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise IndexCorrupt(f"{path}: {exc}") from None
    return index_from_dict(obj)
