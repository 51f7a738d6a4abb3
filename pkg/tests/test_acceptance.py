"""Acceptance suite: one test per criterion, one PASS/FAIL line each.

Run alone with ``pytest tests/test_acceptance.py -v``; the result lines are
printed in the terminal summary (and on stdout with ``-s``).
"""

import functools
import json
import math
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

import oracles
from skewsum import (CorpusIndex, IndexCorrupt, PipelineConfig, StopwordSet,
                     build_corpus_index, distribution_stats, filter_tokens, load_index,
                     load_stopword_dir, round_position, save_index, segment_report, skewness,
                     summarize, third_central_moment, tokenize_text)
from skewsum import weighting
from skewsum.normalizer import surfaces

RESULTS = []

STATS_FIELDS = ("n", "E", "D", "sigma", "E2", "E3", "mu3", "As", "k_idx", "m_idx", "degenerate")
POOL = ["olma", "nok", "uzum", "anor", "shaftoli", "oʻrik", "gʻisht", "kitob", "daftar",
        "maktab", "bola", "ona", "ota", "qishloq", "shahar", "daryo", "togʻ", "yoʻl",
        "non", "choy", "suv", "oʻqituvchi", "sinf", "bahor"]


def criterion(num, title):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                _record(num, title, False)
                raise
            _record(num, title, True)
        return wrapper
    return deco


def _record(num, title, ok):
    line = f"[criterion {num}] {'PASS' if ok else 'FAIL'}  {title}"
    RESULTS.append(line)
    print(line)


def _close(a, b, rel=1e-9, floor=1e-12):
    if a is None or b is None:
        return a is b
    return math.isclose(a, b, rel_tol=rel, abs_tol=floor)


# ---------------------------------------------------------------- generators

def random_case(rng):
    """A random text (<= 60 tokens, <= 12 distinct words) and a random toy index."""
    vocab = rng.sample(POOL, rng.randint(1, 12))
    words = [rng.choice(vocab) for _ in range(rng.randint(1, 60))]
    num_docs = rng.randint(1, 8)
    df = {w: rng.randint(0, num_docs) for w in vocab}
    df = {w: d for w, d in df.items() if d}
    seps = [" ", " ", " ", ", ", ". ", "\n", " - ", "! "]
    parts = []
    for w in words:
        parts.append(w.capitalize() if rng.random() < 0.2 else w)
        parts.append(rng.choice(seps))
    return "".join(parts).strip(), words, CorpusIndex(num_docs, df)


def random_cases(count, seed):
    rng = random.Random(seed)
    return [random_case(rng) for _ in range(count)]


def synthetic_document(n_tokens, seed=2024):
    """Zipf-distributed pseudo-Uzbek words in sentences of 6-18 words."""
    rng = random.Random(seed)
    syll = ["ba", "ka", "la", "ma", "na", "ra", "sa", "ta", "yo", "qu", "sh", "oʻ", "gʻa",
            "ch", "zi", "de"]
    vocab = sorted({"".join(rng.choice(syll) for _ in range(rng.randint(2, 4)))
                    for _ in range(3000)})
    words = rng.choices(vocab, [1 / r for r in range(1, len(vocab) + 1)], k=n_tokens)
    sentences, i = [], 0
    while i < len(words):
        k = rng.randint(6, 18)
        s = " ".join(words[i:i + k])
        sentences.append(s[0].upper() + s[1:] + rng.choice(".!?"))
        i += k
    docs = [" ".join(rng.sample(vocab, 200)) for _ in range(300)]
    return " ".join(sentences), build_corpus_index(docs)


def fixture_inputs(fixtures):
    """(text, stopwords, index) triples for the shipped fixtures."""
    sw = load_stopword_dir(fixtures / "uz_stopwords")
    corpus = build_corpus_index(
        (fixtures / "corpus" / f).read_text(encoding="utf-8") for f in ("d1.txt", "d2.txt", "d3.txt"))
    uz = (fixtures / "uz_sample.txt").read_text(encoding="utf-8")
    toy = (fixtures / "toy.txt").read_text(encoding="utf-8")
    out = [(uz, sw, None), (uz, None, None), (uz, sw, corpus), (toy, None, corpus), (toy, None, None)]
    out += [((fixtures / "corpus" / f).read_text(encoding="utf-8"), None, corpus)
            for f in ("d1.txt", "d2.txt")]
    return out


# ---------------------------------------------------------------- criteria

@criterion(1, "moment identities on published reference values")
def test_reference_moment_identities():
    mu3 = third_central_moment(4379.22, 35196780.35, 3.40214e11)
    assert abs(mu3 - 45776660238) / 45776660238 <= 5e-4, mu3

    As = skewness(45776660238, 4002.4)
    assert abs(As - 0.714) <= 0.002, As

    sigma = math.sqrt(16019213.55)
    assert abs(sigma - 4002.40) <= 0.01, sigma

    D = 35196780.35 - 4379.22 ** 2
    assert abs(D - 16019213.55) / 16019213.55 <= 1e-4, D

    assert round_position(4379.22 - 4002.4) == 377


@criterion(2, "oracle equivalence on 300 random texts")
def test_oracle_equivalence():
    config = PipelineConfig(allow_degenerate=True)
    cases = random_cases(300, seed=11)
    assert len(cases) >= 200
    for text, words, index in cases:
        rep = segment_report(text, config, None, index)
        want = oracles.pipeline_stats(words, index.num_docs, dict(index.doc_freq))
        st = rep.stats
        assert rep.vocabulary.words == want["vocab"], text
        for f in STATS_FIELDS:
            if f == "n":
                assert st.n == len(want["vocab"])
            elif f in ("k_idx", "m_idx", "degenerate"):
                assert getattr(st, f) == want[f], (f, text)
            else:
                assert _close(getattr(st, f), want[f]), (f, getattr(st, f), want[f], text)
        for p, q in zip(rep.vocabulary.probs, want["probs"]):
            assert _close(p, q)
        assert rep.decision.kind == want["kind"], text


def _scaled_idf(c):
    orig = weighting.inverse_document_frequency

    @functools.wraps(orig)
    def idf(index, term, variant="smooth"):
        return Fraction(orig(index, term, variant)) * c
    return idf


def _fingerprint(rep):
    return json.dumps(rep.to_dict(vocabulary=False) | {"p": rep.vocabulary.probs},
                      ensure_ascii=False, sort_keys=True)


@criterion(3, "distribution validity and scale invariance")
def test_distribution_validity(fixtures, monkeypatch):
    inputs = [(t, None, idx) for t, _, idx in random_cases(120, seed=3)]
    inputs += fixture_inputs(fixtures)
    big, big_index = synthetic_document(5000, seed=5)
    inputs.append((big, None, big_index))
    constants = [Fraction(7, 3), Fraction(10 ** 9), Fraction(1, 1000003), Fraction(2) ** -40]

    for text, sw, index in inputs:
        for mode in ("token", "sentence"):
            base_cfg = PipelineConfig(mode=mode, allow_degenerate=True)
            base = summarize(text, base_cfg, sw, index)
            probs = base.vocabulary.probs
            assert all(p >= 0 for p in probs)
            assert abs(math.fsum(probs) - 1) <= 1e-9
            ref = _fingerprint(base)

            raw_tf = summarize(text, PipelineConfig(mode=mode, allow_degenerate=True,
                                                    tf_variant="raw"), sw, index)
            assert raw_tf.vocabulary.probs == probs
            assert raw_tf.stats == base.stats
            assert raw_tf.summary.text == base.summary.text

            for c in constants:
                with monkeypatch.context() as m:
                    m.setattr(weighting, "inverse_document_frequency", _scaled_idf(c))
                    scaled = summarize(text, base_cfg, sw, index)
                assert scaled.vocabulary.probs == probs, (c, text[:40])
                assert scaled.stats == base.stats
                assert _fingerprint(scaled) == ref


@criterion(4, "skewness branch: symmetric gives middle, mirror flips prefix/suffix")
def test_skewness_branches():
    rng = random.Random(4)

    # symmetric float distributions, fed to the moments directly
    for _ in range(200):
        half = [rng.uniform(1e-6, 10) for _ in range(rng.randint(1, 8))]
        probs = half + ([rng.uniform(1e-6, 10)] if rng.random() < 0.5 else []) + half[::-1]
        if len(probs) < 2:
            continue
        st = distribution_stats(probs)
        assert abs(st.As) < 1e-12, (st.As, probs)

    # symmetric distributions built from text and index, through the whole pipeline
    for _ in range(200):
        n = rng.randint(2, 12)
        vocab = rng.sample(POOL, n)
        counts = [rng.randint(1, 5) for _ in range((n + 1) // 2)]
        counts = counts + counts[: n // 2][::-1]
        num_docs = rng.randint(1, 6)
        dfs = [rng.randint(0, num_docs) for _ in range((n + 1) // 2)]
        dfs = dfs + dfs[: n // 2][::-1]
        extra = [w for w, c in zip(vocab, counts) for _ in range(c - 1)]
        rng.shuffle(extra)
        text = " ".join(vocab + extra)
        index = CorpusIndex(num_docs, {w: d for w, d in zip(vocab, dfs) if d})
        rep = segment_report(text, None, None, index)
        assert abs(rep.stats.As) < 1e-12
        assert rep.decision.kind == "middle"

    # mirrored sequences: each word in one contiguous block, so reversing the
    # text reverses the vocabulary order
    flips = {"prefix": "suffix", "suffix": "prefix", "middle": "middle"}
    seen = set()
    for _ in range(300):
        n = rng.randint(2, 12)
        vocab = rng.sample(POOL, n)
        num_docs = rng.randint(1, 6)
        index = CorpusIndex(num_docs, {w: rng.randint(1, num_docs) for w in vocab
                                       if rng.random() < 0.7})
        tokens = [w for w in vocab for _ in range(rng.randint(1, 5))]
        fwd = segment_report(" ".join(tokens), None, None, index)
        rev = segment_report(" ".join(tokens[::-1]), None, None, index)
        assert rev.vocabulary.probs == fwd.vocabulary.probs[::-1]
        assert rev.stats.As == -fwd.stats.As
        assert rev.decision.kind == flips[fwd.decision.kind]
        seen.add(fwd.decision.kind)
    assert {"prefix", "suffix"} <= seen


@criterion(5, "compression bound in both modes")
def test_compression_bound(fixtures):
    inputs = fixture_inputs(fixtures)
    inputs += [(t, None, idx) for t, _, idx in random_cases(100, seed=5)]
    big, big_index = synthetic_document(20000, seed=9)
    inputs.append((big, None, big_index))
    checked = 0
    for text, sw, index in inputs:
        original = len(tokenize_text(text))
        bound = max(1, original * 3 // 10)
        for mode in ("token", "sentence"):
            for n in (1, 2, 3):
                rep = summarize(text, PipelineConfig(n=n, mode=mode, allow_degenerate=True),
                                sw, index)
                words = len(surfaces(rep.summary.text))
                assert words == rep.summary.word_count
                assert words <= bound, (mode, n, words, bound)
                checked += 1
    assert checked >= 600


def _write_lists(tmp_path, name, unigrams, collocations, rulebase):
    d = tmp_path / name
    d.mkdir()
    (d / "unigrams.txt").write_text("\n".join(unigrams) + "\n", encoding="utf-8")
    (d / "collocations.txt").write_text("\n".join(" ".join(c) for c in collocations) + "\n",
                                        encoding="utf-8")
    (d / "rulebase.txt").write_text("\n".join(f"{w}\tadverb" for w in rulebase) + "\n",
                                    encoding="utf-8")
    return d


def _check_filtered(tokens, sw, fixpoint):
    kept = filter_tokens(tokens, sw, fixpoint=fixpoint).tokens
    for t in kept:
        assert t.surface not in sw.unigrams and t.surface not in sw.rulebase, t
    for a, b in zip(kept, kept[1:]):
        if b.orig_index == a.orig_index + 1:
            assert (a.surface, b.surface) not in sw.collocations, (a, b)
    if fixpoint:
        after_stage1 = filter_tokens(tokens, StopwordSet(collocations=sw.collocations),
                                     fixpoint=True).tokens
        for a, b in zip(after_stage1, after_stage1[1:]):
            assert (a.surface, b.surface) not in sw.collocations
    return len(tokens) - len(kept)


@criterion(6, "stop-word absence after filtering")
def test_stopword_absence(fixtures, tmp_path):
    rng = random.Random(6)
    sets = [load_stopword_dir(fixtures / "uz_stopwords")]
    for k in range(20):
        words = rng.sample(POOL, 10)
        pairs = {(rng.choice(POOL[:8]), rng.choice(POOL[:8])) for _ in range(rng.randint(1, 6))}
        d = _write_lists(tmp_path, f"lists{k}", words[:3], sorted(pairs), words[3:5])
        sets.append(load_stopword_dir(d))

    uz_tokens = tokenize_text((fixtures / "uz_sample.txt").read_text(encoding="utf-8"))
    removed = _check_filtered(uz_tokens, sets[0], False)
    assert removed > 0
    for sw in sets[1:]:
        for _ in range(50):
            text = " ".join(rng.choice(POOL[:12]) for _ in range(rng.randint(1, 60)))
            tokens = tokenize_text(text)
            for fixpoint in (False, True):
                removed += _check_filtered(tokens, sw, fixpoint)
    assert removed > 1000


def _random_index(rng):
    letters = "abdefghijklmnopqrstuvxyzʻ"
    num_docs = rng.randint(1, 10 ** rng.randint(1, 6))
    terms = {rng.choice("abdgo") + "".join(rng.choice(letters) for _ in range(rng.randint(0, 9)))
             for _ in range(rng.randint(0, 60))}
    df = {t: rng.randint(1, num_docs) for t in terms}
    fp = "sha256:" + "".join(rng.choice("0123456789abcdef") for _ in range(64))
    return CorpusIndex(num_docs, df, fp)


@criterion(7, "index persistence round-trip and corruption detection")
def test_index_round_trip(tmp_path):
    rng = random.Random(7)
    path = tmp_path / "index.json"
    damaged = tmp_path / "damaged.json"
    detected = harmless = 0
    for _ in range(100):
        index = _random_index(rng)
        save_index(index, path)
        back = load_index(path)
        assert back.num_docs == index.num_docs
        assert dict(back.doc_freq) == dict(index.doc_freq)
        assert back.fingerprint == index.fingerprint

        data = path.read_bytes()
        for _ in range(10):
            damaged.write_bytes(data[:rng.randint(0, len(data) - 2)])
            with pytest.raises(IndexCorrupt):
                load_index(damaged)
            detected += 1
        for _ in range(30):
            buf = bytearray(data)
            pos = rng.randrange(len(buf))
            buf[pos] = rng.choice([b for b in range(256) if b != buf[pos]])
            damaged.write_bytes(bytes(buf))
            try:
                got = load_index(damaged)
            except IndexCorrupt:
                detected += 1
                continue
            # a load that succeeds must mean exactly the same thing
            assert (got.num_docs, dict(got.doc_freq), got.fingerprint) == \
                (index.num_docs, dict(index.doc_freq), index.fingerprint), (pos, bytes(buf))
            harmless += 1
    assert detected > 3000


@criterion(8, "50,000-token document in under 5 s, byte-identical across runs")
def test_determinism_and_scale(tmp_path):
    text, index = synthetic_document(50000)
    assert len(tokenize_text(text)) == 50000

    for mode in ("token", "sentence"):
        config = PipelineConfig(mode=mode)
        t0 = time.perf_counter()
        first = summarize(text, config, None, index)
        elapsed = time.perf_counter() - t0
        print(f"  {mode} mode: {elapsed:.2f} s, {first.summary.word_count} words")
        assert elapsed < 5.0, elapsed
        second = summarize(text, config, None, index)
        assert json.dumps(first.to_dict(vocabulary=True), ensure_ascii=False) == \
            json.dumps(second.to_dict(vocabulary=True), ensure_ascii=False)

    # separate interpreters with different hash seeds must agree byte for byte
    doc = tmp_path / "big.txt"
    doc.write_text(text, encoding="utf-8")
    idx = tmp_path / "big.json"
    save_index(index, idx)
    outputs = []
    for seed in ("1", "2"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        proc = subprocess.run(
            [sys.executable, "-m", "skewsum", "summarize", str(doc), "--index", str(idx),
             "--mode", "sentence", "--format", "json"],
            capture_output=True, env=env, timeout=60)
        assert proc.returncode == 0, proc.stderr
        outputs.append(proc.stdout)
    assert outputs[0] == outputs[1]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
