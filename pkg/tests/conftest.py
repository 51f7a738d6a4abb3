import sys
from pathlib import Path

import pytest

from skewsum import build_corpus_index, load_stopword_dir

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures():
    return FIXTURES


@pytest.fixture
def toy_index():
    # N=3, df(olma)=2, df(nok)=1, df(uzum)=1, df(anor)=1
    return build_corpus_index(["olma nok", "olma uzum", "anor"])


@pytest.fixture
def uz_text():
    return (FIXTURES / "uz_sample.txt").read_text(encoding="utf-8")


@pytest.fixture
def uz_stopwords():
    return load_stopword_dir(FIXTURES / "uz_stopwords")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(results):
        terminalreporter.write_line(line)
