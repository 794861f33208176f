import pytest

from gbpe import sample_corpus_path, vocab_from_lines


@pytest.fixture
def t1():
    """Tiny reference corpus used for hand-checked values."""
    return {"ab": 3, "abc": 2, "bc": 1}


@pytest.fixture(scope="session")
def sample_lines():
    with open(sample_corpus_path(), encoding="utf-8") as handle:
        return [line.rstrip("\n") for line in handle]


@pytest.fixture(scope="session")
def sample_vocab(sample_lines):
    return vocab_from_lines(sample_lines)
