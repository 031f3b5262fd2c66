from __future__ import annotations

from datetime import date
from pathlib import Path

import pytest

from cricrules.confrontation import load_roster
from cricrules.corpus import DeliveryRecord, load_corpus
from cricrules.lexicon import default_lexicon

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def lexicon():
    return default_lexicon()


@pytest.fixture(scope="session")
def small_corpus():
    corpus, report = load_corpus(FIXTURES / "corpus_small.tsv")
    assert not report.rejected
    return corpus


@pytest.fixture(scope="session")
def twoepoch_corpus():
    corpus, report = load_corpus(FIXTURES / "corpus_twoepoch.tsv")
    assert not report.rejected
    return corpus


@pytest.fixture(scope="session")
def roster():
    return load_roster(FIXTURES / "roster.tsv")


def make_record(**overrides) -> DeliveryRecord:
    """A valid delivery record with every field overridable."""
    base = dict(
        match_id="M001",
        date=date(2019, 8, 1),
        innings=1,
        over=10,
        ball_in_over=3,
        bowler="E Navarro",
        batsman="A Larkin",
        outcome="0",
        text="good length, outside off, blocked.",
    )
    base.update(overrides)
    return DeliveryRecord(**base)
