from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from wolofbot.dialogue import load_domain
from wolofbot.gateway.service import packaged_domain_path
from wolofbot.nlu import load_dataset, train_intent_model
from wolofbot.textcore import normalize, read_corpus, tokenize

FIXTURES = Path(__file__).parent / "fixtures"

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def sargal_dataset():
    from wolofbot.cli import packaged_dataset_path

    return load_dataset(packaged_dataset_path())


@pytest.fixture(scope="session")
def sargal_model(sargal_dataset):
    return train_intent_model(sargal_dataset)


@pytest.fixture(scope="session")
def sargal_domain():
    return load_domain(packaged_domain_path())


@pytest.fixture(scope="session")
def lm_fixture_corpus():
    return [tokenize(normalize(line)) for line in read_corpus(FIXTURES / "lm_corpus_10k.txt")]


@pytest.fixture(scope="session")
def wolof_wordlist():
    return read_corpus(FIXTURES / "wolof_words_1000.txt")
