import os

import pytest

from neologia import classify, sampling
from neologia.corpus import parse_corpus
from neologia.lexicon import load_lexicon

FIXTURES = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "fixtures")


def fixture_path(name):
    return os.path.join(FIXTURES, name)


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon(fixture_path("oed-mini.jsonl"))


@pytest.fixture(scope="session")
def corpus17():
    return parse_corpus(fixture_path("ceec17.jsonl"), period=(1640, 1660))


@pytest.fixture(scope="session")
def corpus18():
    return parse_corpus(fixture_path("ceec18.jsonl"), period=(1760, 1780))


@pytest.fixture(scope="session")
def first17(corpus17):
    return sampling.first_appearances(corpus17)


@pytest.fixture(scope="session")
def first18(corpus18):
    return sampling.first_appearances(corpus18)


@pytest.fixture(scope="session")
def plan_all17(corpus17):
    buckets = sampling.build_buckets(corpus17, (1640, 1660))
    return sampling.draw_sample(buckets, 2_000_000, 42, period=(1640, 1660))


@pytest.fixture(scope="session")
def plan_all18(corpus18):
    buckets = sampling.build_buckets(corpus18, (1760, 1780))
    return sampling.draw_sample(buckets, 2_000_000, 42, period=(1760, 1780))


@pytest.fixture(scope="session")
def pool17(plan_all17, first17):
    return sampling.candidate_pool(plan_all17, first17)


@pytest.fixture(scope="session")
def pool18(plan_all18, first18):
    return sampling.candidate_pool(plan_all18, first18)


@pytest.fixture(scope="session")
def log17():
    return classify.read_decision_log(fixture_path("decisions17.jsonl"))


@pytest.fixture(scope="session")
def log18():
    return classify.read_decision_log(fixture_path("decisions18.jsonl"))


@pytest.fixture(scope="session")
def records17(pool17, log17, corpus17, lexicon):
    return classify.classify_all(pool17, log17, corpus17, lexicon, 40)


@pytest.fixture(scope="session")
def records18(pool18, log18, corpus18, lexicon):
    return classify.classify_all(pool18, log18, corpus18, lexicon, 40)
