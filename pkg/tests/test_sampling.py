import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from neologia.corpus import Corpus, Letter, Person, Token
from neologia.sampling import (
    BucketKey,
    PlanError,
    attach_candidates,
    build_buckets,
    candidate_pool,
    draw_sample,
    first_appearances,
    load_plan,
    plan_from_json,
    plan_to_json,
    save_plan,
)


def _corpus(letters_spec, persons=None):
    """letters_spec: (id, year, [(surface, flags)...], gender, rank, rel)"""
    persons = persons or {}
    out_persons = {}
    letters = []
    for lid, year, tokens, gender, rank, rel in letters_spec:
        pid = f"w_{gender}_{rank}"
        out_persons[pid] = Person(pid, pid, gender, rank)
        out_persons["r0"] = Person("r0", "r0", "unknown", "unknown")
        letters.append(
            Letter(
                id=lid,
                collection="T",
                sender_id=pid,
                recipient_id="r0",
                year=year,
                relationship=rel,
                tokens=[Token(s, i * 8, frozenset(f)) for i, (s, f) in enumerate(tokens)],
            )
        )
    letters.sort(key=lambda l: (l.year, l.id))
    years = [l.year for l in letters] or [1640]
    return Corpus(persons=out_persons, letters=letters, period=(min(years), max(years)))


def test_first_appearance_first_wins():
    corpus = _corpus(
        [
            ("A", 1643, [("tea", [])], "male", "gentry", "close_friends"),
            ("B", 1650, [("tea", [])], "male", "gentry", "close_friends"),
        ]
    )
    first = first_appearances(corpus)
    assert first == {"A": ["tea"]}


def test_first_appearance_ties_break_by_id():
    corpus = _corpus(
        [
            ("A002", 1643, [("tea", [])], "male", "gentry", "close_friends"),
            ("A001", 1643, [("tea", [])], "male", "gentry", "close_friends"),
        ]
    )
    assert first_appearances(corpus) == {"A001": ["tea"]}


def test_first_appearance_ignores_flagged():
    corpus = _corpus(
        [
            ("A", 1643, [("Dunkerke", ["proper_noun"]), ("tea", [])], "male", "gentry", "close_friends"),
            ("B", 1650, [("dunkerke", [])], "male", "gentry", "close_friends"),
        ]
    )
    assert first_appearances(corpus) == {"A": ["tea"], "B": ["dunkerke"]}


@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.tuples(
            st.integers(min_value=1640, max_value=1660),
            st.lists(st.sampled_from(["tea", "sugar", "ink", "quill", "wax"]), max_size=6),
        ),
        max_size=12,
    )
)
def test_first_appearance_matches_quadratic_oracle(spec):
    letters_spec = [
        (f"L{i:03d}", year, [(w, []) for w in words], "male", "gentry", "close_friends")
        for i, (year, words) in enumerate(spec)
    ]
    corpus = _corpus(letters_spec)
    got = first_appearances(corpus)
    # oracle: for each form, min (year, id) letter containing it
    forms = {t.surface.casefold() for l in corpus.letters for t in l.tokens}
    expected = {}
    for form in forms:
        holders = [l for l in corpus.letters if form in {t.surface.casefold() for t in l.tokens}]
        first = min(holders, key=lambda l: (l.year, l.id))
        expected.setdefault(first.id, set()).add(form)
    assert {k: set(v) for k, v in got.items()} == expected
    # each form attributed at most once
    seen = [f for v in got.values() for f in v]
    assert len(seen) == len(set(seen))


def test_build_buckets_single_letter():
    corpus = _corpus([("A", 1643, [("a", []), ("b", [])], "male", "gentry", "close_friends")])
    buckets = build_buckets(corpus, (1640, 1660))
    assert len(buckets) == 1
    assert buckets[0].word_count == 2


def test_build_buckets_partition(corpus17):
    buckets = build_buckets(corpus17, (1640, 1660))
    ids = [l.id for b in buckets for l in b.letters]
    assert sorted(ids) == sorted(l.id for l in corpus17.letters)
    assert sum(b.word_count for b in buckets) == 36265


def test_no_other_family_bucket_in_17th(corpus17):
    buckets = build_buckets(corpus17, (1640, 1660))
    assert not any(b.key.relationship == "other_family" for b in buckets)


def test_build_buckets_empty_period(corpus17):
    with pytest.raises(PlanError):
        build_buckets(corpus17, (1200, 1210))


def test_draw_sample_single_letter():
    corpus = _corpus([("A", 1643, [("w", [])] * 100, "male", "gentry", "close_friends")])
    buckets = build_buckets(corpus, (1640, 1660))
    plan = draw_sample(buckets, 100, seed=1)
    assert plan.letter_ids() == ["A"]


def test_draw_sample_deterministic(corpus17):
    buckets = build_buckets(corpus17, (1640, 1660))
    a = draw_sample(buckets, 5000, seed=42)
    b = draw_sample(buckets, 5000, seed=42)
    assert plan_to_json(a) == plan_to_json(b)
    c = draw_sample(buckets, 5000, seed=43)
    assert plan_to_json(a) != plan_to_json(c)


def test_draw_sample_overshoot_bound(corpus17):
    buckets = build_buckets(corpus17, (1640, 1660))
    plan = draw_sample(buckets, 36265, seed=42)
    words = {l.id: l.word_count for b in buckets for l in b.letters}
    per_bucket = plan.target_words_per_bucket
    for key, ids in plan.selected.items():
        bucket = next(b for b in buckets if b.key == key)
        achieved = sum(words[lid] for lid in ids)
        assert achieved == plan.achieved[key]
        assert achieved <= per_bucket + max(l.word_count for l in bucket.letters)


def test_draw_sample_monotone(corpus17):
    buckets = build_buckets(corpus17, (1640, 1660))
    small = draw_sample(buckets, 3000, seed=42)
    big = draw_sample(buckets, 9000, seed=42)
    assert set(small.letter_ids()) <= set(big.letter_ids())


def test_candidate_pool_empty_plan(corpus17, first17):
    buckets = build_buckets(corpus17, (1640, 1660))
    plan = draw_sample(buckets, 1, seed=1)
    plan.selected = {}
    assert candidate_pool(plan, first17) == []


def test_candidate_pool_consistency(corpus17, first17, plan_all17):
    pool = candidate_pool(plan_all17, first17)
    for form, lid in pool:
        assert form in first17[lid]
    # full-corpus plan captures every first appearance
    assert len(pool) == sum(len(v) for v in first17.values())


def test_candidate_pool_ratio(corpus17, first17, plan_all17):
    buckets = build_buckets(corpus17, (1640, 1660))
    plan9 = draw_sample(buckets, 1800, seed=42)
    pool9 = candidate_pool(plan9, first17)
    full = candidate_pool(plan_all17, first17)
    assert 0.07 <= len(pool9) / len(full) <= 0.11


def test_restricted_plan_rejects_non_first_appearance(corpus17, first17):
    plan = load_plan_fixture()
    plan.candidate_forms[plan.letter_ids()[0]] = ["the"]
    with pytest.raises(PlanError):
        candidate_pool(plan, first17)


def load_plan_fixture():
    from tests.conftest import fixture_path

    return load_plan(fixture_path("plan17_review.json"))


def test_review_plan_is_valid_subset(corpus17, first17):
    plan = load_plan_fixture()
    pool = candidate_pool(plan, first17)
    assert len(pool) == 63


def test_plan_round_trip(tmp_path, plan_all17, first17):
    attach_candidates(plan_all17, first17)
    path = tmp_path / "plan.json"
    save_plan(plan_all17, str(path))
    again = load_plan(str(path))
    assert plan_to_json(again) == plan_to_json(plan_all17)
    assert isinstance(next(iter(again.selected)), BucketKey)
