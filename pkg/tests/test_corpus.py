import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from neologia.corpus import (
    Corpus,
    CorpusError,
    Letter,
    Person,
    Token,
    distinct_word_forms,
    parse_corpus,
    running_words,
    serialize_corpus,
    tokenize,
)


def test_tokenize_empty():
    assert tokenize("") == []


def test_tokenize_whitespace_split_offsets():
    tokens = tokenize("Packette Boate")
    assert [t.surface for t in tokens] == ["Packette", "Boate"]
    assert [t.offset for t in tokens] == [0, 9]


def test_tokenize_strips_outer_punctuation_keeps_hyphen():
    tokens = tokenize("pudding-less, &")
    assert [t.surface for t in tokens] == ["pudding-less", "&"]


def test_tokenize_superscript_collapses():
    tokens = tokenize("came w^th hym")
    assert [t.surface for t in tokens] == ["came", "wth", "hym"]


def test_tokenize_editorial_brackets():
    tokens = tokenize("he was [not] pleased")
    assert [t.surface for t in tokens] == ["he", "was", "not", "pleased"]
    assert tokens[2].flags == frozenset({"editorial"})
    assert tokens[1].flags == frozenset()


def test_tokenize_multiword_editorial():
    tokens = tokenize("gone [two words] here")
    flags = [t.flags for t in tokens]
    assert flags[1] == frozenset({"editorial"})
    assert flags[2] == frozenset({"editorial"})
    assert flags[3] == frozenset()


def _write(tmp_path, lines):
    path = tmp_path / "corpus.jsonl"
    path.write_text("\n".join(json.dumps(obj) for obj in lines) + "\n", encoding="utf-8")
    return str(path)


PERSON = {"type": "person", "id": "p1", "name": "A Writer", "gender": "male", "rank": "gentry"}
PERSON2 = {"type": "person", "id": "p2", "name": "A Reader", "gender": "female", "rank": "unknown"}


def letter(i, year=1645, text="a fewe wordes", **kw):
    obj = {
        "type": "letter",
        "id": f"L{i:03d}",
        "collection": "TEST",
        "year": year,
        "sender": "p1",
        "recipient": "p2",
        "relationship": "close_friends",
        "text": text,
    }
    obj.update(kw)
    return obj


def test_parse_empty_letter_list(tmp_path):
    corpus = parse_corpus(_write(tmp_path, [PERSON, PERSON2]), period=(1640, 1660))
    assert corpus.letters == []
    assert len(corpus.persons) == 2


def test_parse_orders_letters_by_year_then_id(tmp_path):
    path = _write(
        tmp_path,
        [PERSON, PERSON2, letter(2, year=1650), letter(1, year=1650), letter(3, year=1641)],
    )
    corpus = parse_corpus(path)
    assert [l.id for l in corpus.letters] == ["L003", "L001", "L002"]


def test_parse_rejects_unknown_relationship(tmp_path):
    path = _write(tmp_path, [PERSON, PERSON2, letter(1, relationship="enemies")])
    with pytest.raises(CorpusError, match="relationship"):
        parse_corpus(path)


def test_parse_rejects_duplicate_letter_id(tmp_path):
    path = _write(tmp_path, [PERSON, PERSON2, letter(1), letter(1)])
    with pytest.raises(CorpusError, match="duplicate letter"):
        parse_corpus(path)


def test_parse_rejects_unresolved_person(tmp_path):
    path = _write(tmp_path, [PERSON, PERSON2, letter(1, sender="ghost")])
    with pytest.raises(CorpusError, match="unknown person"):
        parse_corpus(path)


def test_parse_rejects_year_outside_period(tmp_path):
    path = _write(tmp_path, [PERSON, PERSON2, letter(1, year=1700)])
    with pytest.raises(CorpusError, match="outside declared period"):
        parse_corpus(path, period=(1640, 1660))


def test_parse_reports_line_number(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text(json.dumps(PERSON) + "\n{broken\n", encoding="utf-8")
    with pytest.raises(CorpusError, match="line 2"):
        parse_corpus(str(path))


def test_parse_rejects_text_and_tokens(tmp_path):
    bad = letter(1)
    bad["tokens"] = [{"s": "a", "o": 0}]
    path = _write(tmp_path, [PERSON, PERSON2, bad])
    with pytest.raises(CorpusError, match="exactly one"):
        parse_corpus(path)


def test_parse_rejects_birth_after_letter(tmp_path):
    early = dict(PERSON, birth_year=1650)
    path = _write(tmp_path, [early, PERSON2, letter(1, year=1645)])
    with pytest.raises(CorpusError, match="birth year"):
        parse_corpus(path)


def _mini_corpus(tokens_by_letter):
    persons = {
        "p1": Person("p1", "A", "male", "gentry"),
        "p2": Person("p2", "B", "female", "unknown"),
    }
    letters = []
    for i, tokens in enumerate(tokens_by_letter):
        letters.append(
            Letter(
                id=f"L{i:03d}",
                collection="TEST",
                sender_id="p1",
                recipient_id="p2",
                year=1640 + i,
                relationship="close_friends",
                tokens=[Token(s, o * 8, frozenset(f)) for o, (s, f) in enumerate(tokens)],
            )
        )
    return Corpus(persons=persons, letters=letters, period=(1640, 1660))


def test_distinct_word_forms_case_folds():
    corpus = _mini_corpus([[("Tea", []), ("tea", [])]])
    assert distinct_word_forms(corpus) == {"tea"}


def test_distinct_word_forms_flag_exclusion():
    corpus = _mini_corpus([[("tea", []), ("Dunkerke", ["proper_noun"])]])
    assert distinct_word_forms(corpus, include_flagged=False) == {"tea"}
    assert distinct_word_forms(corpus, include_flagged=True) == {"tea", "dunkerke"}


def test_running_words_empty_filter():
    corpus = _mini_corpus([[("a", []), ("b", [])], [("c", [])]])
    assert running_words(corpus, lambda l: False) == 0
    assert running_words(corpus) == 3


def test_fixture_distinct_forms_against_scan(corpus17):
    # independent linear scan over every token
    expected = set()
    for l in corpus17.letters:
        for t in l.tokens:
            if not (t.flags & {"foreign", "proper_noun", "abbreviation"}):
                expected.add(t.surface.casefold())
    assert distinct_word_forms(corpus17, include_flagged=False) == expected
    assert distinct_word_forms(corpus17, include_flagged=False) <= distinct_word_forms(
        corpus17, include_flagged=True
    )


def test_fixture_running_words(corpus17, corpus18):
    assert running_words(corpus17) == 36265
    male = running_words(
        corpus17, lambda l: corpus17.persons[l.sender_id].gender == "male"
    )
    assert male == 23459
    friends18 = running_words(corpus18, lambda l: l.relationship == "close_friends")
    assert friends18 == 14771


def test_running_words_matches_recount(corpus17):
    assert running_words(corpus17) == sum(len(l.tokens) for l in corpus17.letters)


def test_round_trip(tmp_path, corpus17):
    out = tmp_path / "again.jsonl"
    serialize_corpus(corpus17, str(out))
    again = parse_corpus(str(out), period=corpus17.period)
    assert [l.id for l in again.letters] == [l.id for l in corpus17.letters]
    assert again.persons == corpus17.persons
    for a, b in zip(again.letters, corpus17.letters):
        assert [(t.surface, t.flags) for t in a.tokens] == [
            (t.surface, t.flags) for t in b.tokens
        ]


@settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.tuples(st.integers(min_value=1600, max_value=1700), st.text("ab", min_size=1, max_size=3)),
        max_size=8,
    )
)
def test_letter_order_is_function_of_year_and_id(pairs):
    seen = set()
    unique = []
    for year, suffix in pairs:
        lid = f"L{suffix}"
        if lid not in seen:
            seen.add(lid)
            unique.append((year, lid))
    letters = [
        Letter(lid, "T", "p1", "p2", year, "close_friends", []) for year, lid in unique
    ]
    corpus = Corpus(
        persons={
            "p1": Person("p1", "A", "male", "gentry"),
            "p2": Person("p2", "B", "female", "unknown"),
        },
        letters=sorted(letters, key=lambda l: (l.year, l.id)),
        period=(1600, 1700),
    )
    assert [l.id for l in corpus.letters] == [
        lid for _, lid in sorted(unique, key=lambda p: (p[0], p[1]))
    ]
