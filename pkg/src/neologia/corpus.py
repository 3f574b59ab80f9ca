"""Letter corpus: parsing, validation, tokenization, word counts.

The corpus arrives as JSONL with one person or letter object per line
(see ``parse_corpus``). Letters carry either raw ``text`` (tokenized on
ingest) or a pre-tokenized ``tokens`` array with explicit flags; original
spelling is preserved everywhere, case-folding happens only in the
word-form inventory.
"""

import json
import unicodedata
from dataclasses import dataclass

GENDERS = ("male", "female", "unknown")
RANKS = (
    "royalty",
    "nobility",
    "gentry",
    "clergy",
    "professionals",
    "merchants",
    "other_non_gentry",
    "unknown",
)
RELATIONSHIPS = (
    "nuclear_family",
    "other_family",
    "close_friends",
    "other_acquaintances",
)
TOKEN_FLAGS = ("foreign", "proper_noun", "abbreviation", "editorial")

# flags that exclude a token from the word-form inventory and from
# neologism candidacy (editorial insertions are excluded from candidacy
# only: they are modern editors' words, not the writer's)
EXCLUSION_FLAGS = frozenset(("foreign", "proper_noun", "abbreviation"))


class CorpusError(ValueError):
    """Schema or consistency violation in a corpus file."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class Person:
    id: str
    name: str
    gender: str
    rank: str
    birth_year: int | None = None
    region: str | None = None


@dataclass(frozen=True)
class Token:
    surface: str
    offset: int
    flags: frozenset = frozenset()


@dataclass
class Letter:
    id: str
    collection: str
    sender_id: str
    recipient_id: str
    year: int
    relationship: str
    tokens: list
    text: str | None = None

    @property
    def word_count(self):
        return len(self.tokens)


@dataclass
class Corpus:
    persons: dict
    letters: list
    period: tuple

    def person(self, person_id):
        return self.persons[person_id]

    def letter_index(self):
        return {letter.id: letter for letter in self.letters}


def _is_punct(c):
    cat = unicodedata.category(c)
    return cat.startswith("P") or cat.startswith("S")


def _strip_outer(chunk):
    # internal hyphens/apostrophes survive because only the ends are eaten
    start, end = 0, len(chunk)
    while start < end and _is_punct(chunk[start]):
        start += 1
    while end > start and _is_punct(chunk[end - 1]):
        end -= 1
    return start, end


def tokenize(raw_text):
    """Split raw letter text into Tokens.

    Whitespace-delimited; outer punctuation is stripped but internal
    hyphens and apostrophes survive, so early modern compounds stay one
    token. Superscript markers (``w^th``) collapse into the token.
    Editorial insertions wrapped in square brackets are flagged
    ``editorial``. Offsets point at the first character of the surface
    form within ``raw_text``.
    """
    tokens = []
    i = 0
    n = len(raw_text)
    editorial_depth = 0
    while i < n:
        if raw_text[i].isspace():
            i += 1
            continue
        j = i
        while j < n and not raw_text[j].isspace():
            j += 1
        chunk = raw_text[i:j]
        depth_here = editorial_depth
        opened = chunk.count("[")
        closed = chunk.count("]")
        editorial_depth = max(0, editorial_depth + opened - closed)
        inner = chunk.replace("[", "").replace("]", "").replace("^", "")
        s, e = _strip_outer(inner)
        surface = inner[s:e]
        if not surface:
            surface = inner if inner else chunk
            s = 0
        # offset: first character of the surface within the original text
        probe = surface[0] if surface else chunk[0]
        offset = i
        for k in range(i, j):
            if raw_text[k] == probe:
                offset = k
                break
        flags = set()
        if depth_here > 0 or opened > 0:
            flags.add("editorial")
        tokens.append(Token(surface=surface, offset=offset, flags=frozenset(flags)))
        i = j
    return tokens


def _parse_person(obj, line):
    for key in ("id", "name", "gender", "rank"):
        if key not in obj:
            raise CorpusError(f"person missing field '{key}'", line)
    if obj["gender"] not in GENDERS:
        raise CorpusError(f"unknown gender '{obj['gender']}'", line)
    if obj["rank"] not in RANKS:
        raise CorpusError(f"unknown rank '{obj['rank']}'", line)
    birth = obj.get("birth_year")
    if birth is not None and not isinstance(birth, int):
        raise CorpusError("birth_year must be an integer", line)
    return Person(
        id=obj["id"],
        name=obj["name"],
        gender=obj["gender"],
        rank=obj["rank"],
        birth_year=birth,
        region=obj.get("region"),
    )


def _parse_token_obj(obj, line):
    surface = obj.get("s")
    if not surface or any(ch.isspace() for ch in surface):
        raise CorpusError(f"bad token surface {surface!r}", line)
    flags = obj.get("f", [])
    for f in flags:
        if f not in TOKEN_FLAGS:
            raise CorpusError(f"unknown token flag '{f}'", line)
    return Token(surface=surface, offset=int(obj.get("o", 0)), flags=frozenset(flags))


def _parse_letter(obj, line):
    for key in ("id", "collection", "year", "sender", "recipient", "relationship"):
        if key not in obj:
            raise CorpusError(f"letter missing field '{key}'", line)
    if obj["relationship"] not in RELATIONSHIPS:
        raise CorpusError(
            f"unknown relationship '{obj['relationship']}' in letter '{obj['id']}'", line
        )
    has_text = "text" in obj
    has_tokens = "tokens" in obj
    if has_text == has_tokens:
        raise CorpusError(
            f"letter '{obj['id']}' must carry exactly one of 'text'/'tokens'", line
        )
    if has_text:
        tokens = tokenize(obj["text"])
        text = obj["text"]
    else:
        tokens = [_parse_token_obj(t, line) for t in obj["tokens"]]
        text = None
    return Letter(
        id=obj["id"],
        collection=obj["collection"],
        sender_id=obj["sender"],
        recipient_id=obj["recipient"],
        year=int(obj["year"]),
        relationship=obj["relationship"],
        tokens=tokens,
        text=text,
    )


def parse_corpus(path, period=None):
    """Parse and validate a corpus JSONL file into a Corpus.

    ``period`` is the declared (start_year, end_year); when omitted it is
    derived from the letters. Letters are sorted into the stable
    (year, id) order. Errors report the offending line number.
    """
    persons = {}
    letters = []
    seen_letters = set()
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"malformed JSON ({exc.msg})", line_no) from exc
            kind = obj.get("type")
            if kind == "person":
                person = _parse_person(obj, line_no)
                if person.id in persons:
                    raise CorpusError(f"duplicate person id '{person.id}'", line_no)
                persons[person.id] = person
            elif kind == "letter":
                letter = _parse_letter(obj, line_no)
                if letter.id in seen_letters:
                    raise CorpusError(f"duplicate letter id '{letter.id}'", line_no)
                seen_letters.add(letter.id)
                letters.append((letter, line_no))
            else:
                raise CorpusError(f"unknown record type {kind!r}", line_no)

    for letter, line_no in letters:
        for ref in (letter.sender_id, letter.recipient_id):
            if ref not in persons:
                raise CorpusError(
                    f"letter '{letter.id}' references unknown person '{ref}'", line_no
                )
        if period is not None and not (period[0] <= letter.year <= period[1]):
            raise CorpusError(
                f"letter '{letter.id}' year {letter.year} outside declared period "
                f"{period[0]}:{period[1]}",
                line_no,
            )
        for pid in (letter.sender_id, letter.recipient_id):
            birth = persons[pid].birth_year
            if birth is not None and birth >= letter.year:
                raise CorpusError(
                    f"person '{pid}' birth year {birth} does not precede "
                    f"letter '{letter.id}' year {letter.year}",
                    line_no,
                )

    ordered = sorted((l for l, _ in letters), key=lambda l: (l.year, l.id))
    if period is None:
        if ordered:
            period = (ordered[0].year, max(l.year for l in ordered))
        else:
            period = (0, 0)
    return Corpus(persons=persons, letters=ordered, period=tuple(period))


def serialize_corpus(corpus, path):
    """Write a Corpus back to JSONL (tokens form, parse round-trip safe)."""
    with open(path, "w", encoding="utf-8") as fh:
        for person in sorted(corpus.persons.values(), key=lambda p: p.id):
            obj = {
                "type": "person",
                "id": person.id,
                "name": person.name,
                "gender": person.gender,
                "rank": person.rank,
            }
            if person.birth_year is not None:
                obj["birth_year"] = person.birth_year
            if person.region is not None:
                obj["region"] = person.region
            fh.write(json.dumps(obj, ensure_ascii=False) + "\n")
        for letter in corpus.letters:
            obj = {
                "type": "letter",
                "id": letter.id,
                "collection": letter.collection,
                "year": letter.year,
                "sender": letter.sender_id,
                "recipient": letter.recipient_id,
                "relationship": letter.relationship,
                "tokens": [
                    {"s": t.surface, "o": t.offset, "f": sorted(t.flags)}
                    for t in letter.tokens
                ],
            }
            fh.write(json.dumps(obj, ensure_ascii=False) + "\n")


def distinct_word_forms(corpus, include_flagged=True):
    """Case-folded inventory of distinct surface forms.

    With ``include_flagged=False``, tokens tagged foreign, proper_noun or
    abbreviation are left out (editorial insertions stay: they are
    ordinary words, just not the writer's).
    """
    forms = set()
    for letter in corpus.letters:
        for token in letter.tokens:
            if not include_flagged and token.flags & EXCLUSION_FLAGS:
                continue
            forms.add(token.surface.casefold())
    return forms


def running_words(corpus, letter_filter=None):
    """Total token count (flagged tokens included) over matching letters."""
    total = 0
    for letter in corpus.letters:
        if letter_filter is None or letter_filter(letter):
            total += letter.word_count
    return total
