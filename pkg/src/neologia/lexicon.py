"""Dated dictionary: lemmas, spelling variants, senses, etymology.

Entries are indexed by every attested spelling variant (case-folded,
diacritics preserved), so a historical form can be looked up directly.
Each sense carries its earliest attestation year and a root-first path
through the semantic hierarchy.
"""

import json
from dataclasses import dataclass, field

POS_TAGS = ("noun", "adjective", "verb", "adverb", "other")
ETYMOLOGY_KINDS = ("borrowing", "derivation", "compounding", "conversion", "unknown")
HT_ROOTS = ("the world", "the mind", "society")


class LexiconError(ValueError):
    """Schema or consistency violation in a lexicon file."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class Etymology:
    kind: str
    source_language: str | None = None


@dataclass(frozen=True)
class Sense:
    sense_id: str
    gloss: str
    first_attestation_year: int
    ht_path: tuple


@dataclass(frozen=True)
class LexiconEntry:
    lemma: str
    pos: str
    variants: frozenset
    senses: tuple
    etymology: Etymology

    @property
    def key(self):
        return (self.lemma, self.pos)

    def sense(self, sense_id):
        for s in self.senses:
            if s.sense_id == sense_id:
                return s
        raise KeyError(f"unknown sense '{sense_id}' in {self.lemma}/{self.pos}")


@dataclass
class Lexicon:
    entries: list
    variant_index: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.variant_index:
            for entry in self.entries:
                for variant in entry.variants:
                    self.variant_index.setdefault(variant, set()).add(entry)

    def entry(self, lemma, pos):
        for e in self.entries:
            if e.lemma == lemma and e.pos == pos:
                return e
        return None


def _parse_entry(obj, line):
    for key in ("lemma", "pos", "variants", "senses", "etymology"):
        if key not in obj:
            raise LexiconError(f"entry missing field '{key}'", line)
    if obj["pos"] not in POS_TAGS:
        raise LexiconError(f"unknown pos '{obj['pos']}'", line)
    ety_obj = obj["etymology"]
    kind = ety_obj.get("kind")
    if kind not in ETYMOLOGY_KINDS:
        raise LexiconError(f"unknown etymology kind {kind!r}", line)
    source = ety_obj.get("source_language")
    if kind == "borrowing" and not source:
        raise LexiconError(
            f"borrowing without source_language in entry '{obj['lemma']}'", line
        )
    if kind != "borrowing" and source:
        raise LexiconError(
            f"source_language only allowed for borrowings ('{obj['lemma']}')", line
        )
    if not obj["senses"]:
        raise LexiconError(f"entry '{obj['lemma']}' has empty senses", line)
    senses = []
    for s in obj["senses"]:
        path = tuple(s.get("ht_path", ()))
        if not path:
            raise LexiconError(f"sense missing ht_path in '{obj['lemma']}'", line)
        if path[0] not in HT_ROOTS:
            raise LexiconError(
                f"ht_path root '{path[0]}' not one of {HT_ROOTS} in '{obj['lemma']}'", line
            )
        senses.append(
            Sense(
                sense_id=s["sense_id"],
                gloss=s.get("gloss", ""),
                first_attestation_year=int(s["first_attestation_year"]),
                ht_path=path,
            )
        )
    if not obj["variants"]:
        raise LexiconError(f"entry '{obj['lemma']}' has empty variants", line)
    variants = {v.casefold() for v in obj["variants"]}
    # an entry is always findable by its own lemma
    variants.add(obj["lemma"].casefold())
    return LexiconEntry(
        lemma=obj["lemma"],
        pos=obj["pos"],
        variants=frozenset(variants),
        senses=tuple(senses),
        etymology=Etymology(kind=kind, source_language=source),
    )


def load_lexicon(path):
    """Load and validate a JSONL lexicon; duplicate (lemma, pos) rejected."""
    entries = []
    seen = set()
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise LexiconError(f"malformed JSON ({exc.msg})", line_no) from exc
            entry = _parse_entry(obj, line_no)
            if entry.key in seen:
                raise LexiconError(
                    f"duplicate entry {entry.lemma}/{entry.pos}", line_no
                )
            seen.add(entry.key)
            entries.append(entry)
    return Lexicon(entries=entries)


def serialize_lexicon(lexicon, path):
    with open(path, "w", encoding="utf-8") as fh:
        for e in lexicon.entries:
            obj = {
                "lemma": e.lemma,
                "pos": e.pos,
                "variants": sorted(e.variants),
                "etymology": {"kind": e.etymology.kind},
                "senses": [
                    {
                        "sense_id": s.sense_id,
                        "gloss": s.gloss,
                        "first_attestation_year": s.first_attestation_year,
                        "ht_path": list(s.ht_path),
                    }
                    for s in e.senses
                ],
            }
            if e.etymology.source_language:
                obj["etymology"]["source_language"] = e.etymology.source_language
            fh.write(json.dumps(obj, ensure_ascii=False) + "\n")


def lookup_variant(lexicon, form):
    """All entries whose variant set contains the (case-folded) form."""
    return set(lexicon.variant_index.get(form.casefold(), ()))


def earliest_attestation(entry, sense_id=None):
    """Attestation year of the given sense, or the entry minimum."""
    if sense_id is not None:
        return entry.sense(sense_id).first_attestation_year
    return min(s.first_attestation_year for s in entry.senses)


def ht_rollup(sense, level):
    """The first ``level`` labels of the sense's hierarchy path, joined."""
    if level < 1:
        raise ValueError("level must be >= 1")
    return " » ".join(sense.ht_path[:level])
