"""Decision-log replay and the attestation-window neologism rule.

A candidate becomes a NeologismRecord when a human accepted (or edited)
its lexicon mapping and the letter year is at most ``window_years`` after
the mapped sense's earliest attestation. Corpus occurrences earlier than
the attestation are antedatings and always qualify.
"""

import json
import os
from dataclasses import dataclass

from .lexicon import earliest_attestation

DECISION_STATUSES = ("pending", "accepted", "edited", "rejected", "no_entry")

DEFAULT_WINDOW_YEARS = 40


class DecisionError(ValueError):
    pass


@dataclass(frozen=True)
class MappingDecision:
    candidate_key: tuple  # (form, letter_id)
    status: str
    entry: tuple | None = None  # (lemma, pos)
    sense_id: str | None = None
    reviewer: str = ""
    timestamp: str = ""

    def __post_init__(self):
        if self.status not in DECISION_STATUSES:
            raise DecisionError(f"unknown decision status '{self.status}'")
        if self.status in ("accepted", "edited") and not self.entry:
            raise DecisionError(f"{self.status} decision requires an entry")
        if self.status == "no_entry" and self.entry:
            raise DecisionError("no_entry decision must not carry an entry")


def decision_to_json(decision):
    obj = {
        "candidate_key": {
            "form": decision.candidate_key[0],
            "letter_id": decision.candidate_key[1],
        },
        "status": decision.status,
        "reviewer": decision.reviewer,
        "timestamp": decision.timestamp,
    }
    if decision.entry:
        obj["entry"] = {"lemma": decision.entry[0], "pos": decision.entry[1]}
    if decision.sense_id:
        obj["sense_id"] = decision.sense_id
    return obj


def decision_from_json(obj):
    key = obj["candidate_key"]
    entry = obj.get("entry")
    return MappingDecision(
        candidate_key=(key["form"], key["letter_id"]),
        status=obj["status"],
        entry=(entry["lemma"], entry["pos"]) if entry else None,
        sense_id=obj.get("sense_id"),
        reviewer=obj.get("reviewer", ""),
        timestamp=obj.get("timestamp", ""),
    )


def read_decision_log(path):
    """Replay an append-only JSONL decision log, in append order."""
    decisions = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DecisionError(
                    f"corrupt decision log at line {line_no}: {exc.msg}"
                ) from exc
            try:
                decisions.append(decision_from_json(obj))
            except (KeyError, DecisionError) as exc:
                raise DecisionError(
                    f"corrupt decision log at line {line_no}: {exc}"
                ) from exc
    return decisions


def append_decision(path, decision):
    """Durably append one decision (fsync per append; the log is the truth)."""
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(decision_to_json(decision), ensure_ascii=False) + "\n")
        fh.flush()
        os.fsync(fh.fileno())


def apply_decisions(pool, log):
    """Effective decision per candidate key: last writer wins.

    Keys never decided default to a pending decision. Decisions whose key
    is not in the pool are skipped and returned separately.
    """
    pool_keys = set(pool)
    effective = {
        key: MappingDecision(candidate_key=key, status="pending") for key in pool
    }
    skipped = []
    for decision in log:
        if decision.candidate_key not in pool_keys:
            skipped.append(decision)
            continue
        effective[decision.candidate_key] = decision
    return effective, skipped


@dataclass(frozen=True)
class NeologismRecord:
    lemma: str
    pos: str
    sense_id: str
    form: str
    letter_id: str
    corpus_year: int
    attestation_year: int
    delta_years: int
    antedating: bool
    ht_path: tuple
    etymology: object
    writer: object
    relationship: str

    @property
    def type_key(self):
        return (self.lemma, self.pos)


def classify(decision, letter, corpus, lexicon, window_years=DEFAULT_WINDOW_YEARS):
    """Apply the attestation window to one effective decision.

    Returns a NeologismRecord, or None when the decision is not an
    accept/edit or the letter falls more than ``window_years`` after the
    attestation ("at most forty years before its appearance": the
    boundary is inclusive; antedatings have a negative delta and always
    pass).
    """
    if decision.status not in ("accepted", "edited"):
        return None
    lemma, pos = decision.entry
    entry = lexicon.entry(lemma, pos)
    if entry is None:
        raise DecisionError(
            f"decision for {decision.candidate_key} maps to unknown entry "
            f"{lemma}/{pos}"
        )
    if decision.sense_id is not None:
        try:
            sense = entry.sense(decision.sense_id)
        except KeyError as exc:
            raise DecisionError(str(exc)) from exc
    else:
        sense = min(entry.senses, key=lambda s: (s.first_attestation_year, s.sense_id))
    attestation = sense.first_attestation_year
    delta = letter.year - attestation
    if delta > window_years:
        return None
    writer = corpus.persons[letter.sender_id]
    return NeologismRecord(
        lemma=lemma,
        pos=pos,
        sense_id=sense.sense_id,
        form=decision.candidate_key[0],
        letter_id=letter.id,
        corpus_year=letter.year,
        attestation_year=attestation,
        delta_years=delta,
        antedating=attestation > letter.year,
        ht_path=tuple(sense.ht_path),
        etymology=entry.etymology,
        writer=writer,
        relationship=letter.relationship,
    )


def classify_all(pool, log, corpus, lexicon, window_years=DEFAULT_WINDOW_YEARS):
    """Records for every accepted candidate that passes the window.

    Pool order is preserved, so replaying the same log always yields the
    identical record list.
    """
    effective, _ = apply_decisions(pool, log)
    letters = corpus.letter_index()
    records = []
    for key in pool:
        decision = effective[key]
        if decision.status not in ("accepted", "edited"):
            continue
        letter = letters.get(key[1])
        if letter is None:
            raise DecisionError(f"candidate {key} references unknown letter")
        record = classify(decision, letter, corpus, lexicon, window_years)
        if record is not None:
            records.append(record)
    return records


def no_entry_candidates(pool, log):
    """Candidates a reviewer marked as absent from the dictionary."""
    effective, _ = apply_decisions(pool, log)
    return [key for key in pool if effective[key].status == "no_entry"]


def type_count(records):
    return len({r.type_key for r in records})


def record_to_json(record):
    writer = record.writer
    return {
        "lemma": record.lemma,
        "pos": record.pos,
        "sense_id": record.sense_id,
        "form": record.form,
        "letter_id": record.letter_id,
        "corpus_year": record.corpus_year,
        "attestation_year": record.attestation_year,
        "delta_years": record.delta_years,
        "antedating": record.antedating,
        "ht_path": list(record.ht_path),
        "etymology": {
            "kind": record.etymology.kind,
            **(
                {"source_language": record.etymology.source_language}
                if record.etymology.source_language
                else {}
            ),
        },
        "writer": {
            "id": writer.id,
            "name": writer.name,
            "gender": writer.gender,
            "rank": writer.rank,
            **({"birth_year": writer.birth_year} if writer.birth_year else {}),
        },
        "relationship": record.relationship,
    }


def write_records(records, path):
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record_to_json(record), ensure_ascii=False) + "\n")


def read_records(path):
    """Load records written by write_records (for the analytics CLI)."""
    from .corpus import Person
    from .lexicon import Etymology

    records = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            obj = json.loads(line)
            w = obj["writer"]
            records.append(
                NeologismRecord(
                    lemma=obj["lemma"],
                    pos=obj["pos"],
                    sense_id=obj["sense_id"],
                    form=obj["form"],
                    letter_id=obj["letter_id"],
                    corpus_year=obj["corpus_year"],
                    attestation_year=obj["attestation_year"],
                    delta_years=obj["delta_years"],
                    antedating=obj["antedating"],
                    ht_path=tuple(obj["ht_path"]),
                    etymology=Etymology(
                        kind=obj["etymology"]["kind"],
                        source_language=obj["etymology"].get("source_language"),
                    ),
                    writer=Person(
                        id=w["id"],
                        name=w["name"],
                        gender=w["gender"],
                        rank=w["rank"],
                        birth_year=w.get("birth_year"),
                    ),
                    relationship=obj["relationship"],
                )
            )
    return records
