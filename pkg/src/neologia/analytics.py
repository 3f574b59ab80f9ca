"""Frequency tables and type breakdowns over classified records.

Normalized frequencies are tokens per 10,000 running words of the sample,
per social axis; writers whose attribute is unknown drop out of both the
numerator and the denominator. Breakdowns count distinct (lemma, pos)
types, not tokens.
"""

import json
import math
from dataclasses import dataclass

from .corpus import GENDERS, RANKS, RELATIONSHIPS, running_words

AXES = ("gender", "rank", "relationship", "age_group")

BREAKDOWN_DIMENSIONS = (
    "pos",
    "etymology_kind",
    "source_language",
    "ht_level_1",
    "ht_level_2",
)

DISPLAY_LABELS = {
    "male": "Male",
    "female": "Female",
    "royalty": "Royalty",
    "nobility": "Nobility",
    "gentry": "Gentry",
    "clergy": "Clergy",
    "professionals": "Professionals",
    "merchants": "Merchants",
    "other_non_gentry": "Other non-gentry",
    "nuclear_family": "Nuclear family",
    "other_family": "Other family",
    "close_friends": "Close friends",
    "other_acquaintances": "Other acquaintances",
}


@dataclass(frozen=True)
class FrequencyRow:
    value: str
    tokens: int
    words: int
    per_10k: float | None  # None when words == 0 (rendered as a dash)


@dataclass(frozen=True)
class FrequencyReport:
    axis: str
    rows: tuple
    age_split: int | None = None


@dataclass(frozen=True)
class Breakdown:
    dimension: str
    counts: dict


def _axis_values(axis, age_split):
    if axis == "gender":
        return [g for g in GENDERS if g != "unknown"]
    if axis == "rank":
        return [r for r in RANKS if r != "unknown"]
    if axis == "relationship":
        return list(RELATIONSHIPS)
    if axis == "age_group":
        return [f"under {age_split}", f"{age_split} and over"]
    raise ValueError(f"unknown axis '{axis}'")


def _age_group(age, age_split):
    return f"under {age_split}" if age < age_split else f"{age_split} and over"


def _letter_value(corpus, letter, axis, age_split):
    """Axis value of one letter, or None when the writer's attribute is unknown."""
    sender = corpus.persons[letter.sender_id]
    if axis == "gender":
        return sender.gender if sender.gender != "unknown" else None
    if axis == "rank":
        return sender.rank if sender.rank != "unknown" else None
    if axis == "relationship":
        return letter.relationship
    if axis == "age_group":
        if sender.birth_year is None:
            return None
        return _age_group(letter.year - sender.birth_year, age_split)
    raise ValueError(f"unknown axis '{axis}'")


def frequency_report(records, corpus, axis, age_split=None, letter_ids=None):
    """Tokens per 10,000 sample words for every value of one social axis.

    ``letter_ids`` restricts the word denominator to the sampled letters;
    by default the whole corpus is the sample. Rows are ordered by
    unrounded frequency, highest first, with empty denominators last.
    """
    if axis not in AXES:
        raise ValueError(f"unknown axis '{axis}'")
    if axis == "age_group" and age_split is None:
        raise ValueError("age_group axis requires age_split")

    values = _axis_values(axis, age_split)
    letters = corpus.letters
    if letter_ids is not None:
        wanted = set(letter_ids)
        letters = [l for l in corpus.letters if l.id in wanted]

    words = {v: 0 for v in values}
    for letter in letters:
        value = _letter_value(corpus, letter, axis, age_split)
        if value is not None:
            words[value] += letter.word_count

    letter_by_id = {l.id: l for l in letters}
    tokens = {v: 0 for v in values}
    for record in records:
        letter = letter_by_id.get(record.letter_id)
        if letter is None:
            continue
        value = _letter_value(corpus, letter, axis, age_split)
        if value is not None:
            tokens[value] += 1

    rows = []
    for value in values:
        w = words[value]
        t = tokens[value]
        rows.append(
            FrequencyRow(
                value=value,
                tokens=t,
                words=w,
                per_10k=(t / w * 10000) if w > 0 else None,
            )
        )
    order = {v: i for i, v in enumerate(values)}
    rows.sort(
        key=lambda r: (
            r.per_10k is None,
            -(r.per_10k if r.per_10k is not None else 0.0),
            order[r.value],
        )
    )
    return FrequencyReport(axis=axis, rows=tuple(rows), age_split=age_split)


def render_per_10k(per_10k):
    """Integer display like the published tables; dash for no data."""
    if per_10k is None:
        return "–"
    return str(int(math.floor(per_10k + 0.5)))


def report_to_tsv(report):
    lines = ["value\ttokens\twords\tper_10k"]
    for row in report.rows:
        label = DISPLAY_LABELS.get(row.value, row.value)
        lines.append(f"{label}\t{row.tokens}\t{row.words}\t{render_per_10k(row.per_10k)}")
    return "\n".join(lines) + "\n"


def report_to_json(report):
    return {
        "axis": report.axis,
        **({"age_split": report.age_split} if report.age_split is not None else {}),
        "rows": [
            {
                "value": row.value,
                "tokens": row.tokens,
                "words": row.words,
                "per_10k": round(row.per_10k, 1) if row.per_10k is not None else None,
            }
            for row in report.rows
        ],
    }


def _century(year):
    return (year - 1) // 100 + 1


def _type_representatives(records, century_scope=None):
    reps = {}
    for record in records:
        if century_scope is not None and _century(record.corpus_year) != century_scope:
            continue
        reps.setdefault(record.type_key, record)
    return reps


def breakdown(records, dimension, century_scope=None):
    """Distinct-type counts along one dimension (POS, etymology, HT level)."""
    if dimension not in BREAKDOWN_DIMENSIONS:
        raise ValueError(f"unknown breakdown dimension '{dimension}'")
    counts = {}
    for record in _type_representatives(records, century_scope).values():
        if dimension == "pos":
            label = record.pos
        elif dimension == "etymology_kind":
            label = record.etymology.kind
        elif dimension == "source_language":
            if record.etymology.kind != "borrowing":
                continue
            label = record.etymology.source_language
        elif dimension == "ht_level_1":
            label = record.ht_path[0]
        else:
            label = " » ".join(record.ht_path[:2])
        counts[label] = counts.get(label, 0) + 1
    return Breakdown(dimension=dimension, counts=counts)


def antedatings(records):
    """Records occurring before their dictionary attestation, most extreme first."""
    return sorted(
        (r for r in records if r.antedating),
        key=lambda r: (r.delta_years, r.lemma, r.pos),
    )


def breakdown_to_json(bd):
    return {
        "dimension": bd.dimension,
        "counts": {k: bd.counts[k] for k in sorted(bd.counts)},
    }


def write_report_files(report, base_path):
    """Write <base>.tsv and <base>.json for one frequency report."""
    with open(f"{base_path}.tsv", "w", encoding="utf-8") as fh:
        fh.write(report_to_tsv(report))
    with open(f"{base_path}.json", "w", encoding="utf-8") as fh:
        json.dump(report_to_json(report), fh, indent=2, sort_keys=True)
        fh.write("\n")
