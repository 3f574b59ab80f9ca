"""First-appearance extraction and stratified letter sampling.

Letters are grouped into buckets by the writer's gender and rank and the
letter's relationship; a seeded greedy draw then pulls letters bucket by
bucket until each bucket's share of the word target is met. Candidate
forms are the words whose corpus-wide first appearance falls inside a
selected letter.
"""

import json
import random
from dataclasses import dataclass, field


class PlanError(ValueError):
    pass


@dataclass(frozen=True)
class BucketKey:
    gender: str
    rank: str
    relationship: str

    def __str__(self):
        return f"{self.gender}|{self.rank}|{self.relationship}"

    @classmethod
    def parse(cls, s):
        parts = s.split("|")
        if len(parts) != 3:
            raise PlanError(f"bad bucket key '{s}'")
        return cls(*parts)


@dataclass
class Bucket:
    key: BucketKey
    letters: list
    word_count: int


@dataclass
class SamplingPlan:
    period: tuple
    seed: int
    target_words_per_bucket: float
    selected: dict  # BucketKey -> list of letter ids
    candidate_forms: dict  # letter id -> list of forms
    achieved: dict = field(default_factory=dict)  # BucketKey -> words

    def letter_ids(self):
        out = []
        for key in sorted(self.selected, key=str):
            out.extend(self.selected[key])
        return out


def first_appearances(corpus):
    """Map letter id -> forms whose first corpus occurrence is that letter.

    Letters are scanned in the stable (year, id) order; a case-folded
    form is attributed to the first letter containing it and nowhere
    else. Flagged tokens never introduce a form.
    """
    seen = set()
    out = {}
    for letter in corpus.letters:
        found = []
        for token in letter.tokens:
            if token.flags:
                continue
            form = token.surface.casefold()
            if form not in seen:
                seen.add(form)
                found.append(form)
        if found:
            out[letter.id] = found
    return out


def bucket_key_for(corpus, letter):
    sender = corpus.persons[letter.sender_id]
    return BucketKey(sender.gender, sender.rank, letter.relationship)


def build_buckets(corpus, period):
    """One bucket per occupied (gender, rank, relationship) triple."""
    start, end = period
    groups = {}
    for letter in corpus.letters:
        if not (start <= letter.year <= end):
            continue
        key = bucket_key_for(corpus, letter)
        groups.setdefault(key, []).append(letter)
    if not groups:
        raise PlanError(f"no letters in period {start}:{end}")
    buckets = [
        Bucket(key=key, letters=letters, word_count=sum(l.word_count for l in letters))
        for key, letters in groups.items()
    ]
    buckets.sort(key=lambda b: str(b.key))
    return buckets


def _bucket_rng(seed, key):
    return random.Random(f"{seed}:{key}")


def draw_sample(buckets, target_total_words, seed, period=None):
    """Greedy stratified draw, deterministic for a fixed seed.

    Each bucket gets an equal share of the word target. Buckets are
    visited largest-deficit-first; a bucket closes when it is exhausted
    or when its next letter would overshoot the share by more than the
    smallest letter still unused in that bucket (letters are indivisible,
    so exact targets are unreachable).
    """
    if target_total_words <= 0:
        raise PlanError("target_total_words must be > 0")
    if not buckets:
        raise PlanError("no buckets to sample from")
    per_bucket = target_total_words / len(buckets)

    queues = {}
    for bucket in buckets:
        order = sorted(bucket.letters, key=lambda l: l.id)
        _bucket_rng(seed, bucket.key).shuffle(order)
        queues[bucket.key] = order

    achieved = {b.key: 0 for b in buckets}
    position = {b.key: 0 for b in buckets}
    open_keys = {b.key for b in buckets}
    selected = {b.key: [] for b in buckets}

    while open_keys:
        key = min(open_keys, key=lambda k: (achieved[k] - per_bucket, str(k)))
        if per_bucket - achieved[key] <= 0:
            open_keys.discard(key)
            continue
        queue = queues[key]
        pos = position[key]
        if pos >= len(queue):
            open_keys.discard(key)
            continue
        remaining = queue[pos:]
        smallest = min(l.word_count for l in remaining)
        nxt = queue[pos]
        overshoot = achieved[key] + nxt.word_count - per_bucket
        if overshoot > smallest:
            open_keys.discard(key)
            continue
        selected[key].append(nxt.id)
        achieved[key] += nxt.word_count
        position[key] = pos + 1

    if period is None:
        years = [l.year for b in buckets for l in b.letters]
        period = (min(years), max(years))
    return SamplingPlan(
        period=tuple(period),
        seed=seed,
        target_words_per_bucket=per_bucket,
        selected={k: v for k, v in selected.items() if v},
        candidate_forms={},
        achieved={k: v for k, v in achieved.items() if selected[k]},
    )


def attach_candidates(plan, first_map):
    """Fill plan.candidate_forms from a first-appearance map."""
    plan.candidate_forms = {
        letter_id: list(first_map[letter_id])
        for letter_id in plan.letter_ids()
        if letter_id in first_map
    }
    return plan


def candidate_pool(plan, first_map):
    """(form, letter_id) pairs for the plan, in letter then token order.

    ``first_map`` preserves the corpus letter order, so the pool sequence
    is independent of how the plan groups letters into buckets. A plan
    may restrict candidate_forms to a subset of the true first
    appearances (e.g. a review queue); listing a form that is not a first
    appearance of its letter is an error.
    """
    pool = []
    selected = set(plan.letter_ids())
    explicit = bool(plan.candidate_forms)
    for letter_id, first_forms in first_map.items():
        if letter_id not in selected:
            continue
        if explicit:
            first = set(first_forms)
            for form in plan.candidate_forms.get(letter_id, ()):
                if form not in first:
                    raise PlanError(
                        f"plan lists '{form}' for {letter_id} but it is not a "
                        f"first appearance there"
                    )
                pool.append((form, letter_id))
        else:
            for form in first_forms:
                pool.append((form, letter_id))
    return pool


def plan_to_json(plan):
    return {
        "period": list(plan.period),
        "seed": plan.seed,
        "target_words_per_bucket": plan.target_words_per_bucket,
        "selected": {str(k): v for k, v in sorted(plan.selected.items(), key=lambda kv: str(kv[0]))},
        "achieved": {str(k): v for k, v in sorted(plan.achieved.items(), key=lambda kv: str(kv[0]))},
        "candidates": [
            {"form": form, "letter_id": letter_id}
            for letter_id in plan.letter_ids()
            for form in plan.candidate_forms.get(letter_id, ())
        ],
    }


def plan_from_json(obj):
    selected = {BucketKey.parse(k): list(v) for k, v in obj["selected"].items()}
    candidate_forms = {}
    for c in obj.get("candidates", ()):
        candidate_forms.setdefault(c["letter_id"], []).append(c["form"])
    return SamplingPlan(
        period=tuple(obj["period"]),
        seed=obj["seed"],
        target_words_per_bucket=obj["target_words_per_bucket"],
        selected=selected,
        candidate_forms=candidate_forms,
        achieved={BucketKey.parse(k): v for k, v in obj.get("achieved", {}).items()},
    )


def save_plan(plan, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(plan_to_json(plan), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_plan(path):
    with open(path, encoding="utf-8") as fh:
        return plan_from_json(json.load(fh))
