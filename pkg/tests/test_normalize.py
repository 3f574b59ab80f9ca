import json
import random

import pytest

from neologia.editdist import EditWeights
from neologia.lexicon import Lexicon, load_lexicon, lookup_variant
from neologia.normalize import (
    Normalizer,
    RewriteRule,
    RuleError,
    default_rules,
    evaluate_normalizer,
    load_rules,
    normalize,
)
from tests.test_editdist import ref_distance


def test_rule_final_e_drop():
    rule = RewriteRule("e", "", "final", 0.5)
    assert rule.apply("olde") == ["old"]
    assert rule.apply("old") == []


def test_rule_final_e_add():
    rule = RewriteRule("$", "e", "final", 0.5)
    assert rule.apply("old") == ["olde"]


def test_rule_anywhere_single_occurrence_branches():
    rule = RewriteRule("i", "j", "anywhere", 0.3)
    assert sorted(rule.apply("iusti")) == ["justi", "iustj"][::-1] or sorted(
        rule.apply("iusti")
    ) == sorted(["justi", "iustj"])


def test_rule_validation():
    with pytest.raises(RuleError):
        RewriteRule("", "x")
    with pytest.raises(RuleError):
        RewriteRule("a", "b", "nowhere")
    with pytest.raises(RuleError):
        RewriteRule("$", "e", "anywhere")


def test_load_rules(tmp_path):
    path = tmp_path / "rules.jsonl"
    path.write_text(
        json.dumps({"pattern": "th", "replacement": "þ", "cost": 0.2}) + "\n",
        encoding="utf-8",
    )
    rules = load_rules(str(path))
    assert rules[0].pattern == "th" and rules[0].cost == 0.2


def _lexicon_of(*specs):
    """specs: (lemma, pos, variants)"""
    from neologia.lexicon import Etymology, LexiconEntry, Sense

    entries = []
    for lemma, pos, variants in specs:
        entries.append(
            LexiconEntry(
                lemma=lemma,
                pos=pos,
                variants=frozenset({lemma.casefold()} | set(variants)),
                senses=(Sense("s1", "", 1650, ("the world",)),),
                etymology=Etymology("derivation"),
            )
        )
    return Lexicon(entries=entries)


def test_rule_closure_reaches_justice():
    lex = _lexicon_of(("justice", "noun", ()))
    cands = normalize(lex, default_rules(), "iustice", k=5, max_cost=2.5)
    assert cands and cands[0].entry.lemma == "justice"
    assert cands[0].method in ("rule", "edit")


def test_rule_chain_uppon():
    lex = _lexicon_of(("upon", "other", ()))
    normalizer = Normalizer(lex)
    cands = normalizer.normalize("vppon")
    assert cands and cands[0].entry.lemma == "upon"
    assert cands[0].method == "rule"


def test_exact_short_circuits(lexicon):
    cands = normalize(lexicon, default_rules(), "tee", k=5, max_cost=2.5)
    assert cands[0].entry.lemma == "tea"
    assert cands[0].method == "exact"
    assert cands[0].score == 1.0
    assert len(cands) == 1


def test_paper_misspellings_rank_one(lexicon):
    normalizer = Normalizer(lexicon)
    gold = {
        "Malignencye": "malignancy",
        "condisention": "condescension",
        "tee": "tea",
        "hooka": "hookah",
        "fondlen": "foundling-house",
    }
    for form, lemma in gold.items():
        cands = normalizer.normalize(form)
        assert cands, form
        assert cands[0].entry.lemma == lemma, (form, cands[0].entry.lemma)


def test_malignencye_is_edit_method(lexicon):
    cands = Normalizer(lexicon).normalize("Malignencye")
    assert cands[0].method == "edit"


def test_no_neighbours_empty(lexicon):
    assert Normalizer(lexicon).normalize("xqzw", max_cost=2.0) == []


def test_candidates_deduplicated_per_entry(lexicon):
    for cands in (Normalizer(lexicon).normalize("candyde"),):
        keys = [c.entry.key for c in cands]
        assert len(keys) == len(set(keys))


def test_determinism(lexicon):
    normalizer = Normalizer(lexicon)
    forms = ["Malignencye", "complyaunce", "tee", "oversweetnes", "dragoner"]
    first = [[(c.entry.key, c.score, c.method) for c in normalizer.normalize(f)] for f in forms]
    second = [[(c.entry.key, c.score, c.method) for c in normalizer.normalize(f)] for f in forms]
    assert first == second


def test_post_filter_random_forms(lexicon):
    rng = random.Random(11)
    normalizer = Normalizer(lexicon)
    for _ in range(500):
        form = "".join(rng.choice("abcdefghijklmnopqrstuvwy") for _ in range(rng.randint(2, 9)))
        for cand in normalizer.normalize(form):
            assert lookup_variant(lexicon, cand.entry.lemma), cand.entry.lemma


def test_exact_dominance(lexicon):
    for entry in lexicon.entries[:20]:
        for variant in sorted(entry.variants)[:2]:
            cands = Normalizer(lexicon).normalize(variant)
            assert cands[0].score == 1.0
            assert cands[0].method == "exact"
            assert variant in cands[0].entry.variants


def test_idempotence_on_lemmas(lexicon):
    normalizer = Normalizer(lexicon)
    for entry in lexicon.entries:
        cands = normalizer.normalize(entry.lemma)
        assert cands and entry in {c.entry for c in cands[:2]}
        top = [c for c in cands if c.score == 1.0]
        assert any(c.entry.key == entry.key for c in top)


def test_stage3_equals_brute_force(lexicon):
    """With no rules, non-variant queries are pure edit-stage output."""
    normalizer = Normalizer(lexicon, rules=[])
    weights = EditWeights()
    rng = random.Random(5)
    variants = sorted(lexicon.variant_index)
    queries = ["malignencye", "condisention", "ricketes", "dragonner", "zzzz"]
    queries += [
        "".join(rng.choice("abcdeilmnorstuy") for _ in range(rng.randint(3, 10)))
        for _ in range(60)
    ]
    for query in queries:
        if lookup_variant(lexicon, query):
            continue
        best = {}
        for variant in variants:
            dist = ref_distance(query, variant, weights)
            if dist <= 2.5:
                for entry in lexicon.variant_index[variant]:
                    score = 1.0 / (1.0 + dist)
                    if score > best.get(entry.key, 0.0):
                        best[entry.key] = score
        expected = sorted(
            best.items(), key=lambda kv: (-kv[1], kv[0][0], kv[0][1])
        )[:5]
        got = [
            (c.entry.key, c.score) for c in normalizer.normalize(query, k=5, max_cost=2.5)
        ]
        assert got == [(k, pytest.approx(s)) for k, s in expected], query


def test_evaluate_all_exact(lexicon):
    gold = [("tee", "tea", "noun"), ("hooka", "hookah", "noun")]
    metrics = evaluate_normalizer(gold, lexicon)
    assert metrics.matched_fraction == 1.0
    assert metrics.lemma_accuracy == 1.0
    assert metrics.pos_accuracy == 1.0


def test_evaluate_arithmetic():
    lex = _lexicon_of(
        ("alpha", "noun", ("alfa",)),
        ("beta", "noun", ("beta",)),
        ("gamma", "noun", ()),
        ("delta", "noun", ()),
    )
    gold = [
        ("alfa", "alpha", "noun"),
        ("beta", "beta", "noun"),
        ("gamma", "gamma", "noun"),
        ("delta", "gamma", "noun"),  # rank-1 will be delta, counted wrong
    ]
    metrics = evaluate_normalizer(gold, lex)
    assert metrics.lemma_accuracy == 0.75


def test_evaluate_fixture_misspellings(lexicon):
    gold = [
        ("Malignencye", "malignancy", "noun"),
        ("condisention", "condescension", "noun"),
        ("tee", "tea", "noun"),
        ("hooka", "hookah", "noun"),
        ("fondlen", "foundling-house", "noun"),
    ]
    metrics = evaluate_normalizer(gold, lexicon)
    assert metrics.matched_fraction == 1.0
    assert metrics.lemma_accuracy == 1.0
    assert metrics.pos_accuracy == 1.0


def test_evaluate_rejects_empty(lexicon):
    with pytest.raises(ValueError):
        evaluate_normalizer([], lexicon)
