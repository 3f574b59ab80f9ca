"""Spelling normalization: historical form -> ranked lexicon candidates.

Three stages, always post-filtered against the lexicon (a suggestion can
only ever be an existing entry):

1. exact: the form is itself a listed variant; short-circuits at score 1.0.
2. rules: orthographic rewrites (u/v, i/j, final -e, doubled consonants,
   ...) applied position-wise up to a closure depth; a rewritten form that
   hits the variant index scores 1 / (1 + total rule cost).
3. edit: weighted edit distance against every variant within a cost
   budget; scores 1 / (1 + distance).

Results are deduplicated per entry (best route wins) and ranked by
(score desc, lemma asc, pos asc), so identical inputs always produce
identical lists.

Rule patterns are literal strings. The single anchor pattern ``"$"``
denotes the empty match at the context edge and is used for pure
insertions (e.g. final -e add); it requires an initial/final context.
"""

import heapq
import json
from dataclasses import dataclass

from . import editdist
from .lexicon import lookup_variant

RULE_CONTEXTS = ("anywhere", "initial", "final")

DOUBLED_CONSONANTS = "bcdfgklmnprstz"


class RuleError(ValueError):
    pass


@dataclass(frozen=True)
class RewriteRule:
    pattern: str
    replacement: str
    context: str = "anywhere"
    cost: float = 0.5

    def __post_init__(self):
        if not self.pattern:
            raise RuleError("rule pattern must be non-empty")
        if self.context not in RULE_CONTEXTS:
            raise RuleError(f"unknown rule context '{self.context}'")
        if self.cost < 0:
            raise RuleError("rule cost must be >= 0")
        if self.pattern == "$" and self.context == "anywhere":
            raise RuleError("insertion anchor '$' needs an initial/final context")

    def apply(self, form):
        """All single applications of this rule to ``form``."""
        if self.pattern == "$":
            if self.context == "final":
                return [form + self.replacement]
            return [self.replacement + form]
        if self.context == "initial":
            if form.startswith(self.pattern):
                return [self.replacement + form[len(self.pattern):]]
            return []
        if self.context == "final":
            if form.endswith(self.pattern):
                return [form[: len(form) - len(self.pattern)] + self.replacement]
            return []
        out = []
        start = form.find(self.pattern)
        while start != -1:
            out.append(form[:start] + self.replacement + form[start + len(self.pattern):])
            start = form.find(self.pattern, start + 1)
        return out


def default_rules():
    """Built-in Early/Late Modern English rewrite rules."""
    rules = [
        RewriteRule("u", "v", "anywhere", 0.3),
        RewriteRule("v", "u", "anywhere", 0.3),
        RewriteRule("i", "j", "anywhere", 0.3),
        RewriteRule("j", "i", "anywhere", 0.3),
        RewriteRule("vv", "w", "anywhere", 0.4),
        RewriteRule("y", "ie", "anywhere", 0.4),
        RewriteRule("ie", "y", "anywhere", 0.4),
        RewriteRule("e", "", "final", 0.5),
        RewriteRule("$", "e", "final", 0.5),
        RewriteRule("ck", "k", "final", 0.4),
        RewriteRule("k", "ck", "final", 0.4),
        RewriteRule("ll", "l", "final", 0.4),
        RewriteRule("l", "ll", "final", 0.4),
        RewriteRule("oa", "o", "anywhere", 0.5),
        RewriteRule("o", "oa", "anywhere", 0.5),
        RewriteRule("ea", "ee", "anywhere", 0.5),
        RewriteRule("ee", "ea", "anywhere", 0.5),
    ]
    for c in DOUBLED_CONSONANTS:
        rules.append(RewriteRule(c + c, c, "anywhere", 0.4))
        rules.append(RewriteRule(c, c + c, "anywhere", 0.5))
    return rules


def load_rules(path):
    """Read a JSONL rules file (pattern/replacement/context/cost per line)."""
    rules = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise RuleError(f"line {line_no}: malformed JSON ({exc.msg})") from exc
            rules.append(
                RewriteRule(
                    pattern=obj["pattern"],
                    replacement=obj.get("replacement", ""),
                    context=obj.get("context", "anywhere"),
                    cost=float(obj.get("cost", 0.5)),
                )
            )
    return rules


@dataclass(frozen=True)
class NormalizationCandidate:
    surface: str
    entry: object
    score: float
    method: str  # exact | rule | edit


_METHOD_RANK = {"exact": 0, "rule": 1, "edit": 2}


def _entry_sort_key(entry):
    return (entry.lemma, entry.pos)


class Normalizer:
    """Reusable normalizer over an immutable lexicon + rule set."""

    def __init__(
        self,
        lexicon,
        rules=None,
        weights=None,
        k=5,
        max_cost=2.5,
        max_depth=3,
        closure_cap=4000,
    ):
        self.lexicon = lexicon
        self.rules = list(rules) if rules is not None else default_rules()
        self.weights = weights or editdist.EditWeights()
        self.k = k
        self.max_cost = max_cost
        self.max_depth = max_depth
        self.closure_cap = closure_cap
        self._variants = sorted(lexicon.variant_index)
        self._entries_for = {
            v: sorted(lexicon.variant_index[v], key=_entry_sort_key)
            for v in self._variants
        }

    def _rule_closure(self, form):
        """Cheapest rule-rewrite cost per reachable form, depth-bounded."""
        best = {form: 0.0}
        heap = [(0.0, form, 0)]
        popped = 0
        hits = {}
        while heap and popped < self.closure_cap:
            cost, current, depth = heapq.heappop(heap)
            if cost > best.get(current, editdist.INF):
                continue
            popped += 1
            if current != form and current in self._entries_for:
                prev = hits.get(current)
                if prev is None or cost < prev:
                    hits[current] = cost
            if depth >= self.max_depth:
                continue
            for rule in self.rules:
                for rewritten in rule.apply(current):
                    new_cost = cost + rule.cost
                    if new_cost < best.get(rewritten, editdist.INF):
                        best[rewritten] = new_cost
                        heapq.heappush(heap, (new_cost, rewritten, depth + 1))
        return hits

    def normalize(self, form, k=None, max_cost=None):
        """Ranked candidates for one surface form (length <= k)."""
        k = self.k if k is None else k
        max_cost = self.max_cost if max_cost is None else max_cost
        folded = form.casefold()

        exact = lookup_variant(self.lexicon, folded)
        if exact:
            cands = [
                NormalizationCandidate(folded, e, 1.0, "exact")
                for e in sorted(exact, key=_entry_sort_key)
            ]
            return cands[:k]

        per_entry = {}

        def offer(entry, score, method):
            key = entry.key
            prev = per_entry.get(key)
            if (
                prev is None
                or score > prev.score
                or (score == prev.score and _METHOD_RANK[method] < _METHOD_RANK[prev.method])
            ):
                per_entry[key] = NormalizationCandidate(folded, entry, score, method)

        for hit_form, cost in sorted(self._rule_closure(folded).items()):
            score = 1.0 / (1.0 + cost)
            for entry in self._entries_for[hit_form]:
                offer(entry, score, "rule")

        for idx, dist in editdist.scan(
            folded, self._variants, self.weights, max_cost
        ):
            score = 1.0 / (1.0 + dist)
            for entry in self._entries_for[self._variants[idx]]:
                offer(entry, score, "edit")

        ranked = sorted(
            per_entry.values(),
            key=lambda c: (-c.score, c.entry.lemma, c.entry.pos),
        )
        return ranked[:k]


def normalize(lexicon, rules, form, k=5, max_cost=2.5, weights=None):
    """One-shot normalization (spec operation); see Normalizer for reuse."""
    return Normalizer(
        lexicon, rules=rules, weights=weights, k=k, max_cost=max_cost
    ).normalize(form)


@dataclass(frozen=True)
class NormalizerMetrics:
    lemma_accuracy: float
    pos_accuracy: float
    matched_fraction: float


def evaluate_normalizer(gold, lexicon, rules=None, k=5, max_cost=2.5):
    """Accuracy of rank-1 suggestions against (form, lemma, pos) gold pairs."""
    if not gold:
        raise ValueError("gold list must be non-empty")
    normalizer = Normalizer(lexicon, rules=rules, k=k, max_cost=max_cost)
    matched = 0
    lemma_ok = 0
    pos_ok = 0
    for form, lemma, pos in gold:
        cands = normalizer.normalize(form)
        if not cands:
            continue
        matched += 1
        top = cands[0]
        if top.entry.lemma == lemma:
            lemma_ok += 1
            if top.entry.pos == pos:
                pos_ok += 1
    return NormalizerMetrics(
        lemma_accuracy=lemma_ok / matched if matched else 0.0,
        pos_accuracy=pos_ok / lemma_ok if lemma_ok else 0.0,
        matched_fraction=matched / len(gold),
    )
