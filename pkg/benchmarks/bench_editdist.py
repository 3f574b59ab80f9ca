#!/usr/bin/env python3
"""Benchmark the compiled edit-distance kernel against the pure-Python one.

The candidate generator's hot loop is the weighted scan of a query form
over every spelling variant in the lexicon; this measures exactly that
workload at a few lexicon sizes.
"""

import random
import time

from neologia import _editdist_py, editdist

try:
    from neologia import _editdistc
except ImportError:
    _editdistc = None


def make_workload(n_variants, n_queries, seed=42):
    rng = random.Random(seed)
    alphabet = "abcdefghiklmnoprstuvwy"
    variants = [
        "".join(rng.choice(alphabet) for _ in range(rng.randint(4, 12)))
        for _ in range(n_variants)
    ]
    queries = []
    for _ in range(n_queries):
        base = rng.choice(variants)
        chars = list(base)
        for _ in range(rng.randint(0, 3)):
            pos = rng.randrange(len(chars))
            chars[pos] = rng.choice(alphabet)
        queries.append("".join(chars))
    return variants, queries


def run(impl, variants, queries, weights, max_cost):
    table = weights.table()
    total = 0
    started = time.perf_counter()
    for query in queries:
        total += len(
            impl.scan(query, variants, table, weights.substitution,
                      weights.indel, weights.transposition, max_cost)
        )
    return time.perf_counter() - started, total


def main():
    weights = editdist.EditWeights()
    print(f"active backend: {editdist.BACKEND}")
    print(f"{'variants':>9} {'queries':>8} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for n_variants, n_queries in ((250, 200), (1000, 200), (4000, 100)):
        variants, queries = make_workload(n_variants, n_queries)
        py_time, py_hits = run(_editdist_py, variants, queries, weights, 2.5)
        if _editdistc is not None:
            c_time, c_hits = run(_editdistc, variants, queries, weights, 2.5)
            assert c_hits == py_hits, "backends disagree"
            print(f"{n_variants:>9} {n_queries:>8} {py_time:>9.3f}s {c_time:>9.3f}s "
                  f"{py_time / c_time:>7.1f}x")
        else:
            print(f"{n_variants:>9} {n_queries:>8} {py_time:>9.3f}s {'n/a':>10} {'n/a':>8}")


if __name__ == "__main__":
    main()
