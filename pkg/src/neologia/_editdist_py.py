"""Pure-Python weighted edit-distance kernel.

Fallback for the compiled extension in ``_editdistc.pyx``; both must
implement identical semantics (optimal string alignment: insertions,
deletions, substitutions with a confusion table, and adjacent
transpositions; no substring is edited twice).
"""

import math

INF = math.inf


def osa_distance(a, b, cheap, sub_cost, indel_cost, trans_cost, cutoff):
    """Weighted OSA distance between ``a`` and ``b``, or INF if > cutoff.

    ``cheap`` maps (char, char) pairs to a reduced substitution cost;
    pairs must be listed in both orders if symmetric.
    """
    if a == b:
        return 0.0
    la, lb = len(a), len(b)
    if abs(la - lb) * indel_cost > cutoff:
        return INF
    prev2 = None
    prev = [j * indel_cost for j in range(lb + 1)]
    for i in range(1, la + 1):
        ca = a[i - 1]
        cur = [i * indel_cost] + [0.0] * lb
        best = cur[0]
        for j in range(1, lb + 1):
            cb = b[j - 1]
            if ca == cb:
                cost = prev[j - 1]
            else:
                cost = prev[j - 1] + cheap.get((ca, cb), sub_cost)
            alt = prev[j] + indel_cost
            if alt < cost:
                cost = alt
            alt = cur[j - 1] + indel_cost
            if alt < cost:
                cost = alt
            if i > 1 and j > 1 and ca != cb and ca == b[j - 2] and a[i - 2] == cb:
                alt = prev2[j - 2] + trans_cost
                if alt < cost:
                    cost = alt
            cur[j] = cost
            if cost < best:
                best = cost
        if best > cutoff:
            return INF
        prev2 = prev
        prev = cur
    return prev[lb] if prev[lb] <= cutoff else INF


def scan(query, forms, cheap, sub_cost, indel_cost, trans_cost, cutoff):
    """Distances from ``query`` to every form, as (index, distance) pairs.

    Only forms within ``cutoff`` are returned, in input order.
    """
    out = []
    for idx, form in enumerate(forms):
        d = osa_distance(query, form, cheap, sub_cost, indel_cost, trans_cost, cutoff)
        if d is not INF and d <= cutoff:
            out.append((idx, d))
    return out
