"""Weighted edit distance over spelling variants.

Substitution costs come from a confusion table of letter pairs that were
freely interchangeable in early modern orthography (u/v, i/j, i/y); those
substitutions are cheap, everything else pays full price. Adjacent
transpositions are supported (optimal string alignment).

The inner loop is the hot path of candidate generation, so a compiled
kernel is preferred when the extension built; the pure-Python fallback in
``_editdist_py`` is selected automatically otherwise.
"""

import math
from dataclasses import dataclass, field

try:
    from . import _editdistc as _kernel

    BACKEND = "c"
except ImportError:  # extension not built
    from . import _editdist_py as _kernel

    BACKEND = "python"

from . import _editdist_py

INF = math.inf

DEFAULT_CHEAP_PAIRS = {
    ("u", "v"): 0.3,
    ("i", "j"): 0.3,
    ("i", "y"): 0.3,
}


def _expand(pairs):
    table = {}
    for (a, b), cost in pairs.items():
        table[(a, b)] = cost
        table[(b, a)] = cost
    return table


@dataclass(frozen=True)
class EditWeights:
    """Cost model for the weighted distance; all fields config-exposed."""

    cheap_pairs: dict = field(default_factory=lambda: dict(DEFAULT_CHEAP_PAIRS))
    substitution: float = 1.0
    indel: float = 1.0
    transposition: float = 0.8

    def table(self):
        return _expand(self.cheap_pairs)


def distance(a, b, weights=None, max_cost=INF, _impl=None):
    """Weighted OSA distance between two strings; INF when above max_cost."""
    w = weights or EditWeights()
    impl = _impl or _kernel
    return impl.osa_distance(
        a, b, w.table(), w.substitution, w.indel, w.transposition, max_cost
    )


def scan(query, forms, weights=None, max_cost=2.5, _impl=None):
    """(index, distance) for every form within max_cost, in input order."""
    w = weights or EditWeights()
    impl = _impl or _kernel
    return impl.scan(
        query, list(forms), w.table(), w.substitution, w.indel, w.transposition, max_cost
    )


def distance_py(a, b, weights=None, max_cost=INF):
    """Pure-Python reference path, kept callable for parity tests/benchmarks."""
    return distance(a, b, weights, max_cost, _impl=_editdist_py)


def scan_py(query, forms, weights=None, max_cost=2.5):
    return scan(query, forms, weights, max_cost, _impl=_editdist_py)
