"""Brute-force references for the self-check command and the test suite.

These deliberately share no code with the solver path they certify: subset
choice is explicit enumeration, and pairings come from the independent
matching oracle.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import TooLarge
from .matcher import Matching, enumerate_matchings_oracle, pair_total

SUBSET_ORACLE_MAX_UNITS = 10


def exhaustive_best_subset_pairs(D, m: int) -> Matching:
    """Minimum total over every 2m-subset of units and every pairing of it.

    Limited to N <= 10 units; ties resolve to the lexicographically smallest
    pair list so the result is unique.
    """
    W = np.asarray(getattr(D, "D", D), dtype=np.float64)
    N = W.shape[0]
    if N > SUBSET_ORACLE_MAX_UNITS:
        raise TooLarge(
            f"subset oracle enumerates N <= {SUBSET_ORACLE_MAX_UNITS}, got {N}")
    best_pairs = None
    best_total = 0.0
    for subset in itertools.combinations(range(N), 2 * m):
        sub = np.ascontiguousarray(W[np.ix_(subset, subset)])
        local = enumerate_matchings_oracle(sub)
        pairs = tuple(sorted((subset[a], subset[b]) for a, b in local.pairs))
        total = pair_total(W, pairs)
        if (best_pairs is None or total < best_total
                or (total == best_total and pairs < best_pairs)):
            best_pairs = pairs
            best_total = total
    assert best_pairs is not None
    return Matching(pairs=best_pairs, total_weight=best_total)
