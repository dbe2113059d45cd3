"""Exact minimum-weight perfect matching on dense complete graphs.

Two interchangeable solver kernels implement the same primal-dual blossom
algorithm: a compiled Cython extension (the default when built) and a pure
Python twin.  Selection happens once at import; set ``PAIRMATCH_PURE_PYTHON=1``
to force the fallback.  ``enumerate_matchings_oracle`` provides the
independent brute-force reference used by the self-check command and the
test suite.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from ..errors import NonFiniteWeight, OddNodeCount, TooLarge

from . import _blossom_py

if os.environ.get("PAIRMATCH_PURE_PYTHON") == "1":
    _kernel = _blossom_py
    BACKEND = "python"
else:
    try:
        from . import _blossom_cy as _kernel
        BACKEND = "cython"
    except ImportError:
        _kernel = _blossom_py
        BACKEND = "python"

ORACLE_MAX_NODES = 12


@dataclass(frozen=True)
class Matching:
    """A perfect matching: disjoint (i, j) pairs with i < j covering all
    nodes, plus the summed weight of the matched edges."""

    pairs: tuple[tuple[int, int], ...]
    total_weight: float


def pair_total(D: np.ndarray, pairs) -> float:
    """Sum matrix entries over pairs in sorted pair order.

    Every total reported by this package goes through here so that equal
    pair sets always produce bit-identical floats regardless of the order
    in which the pairs were discovered.
    """
    total = 0.0
    for i, j in sorted(pairs):
        total += float(D[i, j])
    return total


def _as_weight_array(D) -> np.ndarray:
    """Accept a DistanceMatrix-like object or a raw square array."""
    W = getattr(D, "D", D)
    W = np.ascontiguousarray(W, dtype=np.float64)
    if W.ndim != 2 or W.shape[0] != W.shape[1]:
        raise OddNodeCount(f"weight matrix must be square, got shape {W.shape}")
    if W.shape[0] % 2 != 0 or W.shape[0] == 0:
        raise OddNodeCount(
            f"perfect matching needs an even node count, got {W.shape[0]}")
    if not np.isfinite(W).all():
        raise NonFiniteWeight("weight matrix contains NaN or infinite entries")
    return W


def _pairs_from_mate(mate) -> tuple[tuple[int, int], ...]:
    return tuple((i, int(mate[i])) for i in range(len(mate)) if i < mate[i])


def min_weight_perfect_matching(D) -> Matching:
    """Globally optimal perfect matching of a dense symmetric weight matrix.

    Accepts a DistanceMatrix or a plain (n, n) array; n must be even and all
    entries finite.  The result is exact (not heuristic) and deterministic:
    the same input bytes always yield the same pair list.
    """
    W = _as_weight_array(D)
    mate = _kernel.solve_min_perfect(W)
    pairs = _pairs_from_mate(mate)
    return Matching(pairs=pairs, total_weight=pair_total(W, pairs))


def enumerate_matchings_oracle(D) -> Matching:
    """Brute-force reference: enumerate all (n-1)!! perfect matchings.

    Returns a minimum-total matching; exact ties are resolved towards the
    lexicographically smallest sorted pair list.  Limited to n <= 12
    (10395 matchings); larger inputs raise TooLarge.
    """
    W = _as_weight_array(D)
    n = W.shape[0]
    if n > ORACLE_MAX_NODES:
        raise TooLarge(f"oracle enumerates n <= {ORACLE_MAX_NODES}, got {n}")

    best_pairs: list[tuple[int, int]] | None = None
    best_total = 0.0
    free = list(range(n))
    current: list[tuple[int, int]] = []

    def recurse() -> None:
        nonlocal best_pairs, best_total
        if not free:
            total = pair_total(W, current)
            if (best_pairs is None or total < best_total
                    or (total == best_total and current < best_pairs)):
                best_pairs = list(current)
                best_total = total
            return
        i = free[0]
        for idx in range(1, len(free)):
            j = free[idx]
            current.append((i, j))
            rest = free[1:idx] + free[idx + 1:]
            saved = free[:]
            free[:] = rest
            recurse()
            free[:] = saved
            current.pop()

    recurse()
    assert best_pairs is not None
    return Matching(pairs=tuple(best_pairs), total_weight=best_total)
