"""The four ways of choosing m matched pairs from N candidate units.

random  — sample 2m units, match them optimally;
ranking — match all N units optimally, keep the m cheapest pairs;
greedy  — repeatedly take the globally cheapest remaining pair;
optimal — append N-2m zero-cost sink nodes and solve one perfect matching,
          which provably yields the cheapest possible m real pairs.

All methods return a PairSet whose total is the sum of the selected pair
distances.  Tie-breaking is lexicographic on (i, j) wherever an order has to
be invented, so every method is deterministic; the random method is
deterministic given its generator state.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._files import atomic_write_text
from .distance import DistanceMatrix
from .errors import (InternalSinkPairing, InvariantViolation,
                     OddPoolForRanking)
from .matcher import min_weight_perfect_matching, pair_total

METHODS = ("random", "ranking", "greedy", "optimal")


@dataclass(frozen=True)
class SelectionProblem:
    """Distance matrix over N real units plus the requested pair count m."""

    D: DistanceMatrix
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise InvariantViolation(f"m must be >= 1, got {self.m}")
        if 2 * self.m > self.D.n:
            raise InvariantViolation(
                f"2m = {2 * self.m} exceeds the pool of N = {self.D.n} units")

    @property
    def n_units(self) -> int:
        return self.D.n


@dataclass(frozen=True)
class PairSet:
    """m disjoint pairs of unit indices and their total distance."""

    pairs: tuple[tuple[int, int], ...]
    total_distance: float
    method: str


def _make_pairset(D: np.ndarray, pairs, method: str) -> PairSet:
    norm = tuple(sorted((i, j) if i < j else (j, i) for i, j in pairs))
    return PairSet(pairs=norm, total_distance=pair_total(D, norm),
                   method=method)


def select_random(problem: SelectionProblem, rng: np.random.Generator) -> PairSet:
    """Uniform sample of 2m units, then an optimal matching among them.

    The sample is a partial Fisher-Yates shuffle consuming exactly 2m
    integer draws from ``rng``, so replications with a shared generator
    contract are reproducible.
    """
    N = problem.n_units
    k = 2 * problem.m
    idx = list(range(N))
    for i in range(k):
        j = int(rng.integers(i, N))
        idx[i], idx[j] = idx[j], idx[i]
    chosen = sorted(idx[:k])
    sub = problem.D.D[np.ix_(chosen, chosen)]
    matching = min_weight_perfect_matching(np.ascontiguousarray(sub))
    pairs = [(chosen[a], chosen[b]) for a, b in matching.pairs]
    return _make_pairset(problem.D.D, pairs, "random")


def select_ranking(problem: SelectionProblem) -> PairSet:
    """Match all N units optimally and keep the m cheapest pairs."""
    if problem.n_units % 2 != 0:
        raise OddPoolForRanking(
            f"ranking matches all units first and needs an even pool, "
            f"got N = {problem.n_units}")
    D = problem.D.D
    full = min_weight_perfect_matching(problem.D)
    ranked = sorted(full.pairs, key=lambda p: (D[p[0], p[1]], p))
    return _make_pairset(D, ranked[:problem.m], "ranking")


def select_greedy(problem: SelectionProblem) -> PairSet:
    """m rounds of taking the cheapest pair among units not yet used.

    Scanning one global (distance, i, j) order is equivalent to re-finding
    the minimum each round: removing units never reorders survivors.
    """
    D = problem.D.D
    N = problem.n_units
    iu, ju = np.triu_indices(N, k=1)
    order = np.lexsort((ju, iu, D[iu, ju]))
    used = np.zeros(N, dtype=bool)
    pairs = []
    for key in order:
        i = int(iu[key])
        j = int(ju[key])
        if used[i] or used[j]:
            continue
        used[i] = used[j] = True
        pairs.append((i, j))
        if len(pairs) == problem.m:
            break
    return _make_pairset(D, pairs, "greedy")


def build_sink_augmented(D: DistanceMatrix, m: int) -> DistanceMatrix:
    """Add N - 2m sink nodes: free to pair with any real unit, ruinously
    expensive to pair with each other.

    The sink-sink weight is 1 plus the sum of all real pair distances, which
    already exceeds the cost of any sink-free solution, so no solution
    containing a sink-sink pair can ever be optimal and true infinities are
    unnecessary.
    """
    if m < 1 or 2 * m > D.n:
        raise InvariantViolation(f"invalid pair count m = {m} for N = {D.n}")
    sinks = D.n - 2 * m
    if sinks == 0:
        return D
    n = D.n + sinks
    big = 1.0 + D.D.sum() / 2.0
    A = np.zeros((n, n))
    A[:D.n, :D.n] = D.D
    A[D.n:, D.n:] = big
    np.fill_diagonal(A, 0.0)
    return DistanceMatrix(n=n, D=A, form=D.form)


def select_optimal(problem: SelectionProblem) -> PairSet:
    """The provably cheapest m pairs over all ways of choosing 2m units."""
    N = problem.n_units
    augmented = build_sink_augmented(problem.D, problem.m)
    matching = min_weight_perfect_matching(augmented)
    real = [(i, j) for i, j in matching.pairs if i < N and j < N]
    if len(real) != problem.m:
        # Counting argument: any deficit means a sink got paired to a sink.
        raise InternalSinkPairing(
            f"{len(real)} real pairs instead of {problem.m}; the sink "
            "big-weight guard failed")
    return _make_pairset(problem.D.D, real, "optimal")


def write_pairs_csv(path, pairset: PairSet, ids, D: np.ndarray, *,
                    include_total_comment: bool = True) -> None:
    """Pair output format: pair_index,id_a,id_b,distance rows sorted by
    distance ascending (ties by index pair).  The trailing total comment is
    omitted when a machine-readable summary file accompanies the pairs."""
    rows = sorted(pairset.pairs, key=lambda p: (D[p[0], p[1]], p))
    lines = ["pair_index,id_a,id_b,distance"]
    for rank, (i, j) in enumerate(rows, start=1):
        lines.append(f"{rank},{ids[i]},{ids[j]},{D[i, j]:.17g}")
    if include_total_comment:
        lines.append(f"# total_distance={pairset.total_distance:.17g}")
    atomic_write_text(path, "\n".join(lines) + "\n")
