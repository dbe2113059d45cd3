"""Monte Carlo engine: run replications, aggregate ratios, write files.

RNG contract
------------
Replication ``r`` of a scenario with seed ``s`` draws from Philox4x64-10
streams keyed by ``numpy.random.SeedSequence(entropy=[s, r])``, split into a
data-generation child and a unit-sampling child.  Streams never depend on
worker layout or on which other replications ran, so any worker count
produces byte-identical output files.

Each replication: fresh covariates -> covariance -> distance matrix ->
optimal selection plus every compared method -> ratios
total(optimal) / total(method), with 0/0 mapping to 1.
"""

from __future__ import annotations

import concurrent.futures
import os
from dataclasses import dataclass

import numpy as np

from .._files import atomic_write_text
from ..distance import UnitTable, estimate_covariance, mahalanobis_matrix
from ..errors import (AllRepsFailed, EmptySample, FailureBudgetExceeded,
                      InvariantViolation, SingularCovariance)
from ..selection import (SelectionProblem, select_greedy, select_optimal,
                         select_random, select_ranking)
from .generators import sample_covariates
from .scenarios import ScenarioSpec

HISTOGRAM_BINS = 40
FAILURE_BUDGET = 0.01

RATIO_FILE = "ratios.csv"
SUMMARY_FILE = "summary.csv"
HISTOGRAM_FILE = "histogram.csv"


@dataclass(frozen=True)
class RatioSample:
    """Ratios total(optimal)/total(method) for one replication."""

    rep_index: int
    ratios: dict


@dataclass(frozen=True)
class SummaryStats:
    """Six-number summary matching the published table columns."""

    minimum: float
    q25: float
    median: float
    mean: float
    q75: float
    maximum: float

    def __post_init__(self):
        if not (self.minimum <= self.q25 <= self.median
                <= self.q75 <= self.maximum):
            raise InvariantViolation("summary quantiles are not monotone")
        if not (self.minimum <= self.mean <= self.maximum):
            raise InvariantViolation("mean outside the sample range")


@dataclass(frozen=True)
class Histogram:
    lo: float
    hi: float
    bin_count: int
    counts: tuple[int, ...]


def rep_streams(seed: int, rep_index: int):
    """The (data, sampling) generator pair for one replication."""
    root = np.random.SeedSequence(entropy=[int(seed), int(rep_index)])
    data_ss, select_ss = root.spawn(2)
    return (np.random.Generator(np.random.Philox(data_ss)),
            np.random.Generator(np.random.Philox(select_ss)))


def _ratio(opt_total: float, method_total: float) -> float:
    if opt_total == method_total:
        return 1.0  # covers identical totals and the 0/0 convention
    return opt_total / method_total


def run_replication(spec: ScenarioSpec, rep_index: int) -> RatioSample:
    """One replication; raises SingularCovariance when the drawn covariates
    are degenerate under ridge 0 (the caller records such reps as failed)."""
    data_rng, select_rng = rep_streams(spec.seed, rep_index)
    cols = [sample_covariates(g, spec.N, data_rng) for g in spec.generators]
    X = np.hstack(cols)
    table = UnitTable(ids=tuple(f"u{i + 1}" for i in range(spec.N)), X=X)
    cov = estimate_covariance(table, spec.ridge)
    dist = mahalanobis_matrix(table, cov, spec.distance_form)
    problem = SelectionProblem(D=dist, m=spec.m)
    opt_total = select_optimal(problem).total_distance
    ratios = {}
    for method in spec.ratio_methods:
        if method == "random":
            sel = select_random(problem, select_rng)
        elif method == "ranking":
            sel = select_ranking(problem)
        else:
            sel = select_greedy(problem)
        ratios[method] = _ratio(opt_total, sel.total_distance)
    return RatioSample(rep_index=rep_index, ratios=ratios)


def _rep_batch(spec: ScenarioSpec, start: int, stop: int):
    out = []
    for rep in range(start, stop):
        try:
            out.append((rep, run_replication(spec, rep).ratios))
        except SingularCovariance:
            out.append((rep, None))
    return out


@dataclass(frozen=True)
class ScenarioResult:
    spec: ScenarioSpec
    rep_indices: tuple[int, ...]
    ratios: dict
    reps_ok: int
    reps_failed: int
    stats: dict
    histograms: dict

    def ratio_array(self, method: str) -> np.ndarray:
        return self.ratios[method]


def run_scenario(spec: ScenarioSpec, workers: int = 1,
                 out_dir=None) -> ScenarioResult:
    """Execute all replications and aggregate per-method statistics.

    Results are keyed by replication index before any aggregation, so the
    outcome (and every output file) is identical for any ``workers``.
    Aborts when every rep fails or failures exceed 1% of reps.
    """
    if workers < 1:
        raise InvariantViolation("worker count must be >= 1")
    outcomes: list = []
    if workers == 1:
        outcomes = _rep_batch(spec, 0, spec.reps)
    else:
        chunk = max(1, min(500, -(-spec.reps // (workers * 4))))
        spans = [(s, min(s + chunk, spec.reps))
                 for s in range(0, spec.reps, chunk)]
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as ex:
            futures = [ex.submit(_rep_batch, spec, a, b) for a, b in spans]
            for fut in concurrent.futures.as_completed(futures):
                outcomes.extend(fut.result())
    outcomes.sort(key=lambda item: item[0])

    ok = [(rep, ratios) for rep, ratios in outcomes if ratios is not None]
    reps_failed = spec.reps - len(ok)
    if not ok:
        raise AllRepsFailed(
            f"all {spec.reps} replications of {spec.name} failed")
    if reps_failed > FAILURE_BUDGET * spec.reps:
        raise FailureBudgetExceeded(
            f"{reps_failed} of {spec.reps} replications failed "
            f"(budget {FAILURE_BUDGET:.0%})")

    rep_indices = tuple(rep for rep, _ in ok)
    ratios = {
        method: np.array([r[method] for _, r in ok], dtype=np.float64)
        for method in spec.ratio_methods
    }
    stats = {m: summarize(v) for m, v in ratios.items()}
    histograms = {m: make_histogram(v, 0.0, 1.0, HISTOGRAM_BINS)
                  for m, v in ratios.items()}
    result = ScenarioResult(spec=spec, rep_indices=rep_indices, ratios=ratios,
                            reps_ok=len(ok), reps_failed=reps_failed,
                            stats=stats, histograms=histograms)
    if out_dir is not None:
        write_result_files(result, out_dir)
    return result


def summarize(samples) -> SummaryStats:
    """Six-number summary; quantiles interpolate linearly between order
    statistics (quantile q of x_1..x_n sits at position 1 + q(n-1))."""
    arr = np.asarray(samples, dtype=np.float64)
    if arr.size == 0:
        raise EmptySample("cannot summarize an empty sample")
    return SummaryStats(
        minimum=float(arr.min()),
        q25=float(np.quantile(arr, 0.25)),
        median=float(np.quantile(arr, 0.5)),
        mean=float(arr.mean()),
        q75=float(np.quantile(arr, 0.75)),
        maximum=float(arr.max()),
    )


def make_histogram(samples, lo: float, hi: float,
                   bin_count: int) -> Histogram:
    """Uniform bins over [lo, hi]; the last bin is right-closed and values
    outside the range are clipped into the end bins."""
    if not lo < hi:
        raise InvariantViolation(f"histogram needs lo < hi, got [{lo}, {hi}]")
    if bin_count < 1:
        raise InvariantViolation("histogram needs at least one bin")
    arr = np.clip(np.asarray(samples, dtype=np.float64), lo, hi)
    counts, _ = np.histogram(arr, bins=bin_count, range=(lo, hi))
    return Histogram(lo=lo, hi=hi, bin_count=bin_count,
                     counts=tuple(int(c) for c in counts))


# -- output files -----------------------------------------------------------

def render_ratio_csv(result: ScenarioResult) -> str:
    lines = ["rep,method,ratio"]
    for pos, rep in enumerate(result.rep_indices):
        for method in sorted(result.ratios):
            lines.append(f"{rep},{method},{result.ratios[method][pos]!r}")
    return "\n".join(lines) + "\n"


def render_summary_csv(result: ScenarioResult) -> str:
    lines = ["scenario,method,min,q25,median,mean,q75,max,reps_ok,reps_failed"]
    for method in sorted(result.stats):
        s = result.stats[method]
        lines.append(
            f"{result.spec.name},{method},{s.minimum:.4f},{s.q25:.4f},"
            f"{s.median:.4f},{s.mean:.4f},{s.q75:.4f},{s.maximum:.4f},"
            f"{result.reps_ok},{result.reps_failed}")
    return "\n".join(lines) + "\n"


def render_histogram_csv(result: ScenarioResult) -> str:
    lines = ["method,bin_lo,bin_hi,count"]
    for method in sorted(result.histograms):
        h = result.histograms[method]
        step = (h.hi - h.lo) / h.bin_count
        for k, count in enumerate(h.counts):
            lines.append(f"{method},{h.lo + k * step!r},"
                         f"{h.lo + (k + 1) * step!r},{count}")
    return "\n".join(lines) + "\n"


def write_result_files(result: ScenarioResult, out_dir) -> None:
    os.makedirs(out_dir, exist_ok=True)
    atomic_write_text(os.path.join(out_dir, RATIO_FILE),
                      render_ratio_csv(result))
    atomic_write_text(os.path.join(out_dir, SUMMARY_FILE),
                      render_summary_csv(result))
    atomic_write_text(os.path.join(out_dir, HISTOGRAM_FILE),
                      render_histogram_csv(result))
