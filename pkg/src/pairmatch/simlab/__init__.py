"""Monte Carlo laboratory: generators, scenario specs, and the engine."""

from .engine import (Histogram, RatioSample, ScenarioResult, SummaryStats,
                     make_histogram, rep_streams, run_replication,
                     run_scenario, summarize)
from .generators import (Cauchy, Discrete, DiscretePMF, EquicorrelatedMVN,
                         ExpOfMVN, Exponential, GeneratorSpec, Normal,
                         StudentT, Uniform, parse_generator,
                         sample_covariates)
from .scenarios import (BUILTIN_SCENARIOS, ScenarioSpec, builtin_scenario,
                        parse_scenario_file)

__all__ = [
    "BUILTIN_SCENARIOS", "Cauchy", "Discrete", "DiscretePMF",
    "EquicorrelatedMVN", "ExpOfMVN", "Exponential", "GeneratorSpec",
    "Histogram", "Normal", "RatioSample", "ScenarioResult", "ScenarioSpec",
    "StudentT", "SummaryStats", "Uniform", "builtin_scenario",
    "make_histogram", "parse_generator", "parse_scenario_file", "rep_streams",
    "run_replication", "run_scenario", "sample_covariates", "summarize",
]
