"""Scenario specifications: the builtin study grid plus a flat file format.

Builtin names
-------------
``case-A`` / ``case-B``        eight-covariate studies, N=100, m=10,
                               methods random + ranking + greedy;
``single-<dist>-m<m>``         one covariate (cauchy, gaussian, uniform),
                               N=100, m in {30, 45, 50}, greedy only;
``two-cov-case<1..12>``        two covariates, N=100, m=50, greedy only;
                               cases 4-12 draw from discrete multimodal
                               distributions and default to ridge 1e-8
                               because discrete draws can collide.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..distance import DEFAULT_DISTANCE_FORM, FORMS
from ..errors import InvariantViolation, ParseError, UnknownScenario
from .generators import (Cauchy, Discrete, DiscretePMF, EquicorrelatedMVN,
                         ExpOfMVN, Exponential, GeneratorSpec, Normal,
                         StudentT, Uniform, parse_generator)

RATIO_METHODS = ("greedy", "random", "ranking")

DEFAULT_SEED = 1
DEFAULT_REPS = 10_000
DISCRETE_RIDGE = 1e-8


@dataclass(frozen=True)
class ScenarioSpec:
    """Everything needed to reproduce one Monte Carlo experiment."""

    name: str
    N: int
    m: int
    generators: tuple[GeneratorSpec, ...]
    reps: int
    seed: int
    distance_form: str = DEFAULT_DISTANCE_FORM
    ratio_methods: tuple[str, ...] = ("greedy",)
    ridge: float = 0.0

    def __post_init__(self):
        if self.m < 1 or 2 * self.m > self.N:
            raise InvariantViolation(
                f"scenario needs N >= 2m >= 2, got N={self.N}, m={self.m}")
        if self.reps < 1:
            raise InvariantViolation(f"reps must be >= 1, got {self.reps}")
        if not self.generators:
            raise InvariantViolation("scenario needs at least one generator")
        if self.distance_form not in FORMS:
            raise InvariantViolation(
                f"unknown distance form {self.distance_form!r}")
        if not self.ratio_methods:
            raise InvariantViolation("scenario compares at least one method")
        bad = [m for m in self.ratio_methods if m not in RATIO_METHODS]
        if bad:
            raise InvariantViolation(f"unknown ratio methods: {bad}")
        if len(set(self.ratio_methods)) != len(self.ratio_methods):
            raise InvariantViolation("duplicate ratio methods")
        if self.ridge < 0:
            raise InvariantViolation("ridge must be nonnegative")

    @property
    def n_covariates(self) -> int:
        return sum(g.width for g in self.generators)


def _table4_pmf(case: int) -> DiscretePMF:
    if case == 4:
        return DiscretePMF((-10, -1, 1, 10), (0.4, 0.1, 0.1, 0.4))
    if case == 5:
        return DiscretePMF((-10, -1, 1, 10), (0.1, 0.4, 0.1, 0.4))
    if case == 6:
        return DiscretePMF((-10, -1, 2, 20), (0.6, 0.1, 0.2, 0.1))
    if case == 7:
        return DiscretePMF((-20, -10, -1, 1, 10, 20),
                           (1/12, 1/3, 1/12, 1/12, 1/3, 1/12))
    if case == 8:
        return DiscretePMF((-20, -10, -1, 1, 10, 20),
                           (1/12, 1/3, 1/12, 1/12, 1/12, 1/3))
    if case == 9:
        return DiscretePMF((-20, -10, -1, 2, 20, 40),
                           (1/12, 1/3, 1/12, 1/12, 1/12, 1/3))
    # 20-point grids with ten modes: repeating probability blocks over an
    # evenly spaced support.
    if case == 10:
        values = tuple(-10 + 20 * k / 19 for k in range(20))
        probs = tuple(np.tile([1, 4, 4, 1], 5) / 50)
        return DiscretePMF(values, probs)
    if case == 11:
        values = tuple(-10 + 20 * k / 19 for k in range(20))
        probs = tuple(np.tile([1, 4], 10) / 50)
        return DiscretePMF(values, probs)
    if case == 12:
        values = tuple(-10 + 40 * k / 19 for k in range(20))
        probs = tuple(np.tile([4, 1], 10) / 50)
        return DiscretePMF(values, probs)
    raise UnknownScenario(f"no discrete pmf for case {case}")


_SINGLE_COVS = {
    "cauchy": Cauchy(0, 1),
    "gaussian": Normal(0, 1),
    "uniform": Uniform(0, 1),
}


def builtin_scenario(name: str) -> ScenarioSpec:
    """Return the exact spec for a builtin scenario name."""
    if name == "case-A" or name == "case-B":
        c3 = Normal(1, 1) if name == "case-A" else Cauchy(0, 1)
        block_cls = EquicorrelatedMVN if name == "case-A" else ExpOfMVN
        return ScenarioSpec(
            name=name, N=100, m=10,
            generators=(Exponential(1), StudentT(3), c3, Uniform(0, 2),
                        block_cls(4, 1.0, 2.0, 0.5)),
            reps=DEFAULT_REPS, seed=DEFAULT_SEED,
            ratio_methods=("random", "ranking", "greedy"))
    if name.startswith("single-"):
        parts = name.split("-")
        if len(parts) == 3 and parts[1] in _SINGLE_COVS and parts[2] in (
                "m30", "m45", "m50"):
            return ScenarioSpec(
                name=name, N=100, m=int(parts[2][1:]),
                generators=(_SINGLE_COVS[parts[1]],),
                reps=DEFAULT_REPS, seed=DEFAULT_SEED,
                ratio_methods=("greedy",))
    if name.startswith("two-cov-case"):
        try:
            case = int(name[len("two-cov-case"):])
        except ValueError:
            case = -1
        if 1 <= case <= 12:
            if case == 1:
                gen: GeneratorSpec = Cauchy(0, 1)
            elif case == 2:
                gen = Normal(0, 1)
            elif case == 3:
                gen = Uniform(0, 1)
            else:
                gen = Discrete(_table4_pmf(case))
            return ScenarioSpec(
                name=name, N=100, m=50, generators=(gen, gen),
                reps=DEFAULT_REPS, seed=DEFAULT_SEED,
                ratio_methods=("greedy",),
                ridge=DISCRETE_RIDGE if case >= 4 else 0.0)
    raise UnknownScenario(
        f"unknown scenario {name!r}; builtins are: {', '.join(BUILTIN_SCENARIOS)}")


BUILTIN_SCENARIOS = tuple(
    ["case-A", "case-B"]
    + [f"single-{d}-m{m}" for d in ("cauchy", "gaussian", "uniform")
       for m in (30, 45, 50)]
    + [f"two-cov-case{i}" for i in range(1, 13)])


_SCALAR_KEYS = {"name", "N", "m", "reps", "seed", "distance_form", "ridge",
                "methods"}


def parse_scenario_file(path) -> ScenarioSpec:
    """Read the flat key-value scenario format.

    One ``key = value`` pair per line; ``#`` starts a comment; ``generator``
    lines may repeat, one covariate (or covariate block) each, in order::

        name = my-study
        N = 100
        m = 10
        reps = 2000
        seed = 7
        distance_form = root
        ridge = 0
        methods = random, ranking, greedy
        generator = exponential(1)
        generator = equicorrelated_mvn(4, 1, 2, 0.5)
    """
    fields: dict = {}
    generators: list[GeneratorSpec] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ParseError("expected 'key = value'", path=path,
                                 row=lineno)
            key, value = (part.strip() for part in line.split("=", 1))
            if key == "generator":
                try:
                    generators.append(parse_generator(value))
                except Exception as exc:
                    raise ParseError(str(exc), path=path, row=lineno) from None
            elif key in _SCALAR_KEYS:
                if key in fields:
                    raise ParseError(f"duplicate key {key!r}", path=path,
                                     row=lineno)
                fields[key] = (value, lineno)
            else:
                raise ParseError(f"unknown key {key!r}", path=path, row=lineno)

    def take(key, conv, default=None):
        if key not in fields:
            if default is None:
                raise ParseError(f"missing required key {key!r}", path=path)
            return default
        value, lineno = fields.pop(key)
        try:
            return conv(value)
        except ValueError:
            raise ParseError(f"bad value for {key!r}: {value!r}", path=path,
                             row=lineno) from None

    name = take("name", str)
    N = take("N", int)
    m = take("m", int)
    reps = take("reps", int, DEFAULT_REPS)
    seed = take("seed", int, DEFAULT_SEED)
    form = take("distance_form", str, DEFAULT_DISTANCE_FORM)
    ridge = take("ridge", float, 0.0)
    methods = take("methods", lambda v: tuple(
        s.strip() for s in v.split(",") if s.strip()), ("greedy",))
    if not generators:
        raise ParseError("scenario file declares no generator lines",
                         path=path)
    try:
        return ScenarioSpec(name=name, N=N, m=m, generators=tuple(generators),
                            reps=reps, seed=seed, distance_form=form,
                            ratio_methods=methods, ridge=ridge)
    except InvariantViolation as exc:
        raise ParseError(str(exc), path=path) from None
