"""Covariate generators for the Monte Carlo scenarios.

Each generator produces one covariate column, except the equicorrelated
multivariate-normal family which produces a block of columns sharing an
off-diagonal correlation and a per-unit mean ramp.  Sampling uses numpy's
exact transforms (no tail truncation anywhere); every draw comes from the
generator handed in, so replications control their own streams.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from ..errors import InvalidGenerator


@dataclass(frozen=True)
class DiscretePMF:
    """Finite support with explicit probabilities."""

    values: tuple[float, ...]
    probs: tuple[float, ...]

    def __post_init__(self):
        if len(self.values) != len(self.probs):
            raise InvalidGenerator("values and probs differ in length")
        if len(self.values) == 0:
            raise InvalidGenerator("empty probability mass function")
        if len(set(self.values)) != len(self.values):
            raise InvalidGenerator("pmf values must be distinct")
        if not all(math.isfinite(v) for v in self.values):
            raise InvalidGenerator("pmf values must be finite")
        if not all(p > 0 for p in self.probs):
            raise InvalidGenerator("pmf probabilities must be positive")
        if abs(math.fsum(self.probs) - 1.0) > 1e-12:
            raise InvalidGenerator(
                f"pmf probabilities sum to {math.fsum(self.probs)!r}, not 1")


@dataclass(frozen=True)
class Exponential:
    mean: float = 1.0

    def __post_init__(self):
        if not (self.mean > 0 and math.isfinite(self.mean)):
            raise InvalidGenerator(f"exponential mean must be > 0, got {self.mean}")

    width = 1

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        return rng.exponential(self.mean, size=(n, 1))

    def spec_text(self) -> str:
        return f"exponential({self.mean:g})"


@dataclass(frozen=True)
class StudentT:
    df: float

    def __post_init__(self):
        if not (self.df > 0 and math.isfinite(self.df)):
            raise InvalidGenerator(f"student_t df must be > 0, got {self.df}")

    width = 1

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        return rng.standard_t(self.df, size=(n, 1))

    def spec_text(self) -> str:
        return f"student_t({self.df:g})"


@dataclass(frozen=True)
class Normal:
    mean: float = 0.0
    sd: float = 1.0

    def __post_init__(self):
        if not (self.sd > 0 and math.isfinite(self.sd) and math.isfinite(self.mean)):
            raise InvalidGenerator(
                f"normal needs finite mean and sd > 0, got ({self.mean}, {self.sd})")

    width = 1

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        return rng.normal(self.mean, self.sd, size=(n, 1))

    def spec_text(self) -> str:
        return f"normal({self.mean:g}, {self.sd:g})"


@dataclass(frozen=True)
class Uniform:
    lo: float = 0.0
    hi: float = 1.0

    def __post_init__(self):
        if not (self.lo < self.hi and math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise InvalidGenerator(
                f"uniform needs lo < hi, got ({self.lo}, {self.hi})")

    width = 1

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        return rng.uniform(self.lo, self.hi, size=(n, 1))

    def spec_text(self) -> str:
        return f"uniform({self.lo:g}, {self.hi:g})"


@dataclass(frozen=True)
class Cauchy:
    loc: float = 0.0
    scale: float = 1.0

    def __post_init__(self):
        if not (self.scale > 0 and math.isfinite(self.scale) and math.isfinite(self.loc)):
            raise InvalidGenerator(
                f"cauchy needs finite loc and scale > 0, got ({self.loc}, {self.scale})")

    width = 1

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        return self.loc + self.scale * rng.standard_cauchy(size=(n, 1))

    def spec_text(self) -> str:
        return f"cauchy({self.loc:g}, {self.scale:g})"


def _mvn_block(block_size: int, ramp_lo: float, ramp_hi: float,
               corr: float, n: int, rng: np.random.Generator) -> np.ndarray:
    """Draw n rows from N(mu_i, Sigma) with Sigma = (1-corr) I + corr J and
    mu_i = ramp_lo + (i-1)(ramp_hi-ramp_lo)/(n-1) on every block coordinate.

    Sigma^(1/2) acts as sqrt(1-corr) on the mean-zero part of each row and
    sqrt(1+(B-1)corr) on the row mean, so no factorisation is needed.
    """
    z = rng.standard_normal(size=(n, block_size))
    zbar = z.mean(axis=1, keepdims=True)
    y = math.sqrt(1.0 - corr) * (z - zbar) \
        + math.sqrt(1.0 + (block_size - 1) * corr) * zbar
    if n > 1:
        ramp = ramp_lo + np.arange(n) * ((ramp_hi - ramp_lo) / (n - 1))
    else:
        ramp = np.full(1, ramp_lo)
    return y + ramp[:, None]


def _check_mvn(block_size, ramp_lo, ramp_hi, corr):
    if block_size < 1 or block_size != int(block_size):
        raise InvalidGenerator(f"block size must be a positive integer, got {block_size}")
    if not (math.isfinite(ramp_lo) and math.isfinite(ramp_hi)):
        raise InvalidGenerator("mean ramp endpoints must be finite")
    if not (abs(corr) < 1 and 1.0 + (block_size - 1) * corr > 0):
        raise InvalidGenerator(
            f"correlation {corr} is outside the positive-definite range")


@dataclass(frozen=True)
class EquicorrelatedMVN:
    block_size: int
    ramp_lo: float
    ramp_hi: float
    corr: float

    def __post_init__(self):
        _check_mvn(self.block_size, self.ramp_lo, self.ramp_hi, self.corr)

    @property
    def width(self) -> int:
        return self.block_size

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        return _mvn_block(self.block_size, self.ramp_lo, self.ramp_hi,
                          self.corr, n, rng)

    def spec_text(self) -> str:
        return (f"equicorrelated_mvn({self.block_size}, {self.ramp_lo:g}, "
                f"{self.ramp_hi:g}, {self.corr:g})")


@dataclass(frozen=True)
class ExpOfMVN:
    """Elementwise exponential of the equicorrelated normal block; gives
    skewed, heavy-tailed covariates."""

    block_size: int
    ramp_lo: float
    ramp_hi: float
    corr: float

    def __post_init__(self):
        _check_mvn(self.block_size, self.ramp_lo, self.ramp_hi, self.corr)

    @property
    def width(self) -> int:
        return self.block_size

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        return np.exp(_mvn_block(self.block_size, self.ramp_lo, self.ramp_hi,
                                 self.corr, n, rng))

    def spec_text(self) -> str:
        return (f"exp_of_mvn({self.block_size}, {self.ramp_lo:g}, "
                f"{self.ramp_hi:g}, {self.corr:g})")


@dataclass(frozen=True)
class Discrete:
    pmf: DiscretePMF

    width = 1

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        vals = np.asarray(self.pmf.values)
        probs = np.asarray(self.pmf.probs)
        return rng.choice(vals, size=(n, 1), p=probs / probs.sum())

    def spec_text(self) -> str:
        inner = ", ".join(f"{v:g}:{p:.17g}"
                          for v, p in zip(self.pmf.values, self.pmf.probs))
        return f"discrete({inner})"


GeneratorSpec = (Exponential | StudentT | Normal | Uniform | Cauchy
                 | EquicorrelatedMVN | ExpOfMVN | Discrete)


def sample_covariates(spec: GeneratorSpec, n: int,
                      rng: np.random.Generator) -> np.ndarray:
    """One column block of covariate draws: shape (n, spec.width)."""
    if n < 1:
        raise InvalidGenerator(f"sample size must be >= 1, got {n}")
    return spec.sample(n, rng)


_CALL_RE = re.compile(r"^\s*([a-z_]+)\s*\((.*)\)\s*$", re.S)


def parse_generator(text: str) -> GeneratorSpec:
    """Parse the one-line generator syntax used in scenario files, e.g.
    ``normal(1, 1)`` or ``discrete(-10:0.4, -1:0.1, 1:0.1, 10:0.4)``."""
    m = _CALL_RE.match(text)
    if not m:
        raise InvalidGenerator(f"cannot parse generator: {text!r}")
    kind, argstr = m.group(1), m.group(2).strip()
    args = [a.strip() for a in argstr.split(",")] if argstr else []

    def floats(expected):
        if len(args) != expected:
            raise InvalidGenerator(
                f"{kind} takes {expected} parameter(s), got {len(args)}: {text!r}")
        try:
            return [float(a) for a in args]
        except ValueError:
            raise InvalidGenerator(f"non-numeric parameter in {text!r}") from None

    if kind == "exponential":
        return Exponential(*floats(1))
    if kind == "student_t":
        return StudentT(*floats(1))
    if kind == "normal":
        return Normal(*floats(2))
    if kind == "uniform":
        return Uniform(*floats(2))
    if kind == "cauchy":
        return Cauchy(*floats(2))
    if kind in ("equicorrelated_mvn", "exp_of_mvn"):
        vals = floats(4)
        cls = EquicorrelatedMVN if kind == "equicorrelated_mvn" else ExpOfMVN
        return cls(int(vals[0]), vals[1], vals[2], vals[3])
    if kind == "discrete":
        values = []
        probs = []
        for a in args:
            parts = a.split(":")
            if len(parts) != 2:
                raise InvalidGenerator(
                    f"discrete entries are value:prob, got {a!r}")
            try:
                values.append(float(parts[0]))
                probs.append(float(parts[1]))
            except ValueError:
                raise InvalidGenerator(f"non-numeric entry {a!r}") from None
        return Discrete(DiscretePMF(tuple(values), tuple(probs)))
    raise InvalidGenerator(f"unknown generator kind {kind!r}")
