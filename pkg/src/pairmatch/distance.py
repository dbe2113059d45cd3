"""Mahalanobis distance matrices from covariate tables.

The covariance is always estimated from all N candidate units (denominator
N-1); the distance between units i and j is the quadratic form
(x_i - x_j)' S* (x_i - x_j) with S* the inverse of (S + ridge*I), reported
either as-is (``squared``) or as its square root (``root``).
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .errors import (DimensionMismatch, InvariantViolation, ParseError,
                     SingularCovariance)

FORMS = ("root", "squared")

# The documented default: calibrated against the published single-covariate
# Gaussian m=50 mean ratio (0.5848); see README "Distance form calibration".
DEFAULT_DISTANCE_FORM = "root"

# Above this condition estimate the sample covariance is treated as singular;
# 1e12 leaves a comfortable margin inside double precision.
CONDITION_LIMIT = 1e12


@dataclass(frozen=True)
class UnitTable:
    """N units with p covariates each; ids are opaque unique labels."""

    ids: tuple[str, ...]
    X: np.ndarray

    def __post_init__(self):
        X = np.asarray(self.X, dtype=np.float64)
        if X.ndim != 2:
            raise InvariantViolation("covariate matrix must be 2-dimensional")
        n, p = X.shape
        if n < 2:
            raise InvariantViolation(f"need at least 2 units, got {n}")
        if p < 1:
            raise InvariantViolation("need at least 1 covariate")
        if len(self.ids) != n:
            raise InvariantViolation(
                f"{len(self.ids)} ids for {n} covariate rows")
        if len(set(self.ids)) != n:
            raise InvariantViolation("unit ids must be unique")
        if not np.isfinite(X).all():
            raise InvariantViolation("covariate values must be finite")
        X.setflags(write=False)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "ids", tuple(str(i) for i in self.ids))

    @property
    def n_units(self) -> int:
        return self.X.shape[0]

    @property
    def n_covariates(self) -> int:
        return self.X.shape[1]


@dataclass(frozen=True)
class CovarianceModel:
    """Sample covariance S and the inverse S* = (S + ridge*I)^-1."""

    S: np.ndarray
    S_star: np.ndarray
    ridge: float

    @property
    def n_covariates(self) -> int:
        return self.S.shape[0]


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric nonnegative distances with zero diagonal."""

    n: int
    D: np.ndarray
    form: str

    def __post_init__(self):
        D = np.asarray(self.D, dtype=np.float64)
        if D.shape != (self.n, self.n):
            raise InvariantViolation(
                f"distance matrix shape {D.shape} != ({self.n}, {self.n})")
        if self.form not in FORMS:
            raise InvariantViolation(f"unknown distance form {self.form!r}")
        if not np.isfinite(D).all():
            raise InvariantViolation("distances must be finite")
        if (D < 0).any():
            raise InvariantViolation("distances must be nonnegative")
        if (np.diagonal(D) != 0).any():
            raise InvariantViolation("distance diagonal must be zero")
        if not np.array_equal(D, D.T):
            raise InvariantViolation("distance matrix must be symmetric")
        D.setflags(write=False)
        object.__setattr__(self, "D", D)


def estimate_covariance(table: UnitTable, ridge: float = 0.0) -> CovarianceModel:
    """Sample covariance over all N units plus its (ridged) inverse.

    With ridge 0 a numerically singular S (condition estimate above 1e12)
    raises SingularCovariance: that means collinear or constant covariates,
    and silently regularising would corrupt replication.  Pass a small
    positive ridge (1e-8 works well) to proceed anyway.
    """
    if ridge < 0:
        raise InvariantViolation("ridge must be nonnegative")
    X = table.X
    S = np.atleast_2d(np.cov(X, rowvar=False, ddof=1))
    if ridge == 0.0:
        cond = np.linalg.cond(S)
        if not np.isfinite(cond) or cond > CONDITION_LIMIT:
            raise SingularCovariance(
                f"sample covariance condition estimate {cond:.3g} exceeds "
                f"{CONDITION_LIMIT:.0e}; covariates are collinear or constant "
                "(a positive ridge bypasses this)")
    A = S + ridge * np.eye(S.shape[0])
    try:
        S_star = np.linalg.inv(A)
    except np.linalg.LinAlgError as exc:
        raise SingularCovariance(str(exc)) from exc
    if not np.isfinite(S_star).all():
        raise SingularCovariance("covariance inverse is not finite")
    S_star = (S_star + S_star.T) / 2.0
    return CovarianceModel(S=S, S_star=S_star, ridge=float(ridge))


def mahalanobis_matrix(table: UnitTable, cov: CovarianceModel,
                       form: str = "root") -> DistanceMatrix:
    """All-pairs Mahalanobis distances between the table's units."""
    if form not in FORMS:
        raise InvariantViolation(f"unknown distance form {form!r}")
    if cov.n_covariates != table.n_covariates:
        raise DimensionMismatch(
            f"covariance is {cov.n_covariates}-dimensional but table has "
            f"{table.n_covariates} covariates")
    X = table.X
    # Pairwise differences keep duplicate rows at exactly zero, unlike the
    # expanded x'Ax + y'Ay - 2x'Ay form which cancels catastrophically.
    diff = X[:, None, :] - X[None, :, :]
    D2 = np.einsum("ijk,kl,ijl->ij", diff, cov.S_star, diff, optimize=True)
    np.maximum(D2, 0.0, out=D2)
    np.fill_diagonal(D2, 0.0)
    D = np.sqrt(D2) if form == "root" else D2
    return DistanceMatrix(n=X.shape[0], D=D, form=form)


def read_unit_csv(path) -> UnitTable:
    """Ingest the unit CSV format: header with `id` first, one row per unit,
    remaining columns parsed as decimal covariate values."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError("empty file", path=path) from None
        if not header or header[0].strip() != "id":
            raise ParseError("first header column must be 'id'",
                             path=path, row=1, column=1)
        p = len(header) - 1
        if p < 1:
            raise ParseError("no covariate columns", path=path, row=1)
        ids = []
        rows = []
        for rownum, rec in enumerate(reader, start=2):
            if not rec:
                continue
            if len(rec) != p + 1:
                raise ParseError(
                    f"expected {p + 1} fields, found {len(rec)}",
                    path=path, row=rownum)
            ids.append(rec[0])
            vals = []
            for colnum, cell in enumerate(rec[1:], start=2):
                try:
                    vals.append(float(cell))
                except ValueError:
                    raise ParseError(
                        f"not a number: {cell!r}",
                        path=path, row=rownum, column=colnum) from None
            rows.append(vals)
    if len(rows) < 2:
        raise ParseError("need at least 2 unit rows", path=path)
    try:
        return UnitTable(ids=tuple(ids), X=np.array(rows, dtype=np.float64))
    except InvariantViolation as exc:
        raise ParseError(str(exc), path=path) from None
