"""Empirical-process statistics on matrices of distance processes.

A row is one pair's distance process evaluated along a shared time
grid.  Everything here treats rows as i.i.d. draws: uniform confidence
bands for the mean process come from the multiplier-free resampling
bootstrap, and the two-sample problem is handled by the pooled bootstrap
of the sup-norm mean-difference statistic.

Bootstrap determinism: replicate b always draws from the PCG64 stream
keyed (seed, b), so results do not depend on execution order or on how
replicates are distributed over workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distances import TimeGrid
from .errors import ValidationError
from .streams import derive_rng


@dataclass(frozen=True)
class ProcessMatrix:
    """N process rows over one grid; rows[i, j] = value of pair i at t_j."""

    grid: TimeGrid
    rows: np.ndarray

    def __post_init__(self):
        rows = np.asarray(self.rows, dtype=float)
        if rows.ndim != 2:
            raise ValidationError(f"rows must be 2-d, got shape {rows.shape}")
        if rows.shape[0] < 1:
            raise ValidationError("process matrix needs at least one row")
        if rows.shape[1] != self.grid.m:
            raise ValidationError(
                f"rows have {rows.shape[1]} columns, grid has m={self.grid.m}"
            )
        if not np.isfinite(rows).all():
            raise ValidationError("process values must be finite")
        object.__setattr__(self, "rows", rows)

    @property
    def N(self) -> int:
        return self.rows.shape[0]


@dataclass(frozen=True)
class ConfidenceBand:
    """Uniform band mean +- c_hat/sqrt(N) over the grid."""

    grid: TimeGrid
    mean: np.ndarray
    c_hat: float
    alpha: float
    B: int
    N: int

    @property
    def half_width(self) -> float:
        return self.c_hat / math.sqrt(self.N)

    @property
    def lower(self) -> np.ndarray:
        return self.mean - self.half_width

    @property
    def upper(self) -> np.ndarray:
        return self.mean + self.half_width

    def covers(self, target: np.ndarray) -> bool:
        """True iff the target curve lies inside the band at every grid point."""
        target = np.asarray(target, dtype=float)
        return bool(np.all(np.abs(target - self.mean) <= self.half_width))


@dataclass(frozen=True)
class TwoSampleResult:
    statistic: float
    threshold: float
    p_value_estimate: float
    reject: bool
    alpha: float
    B: int


def mean_process(pm: ProcessMatrix) -> np.ndarray:
    """Pointwise mean of the process rows."""
    return pm.rows.mean(axis=0)


def empirical_covariance(pm: ProcessMatrix) -> np.ndarray:
    """Plug-in covariance P_N(f_t f_s) - P_N f_t P_N f_s (divisor N)."""
    if pm.N < 2:
        raise ValidationError(f"covariance needs N >= 2 rows, got {pm.N}")
    centered = pm.rows - pm.rows.mean(axis=0)
    cov = centered.T @ centered / pm.N
    return (cov + cov.T) / 2.0


def bootstrap_band(pm: ProcessMatrix, alpha: float, B: int, seed: int) -> ConfidenceBand:
    """Uniform confidence band for the mean process.

    Each replicate resamples the N rows with replacement and records
    s_b = sqrt(N) * sup_j |mean_boot - mean|; c_hat is the
    ceil(B(1-alpha))-th order statistic of the s_b and the band is
    mean +- c_hat/sqrt(N).
    """
    _check_alpha(alpha)
    _check_B(B)
    if pm.N < 2:
        raise ValidationError(f"bootstrap band needs N >= 2 rows, got {pm.N}")
    mean = pm.rows.mean(axis=0)
    root_n = math.sqrt(pm.N)
    sups = np.empty(B)
    for b in range(B):
        idx = derive_rng(seed, b).integers(0, pm.N, size=pm.N)
        boot_mean = pm.rows[idx].mean(axis=0)
        sups[b] = root_n * float(np.abs(boot_mean - mean).max())
    c_hat = _upper_quantile(sups, alpha)
    return ConfidenceBand(
        grid=pm.grid, mean=mean, c_hat=c_hat, alpha=alpha, B=B, N=pm.N
    )


def two_sample_statistic(a: ProcessMatrix, b: ProcessMatrix) -> float:
    """sqrt(MN/(M+N)) times the sup-norm gap between the two mean processes."""
    _check_same_grid(a, b)
    M, N = a.N, b.N
    gap = float(np.abs(a.rows.mean(axis=0) - b.rows.mean(axis=0)).max())
    return math.sqrt(M * N / (M + N)) * gap


def two_sample_test(
    a: ProcessMatrix, b: ProcessMatrix, alpha: float, B: int, seed: int
) -> TwoSampleResult:
    """Pooled-bootstrap test of equality of the two process distributions.

    Under the null the pooled rows are exchangeable, so each replicate
    redraws M+N rows with replacement from the pool, labels the first M
    as sample one and the rest as sample two, and recomputes the
    statistic.  The threshold is the ceil(B(1-alpha))-th order statistic
    of the replicate values; rejection means statistic > threshold.
    """
    _check_alpha(alpha)
    _check_B(B)
    _check_same_grid(a, b)
    M, N = a.N, b.N
    if M < 2 or N < 2:
        raise ValidationError(f"two-sample test needs M, N >= 2, got M={M}, N={N}")
    statistic = two_sample_statistic(a, b)

    pool = np.vstack([a.rows, b.rows])
    total = M + N
    scale = math.sqrt(M * N / total)
    boot = np.empty(B)
    for rep in range(B):
        idx = derive_rng(seed, rep).integers(0, total, size=total)
        sample = pool[idx]
        gap = float(
            np.abs(sample[:M].mean(axis=0) - sample[M:].mean(axis=0)).max()
        )
        boot[rep] = scale * gap
    threshold = _upper_quantile(boot, alpha)
    p_value = (1.0 + float(np.count_nonzero(boot >= statistic))) / (B + 1.0)
    return TwoSampleResult(
        statistic=statistic,
        threshold=threshold,
        p_value_estimate=p_value,
        reject=bool(statistic > threshold),
        alpha=alpha,
        B=B,
    )


def _upper_quantile(values: np.ndarray, alpha: float) -> float:
    # ceil(B(1-alpha))-th order statistic, 1-indexed
    k = math.ceil(len(values) * (1.0 - alpha))
    k = min(max(k, 1), len(values))
    return float(np.sort(values)[k - 1])


def _check_alpha(alpha: float) -> None:
    if not (0.0 < alpha < 1.0):
        raise ValidationError(f"alpha must be in (0,1), got {alpha}")


def _check_B(B: int) -> None:
    if B < 1:
        raise ValidationError(f"need at least one bootstrap replicate, got B={B}")


def _check_same_grid(a: ProcessMatrix, b: ProcessMatrix) -> None:
    if a.grid.m != b.grid.m or not np.array_equal(a.grid.times, b.grid.times):
        raise ValidationError("the two process matrices use different grids")
