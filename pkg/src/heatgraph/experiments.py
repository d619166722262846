"""Monte-Carlo experiment runners: coverage, level, power, and NP sweep.

Each experiment repeats an independent band or two-sample-test instance
and reports the frequency of coverage or rejection per sample size,
with a binomial 95% confidence interval.  Seeds are derived per
(role, size index, repetition) so no stream is ever reused between
dataset sampling and bootstrapping, and results are independent of the
worker count used for pair evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from joblib import Parallel, delayed

from .distances import (
    KIND_HKD,
    TimeGrid,
    check_kind,
    lipschitz_constant,
    process_row,
)
from .errors import ValidationError
from .models import (
    ERModel,
    ExpDecayWeights,
    PairModel,
    UniformWeights,
    Unweighted,
    fixed_size,
    hkd_compatible,
    np_sweep_params,
    pair_model_to_dict,
    sample_dataset,
    sample_pair,
)
from .stats import ProcessMatrix, bootstrap_band, two_sample_test
from .streams import derive_rng, derive_seed

EXPERIMENT_KINDS = ("coverage", "level", "power", "np_sweep")

_ROLE_TRUTH = 0
_ROLE_SAMPLE_A = 1
_ROLE_SAMPLE_B = 2
_ROLE_BOOT = 3

_TRUTH_CHUNK = 200


@dataclass(frozen=True)
class ExperimentConfig:
    experiment: str
    process: str
    grid: TimeGrid
    alpha: float
    B: int
    sizes: tuple[int, ...]
    reps: int
    seed: int
    jobs: int = 1
    pair_model: PairModel | None = None
    pair_model_b: PairModel | None = None
    truth_pairs: int = 10000
    np_n: int = 50
    np_p: float = 0.5
    np_c: float = 0.01

    def __post_init__(self):
        if self.experiment not in EXPERIMENT_KINDS:
            raise ValidationError(
                f"experiment must be one of {EXPERIMENT_KINDS}, got {self.experiment!r}"
            )
        check_kind(self.process)
        if not self.sizes or any(s < 2 for s in self.sizes):
            raise ValidationError("sizes must be a nonempty list of ints >= 2")
        if self.reps < 1:
            raise ValidationError(f"need reps >= 1, got {self.reps}")
        if self.jobs == 0:
            raise ValidationError("jobs must be a nonzero worker count")
        if self.experiment != "np_sweep":
            if self.pair_model is None:
                raise ValidationError(f"{self.experiment} experiment needs a pair model")
            _check_process_model(self.process, self.pair_model)
        if self.experiment == "power":
            if self.pair_model_b is None:
                raise ValidationError("power experiment needs a second pair model")
            _check_process_model(self.process, self.pair_model_b)
        if self.experiment == "coverage" and self.truth_pairs < 2:
            raise ValidationError(f"need truth_pairs >= 2, got {self.truth_pairs}")


def _check_process_model(process: str, pm: PairModel) -> None:
    if process == KIND_HKD and not hkd_compatible(pm):
        raise ValidationError(
            "HKD requires both models to have equal fixed sizes; "
            "use --kind hpd for size-varying models"
        )


def compute_process_matrix(pairs, grid: TimeGrid, kind: str, jobs: int = 1) -> ProcessMatrix:
    """Evaluate one process row per pair, optionally on parallel workers.

    Rows are gathered in pair order, so the result does not depend on
    the worker count.
    """
    check_kind(kind)
    if jobs == 1:
        rows = [process_row(p, grid, kind) for p in pairs]
    else:
        rows = Parallel(n_jobs=jobs)(delayed(process_row)(p, grid, kind) for p in pairs)
    return ProcessMatrix(grid=grid, rows=np.vstack(rows))


def run_experiment(config: ExperimentConfig) -> dict:
    """Run the configured experiment and return its summary mapping."""
    if config.experiment == "coverage":
        return _run_coverage(config)
    if config.experiment == "np_sweep":
        return _run_np_sweep(config)
    return _run_test_experiment(config)


def _summary_header(config: ExperimentConfig) -> dict:
    return {
        "kind": "experiment",
        "experiment": config.experiment,
        "process": config.process,
        "alpha": config.alpha,
        "B": config.B,
        "seed": config.seed,
        "reps": config.reps,
        "grid": {"t_max": config.grid.T, "points": config.grid.m},
        "discretization_bound": _discretization_bound(config),
    }


def _run_coverage(config: ExperimentConfig) -> dict:
    truth = _truth_mean(config)
    rates = []
    for s, N in enumerate(config.sizes):
        hits = 0
        for r in range(config.reps):
            pairs = sample_dataset(
                config.pair_model, N, derive_seed(config.seed, _ROLE_SAMPLE_A, s, r)
            )
            pm = compute_process_matrix(pairs, config.grid, config.process, config.jobs)
            band = bootstrap_band(
                pm, config.alpha, config.B, derive_seed(config.seed, _ROLE_BOOT, s, r)
            )
            hits += int(band.covers(truth))
        rates.append(hits / config.reps)
    out = _summary_header(config)
    out.update(_rate_block(config, rates))
    out["truth_pairs"] = config.truth_pairs
    out["config"] = {"pair_model": pair_model_to_dict(config.pair_model)}
    return out


def _run_test_experiment(config: ExperimentConfig) -> dict:
    model_b = config.pair_model_b if config.experiment == "power" else config.pair_model
    rates = []
    for s, N in enumerate(config.sizes):
        rates.append(_rejection_rate(config, config.pair_model, model_b, N, s))
    out = _summary_header(config)
    out.update(_rate_block(config, rates))
    out["config"] = {
        "pair_model": pair_model_to_dict(config.pair_model),
        "pair_model_b": pair_model_to_dict(model_b) if config.experiment == "power" else None,
    }
    return out


def _run_np_sweep(config: ExperimentConfig) -> dict:
    rates, p0s, p1s = [], [], []
    for s, N in enumerate(config.sizes):
        p0, p1 = np_sweep_params(N, config.np_c, config.np_p)
        p0s.append(p0)
        p1s.append(p1)
        model_a = PairModel(
            model1=ERModel(config.np_n, p0), model2=ERModel(config.np_n, p0)
        )
        model_b = PairModel(
            model1=ERModel(config.np_n, p1), model2=ERModel(config.np_n, p1)
        )
        rates.append(_rejection_rate(config, model_a, model_b, N, s))
    out = _summary_header(config)
    out.update(_rate_block(config, rates))
    out["np_params"] = {"n": config.np_n, "p": config.np_p, "C": config.np_c}
    out["p0"] = p0s
    out["p1"] = p1s
    return out


def _rejection_rate(config, model_a, model_b, N: int, s: int) -> float:
    rejections = 0
    for r in range(config.reps):
        pairs_a = sample_dataset(model_a, N, derive_seed(config.seed, _ROLE_SAMPLE_A, s, r))
        pairs_b = sample_dataset(model_b, N, derive_seed(config.seed, _ROLE_SAMPLE_B, s, r))
        a = compute_process_matrix(pairs_a, config.grid, config.process, config.jobs)
        b = compute_process_matrix(pairs_b, config.grid, config.process, config.jobs)
        result = two_sample_test(
            a, b, config.alpha, config.B, derive_seed(config.seed, _ROLE_BOOT, s, r)
        )
        rejections += int(result.reject)
    return rejections / config.reps


def _truth_mean(config: ExperimentConfig) -> np.ndarray:
    """Mean process over a large reference sample, streamed in chunks."""
    total = np.zeros(config.grid.m)
    count = config.truth_pairs
    seed = derive_seed(config.seed, _ROLE_TRUTH, 0, 0)
    for start in range(0, count, _TRUTH_CHUNK):
        idx = range(start, min(start + _TRUTH_CHUNK, count))
        chunk = [sample_pair(config.pair_model, derive_rng(seed, i)) for i in idx]
        pm = compute_process_matrix(chunk, config.grid, config.process, config.jobs)
        total += pm.rows.sum(axis=0)
    return total / count


def binomial_ci(rate: float, reps: int) -> tuple[float, float]:
    """Wald 95% interval for a frequency over `reps` repetitions."""
    se = math.sqrt(max(rate * (1.0 - rate), 0.0) / reps)
    return max(0.0, rate - 1.96 * se), min(1.0, rate + 1.96 * se)


def _rate_block(config: ExperimentConfig, rates: list[float]) -> dict:
    cis = [binomial_ci(r, config.reps) for r in rates]
    return {
        "sizes": list(config.sizes),
        "rates": rates,
        "ci_low": [lo for lo, _ in cis],
        "ci_high": [hi for _, hi in cis],
    }


def _scheme_w_max(pm: PairModel) -> float:
    w = pm.weights
    if isinstance(w, Unweighted):
        return 1.0
    if isinstance(w, UniformWeights):
        return w.high
    assert isinstance(w, ExpDecayWeights)
    return 1.0


def _discretization_bound(config: ExperimentConfig) -> float | None:
    """Lipschitz bound on the sup-norm error of the grid approximation."""
    if config.experiment == "np_sweep":
        n, w_max = config.np_n, 1.0
    else:
        models = [config.pair_model]
        if config.pair_model_b is not None:
            models.append(config.pair_model_b)
        sizes = []
        for pm in models:
            for m in (pm.model1, pm.model2):
                sizes.append(fixed_size(m))
        if any(s is None for s in sizes):
            return None
        n = max(sizes)
        w_max = max(_scheme_w_max(pm) for pm in models)
    dt = config.grid.T / (config.grid.m - 1)
    return lipschitz_constant(n, w_max, config.process) * dt / 2.0
