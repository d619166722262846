import math

import numpy as np
import pytest

from heatgraph import (
    ERModel,
    ExperimentConfig,
    GeometricModel,
    PairModel,
    SBMModel,
    TimeGrid,
    ValidationError,
    binomial_ci,
    compute_process_matrix,
    process_row,
    run_experiment,
    sample_dataset,
)

ER6 = PairModel(ERModel(n=6, p=0.5), ERModel(n=6, p=0.5))
GRID = TimeGrid(T=1.0, m=5)


def small_config(**overrides):
    base = dict(
        experiment="level",
        process="hkd",
        grid=GRID,
        alpha=0.1,
        B=25,
        sizes=(4,),
        reps=3,
        seed=7,
        pair_model=ER6,
    )
    base.update(overrides)
    return ExperimentConfig(**base)


def test_compute_process_matrix_is_worker_count_independent():
    pairs = sample_dataset(ER6, 6, seed=1)
    serial = compute_process_matrix(pairs, GRID, "hkd", jobs=1)
    parallel = compute_process_matrix(pairs, GRID, "hkd", jobs=2)
    assert np.array_equal(serial.rows, parallel.rows)
    for i, p in enumerate(pairs):
        assert np.array_equal(serial.rows[i], process_row(p, GRID, "hkd"))


def test_config_validation():
    with pytest.raises(ValidationError):
        small_config(experiment="sweep")
    with pytest.raises(ValidationError):
        small_config(sizes=())
    with pytest.raises(ValidationError):
        small_config(sizes=(1,))
    with pytest.raises(ValidationError):
        small_config(reps=0)
    with pytest.raises(ValidationError):
        small_config(jobs=0)
    with pytest.raises(ValidationError):
        small_config(pair_model=None)
    with pytest.raises(ValidationError):
        small_config(experiment="power")  # missing pair_model_b
    with pytest.raises(ValidationError):
        small_config(experiment="coverage", truth_pairs=1)
    random_size = PairModel(
        GeometricModel(domain="disk", edge_fraction=0.5, poisson_mean=6),
        GeometricModel(domain="disk", edge_fraction=0.5, poisson_mean=6),
    )
    with pytest.raises(ValidationError):
        small_config(pair_model=random_size)
    # the same model is fine for HPD
    small_config(pair_model=random_size, process="hpd")
    unequal = PairModel(ERModel(n=6, p=0.5), ERModel(n=7, p=0.5))
    with pytest.raises(ValidationError):
        small_config(pair_model=unequal)


def test_level_experiment_summary_shape():
    out = run_experiment(small_config())
    assert out["kind"] == "experiment" and out["experiment"] == "level"
    assert out["sizes"] == [4] and len(out["rates"]) == 1
    assert 0.0 <= out["rates"][0] <= 1.0
    assert out["ci_low"][0] <= out["rates"][0] <= out["ci_high"][0]
    assert out["config"]["pair_model_b"] is None
    expected_bound = 6.0**1.5 * 1.0 * (1.0 / 4.0) / 2.0
    assert abs(out["discretization_bound"] - expected_bound) < 1e-12


def test_power_experiment_uses_second_model():
    sbm = PairModel(
        ERModel(n=6, p=0.5),
        SBMModel(block_sizes=(3, 3), probs=((0.9, 0.1), (0.1, 0.9))),
    )
    out = run_experiment(small_config(experiment="power", pair_model_b=sbm))
    assert out["config"]["pair_model_b"]["model2"]["type"] == "sbm"


def test_coverage_experiment_summary():
    out = run_experiment(
        small_config(experiment="coverage", truth_pairs=40, alpha=0.2, reps=4)
    )
    assert out["truth_pairs"] == 40
    assert 0.0 <= out["rates"][0] <= 1.0


def test_np_sweep_summary():
    cfg = small_config(
        experiment="np_sweep", pair_model=None, np_n=6, np_p=0.5, np_c=0.05,
        sizes=(4, 9), reps=2,
    )
    out = run_experiment(cfg)
    assert out["p0"] == [0.5, 0.5]
    assert out["p1"][0] == 0.5 + 0.05 * math.log(4) / 2.0
    assert len(out["rates"]) == 2
    assert out["np_params"] == {"n": 6, "p": 0.5, "C": 0.05}
    # random sizes never enter, so the bound uses the fixed np_n
    assert out["discretization_bound"] == pytest.approx(6.0**1.5 / 8.0)


def test_experiment_determinism_across_workers():
    out1 = run_experiment(small_config())
    out2 = run_experiment(small_config())
    assert out1 == out2
    out3 = run_experiment(small_config(jobs=2))
    assert out1 == out3
    out4 = run_experiment(small_config(seed=8))
    assert out4 != out1


def test_random_size_models_have_no_bound():
    random_size = PairModel(
        GeometricModel(domain="disk", edge_fraction=0.5, poisson_mean=6),
        GeometricModel(domain="disk", edge_fraction=0.5, poisson_mean=6),
    )
    out = run_experiment(small_config(pair_model=random_size, process="hpd", reps=1))
    assert out["discretization_bound"] is None


def test_binomial_ci():
    assert binomial_ci(0.0, 50) == (0.0, 0.0)
    assert binomial_ci(1.0, 50) == (1.0, 1.0)
    lo, hi = binomial_ci(0.5, 100)
    assert abs(lo - (0.5 - 1.96 * 0.05)) < 1e-12
    assert abs(hi - (0.5 + 1.96 * 0.05)) < 1e-12
