"""File formats: graph/dataset JSON, process CSV, result JSON.

All emitters are deterministic: fixed key order, '\n' line endings, and
shortest round-trip float formatting (Python repr), so a pinned seed
reproduces every output byte for byte.
"""

from __future__ import annotations

import json
import os
from typing import Sequence

import numpy as np

from .distances import GraphPair, TimeGrid
from .errors import ValidationError
from .graphs import graph_from_dict, graph_to_dict
from .models import PairModel, pair_model_from_dict, pair_model_to_dict
from .stats import ConfidenceBand, ProcessMatrix, TwoSampleResult

DATASET_FORMAT = "heatgraph-dataset"


def check_overwrite(path: str, force: bool) -> None:
    if os.path.exists(path) and not force:
        raise ValidationError(f"refusing to overwrite {path} (pass --force to allow)")


def write_json(path: str, obj: dict, force: bool = False) -> None:
    check_overwrite(path, force)
    with open(path, "w", newline="\n") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")


def read_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc}") from exc


# --- datasets ----------------------------------------------------------------


def dataset_to_dict(pairs: Sequence[GraphPair], config: PairModel, seed: int) -> dict:
    return {
        "format": DATASET_FORMAT,
        "seed": seed,
        "num_pairs": len(pairs),
        "config": pair_model_to_dict(config),
        "pairs": [
            {"g1": graph_to_dict(p.g1), "g2": graph_to_dict(p.g2)} for p in pairs
        ],
    }


def write_dataset(path: str, pairs, config, seed, force=False) -> None:
    write_json(path, dataset_to_dict(pairs, config, seed), force=force)


def read_dataset(path: str) -> tuple[list[GraphPair], PairModel, int]:
    data = read_json(path)
    if data.get("format") != DATASET_FORMAT:
        raise ValidationError(f"{path} is not a {DATASET_FORMAT} file")
    try:
        raw_pairs = data["pairs"]
        config = pair_model_from_dict(data["config"])
        seed = int(data["seed"])
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed dataset file {path}: {exc}") from exc
    pairs = [
        GraphPair(g1=graph_from_dict(p["g1"]), g2=graph_from_dict(p["g2"]))
        for p in raw_pairs
    ]
    if not pairs:
        raise ValidationError(f"dataset {path} contains no pairs")
    return pairs, config, seed


# --- process matrices ---------------------------------------------------------


def write_process_csv(path: str, pm: ProcessMatrix, force: bool = False) -> None:
    """Matrix CSV; the header row is the time grid."""
    check_overwrite(path, force)
    lines = [",".join(repr(float(t)) for t in pm.grid.times)]
    for row in pm.rows:
        lines.append(",".join(repr(float(x)) for x in row))
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def read_process_csv(path: str) -> ProcessMatrix:
    try:
        with open(path) as fh:
            lines = [ln for ln in fh.read().split("\n") if ln]
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    if len(lines) < 2:
        raise ValidationError(f"{path} needs a header row and at least one data row")
    try:
        times = np.array([float(x) for x in lines[0].split(",")])
        rows = np.array([[float(x) for x in ln.split(",")] for ln in lines[1:]])
    except ValueError as exc:
        raise ValidationError(f"{path} contains non-numeric fields: {exc}") from exc
    grid = TimeGrid(T=float(times[-1]), m=times.shape[0])
    if not np.array_equal(grid.times, times):
        raise ValidationError(f"{path} header is not a uniform time grid from 0")
    return ProcessMatrix(grid=grid, rows=rows)


# --- result objects -----------------------------------------------------------


def band_to_dict(band: ConfidenceBand, seed: int) -> dict:
    return {
        "kind": "band",
        "alpha": band.alpha,
        "B": band.B,
        "seed": seed,
        "N": band.N,
        "grid": [float(t) for t in band.grid.times],
        "mean": [float(x) for x in band.mean],
        "c_hat": band.c_hat,
        "half_width": band.half_width,
    }


def test_to_dict(result: TwoSampleResult, seed: int, grid: TimeGrid) -> dict:
    return {
        "kind": "test",
        "alpha": result.alpha,
        "B": result.B,
        "seed": seed,
        "grid": [float(t) for t in grid.times],
        "statistic": result.statistic,
        "threshold": result.threshold,
        "p_value": result.p_value_estimate,
        "reject": result.reject,
    }
