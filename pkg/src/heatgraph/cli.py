"""Command line interface.

Subcommands: generate, compute, band, test, experiment, plot.
Exit codes: 0 success, 2 validation error (bad flags, bad files,
contract violations), 3 numerical failure.
The HEATGRAPH_JOBS environment variable overrides --jobs everywhere.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys

from .distances import TimeGrid
from .errors import NumericalError, ValidationError
from .experiments import ExperimentConfig, compute_process_matrix, run_experiment
from .io import (
    band_to_dict,
    check_overwrite,
    read_dataset,
    read_json,
    read_process_csv,
    test_to_dict,
    write_dataset,
    write_json,
    write_process_csv,
)
from .models import (
    GeometricModel,
    PairModel,
    pair_model_from_dict,
    sample_dataset,
)
from .spectral import laplacian_eigen_bounds  # noqa: F401  (re-export for scripts)
from .stats import bootstrap_band, two_sample_test
from .svgplot import band_svg, rates_svg

DEFAULT_B = 1000
FAST_B = 200


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heatgraph",
        description="Heat-diffusion distances between graphs with bootstrap inference.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="sample a dataset of graph pairs")
    p.add_argument("--model", required=True, help="pair-model config JSON")
    p.add_argument("--num-pairs", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epsilon", type=float, default=None, help="override annulus inner radius")
    p.add_argument("--out", required=True)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("compute", help="evaluate distance processes for a dataset")
    p.add_argument("--dataset", required=True)
    p.add_argument("--kind", choices=["hkd", "hpd"], required=True)
    _add_grid_flags(p)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", required=True)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("band", help="bootstrap confidence band for a process matrix")
    p.add_argument("--process", required=True, help="process CSV")
    _add_stat_flags(p)
    p.add_argument("--out", required=True, help="output prefix (.json/.svg/.csv)")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=_cmd_band)

    p = sub.add_parser("test", help="two-sample bootstrap test on two process matrices")
    p.add_argument("--process-a", required=True)
    p.add_argument("--process-b", required=True)
    _add_stat_flags(p)
    p.add_argument("--out", required=True, help="output JSON path")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=_cmd_test)

    p = sub.add_parser("experiment", help="Monte-Carlo coverage/level/power/np_sweep runs")
    p.add_argument(
        "--experiment",
        choices=["coverage", "level", "power", "np_sweep"],
        required=True,
    )
    p.add_argument("--model", help="pair-model config JSON (unused for np_sweep)")
    p.add_argument("--model-b", help="second pair model (power experiment)")
    p.add_argument("--kind", choices=["hkd", "hpd"], default="hkd")
    _add_grid_flags(p)
    _add_stat_flags(p)
    p.add_argument("--reps", type=int, default=100)
    p.add_argument("--sizes", default="50", help="comma-separated sample sizes")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--epsilon", type=float, default=None)
    p.add_argument("--truth-pairs", type=int, default=10000)
    p.add_argument("--np-n", type=int, default=50)
    p.add_argument("--np-p", type=float, default=0.5)
    p.add_argument("--np-c", type=float, default=0.01)
    p.add_argument("--out", required=True, help="output prefix (.json/.svg/.csv)")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("plot", help="render a band or experiment JSON to SVG")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=_cmd_plot)

    return parser


def _add_grid_flags(p) -> None:
    p.add_argument("--t-max", type=float, default=1.0)
    p.add_argument("--grid-points", type=int, default=50)


def _add_stat_flags(p) -> None:
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--bootstrap", type=int, default=None, help=f"replicates (default {DEFAULT_B})")
    p.add_argument("--fast", action="store_true", help=f"use B={FAST_B} unless --bootstrap is given")
    p.add_argument("--seed", type=int, default=0)


def _resolve_jobs(args) -> int:
    env = os.environ.get("HEATGRAPH_JOBS")
    jobs = int(env) if env else getattr(args, "jobs", 1)
    if jobs == 0:
        raise ValidationError("jobs must be a nonzero worker count")
    return jobs


def _resolve_B(args) -> int:
    if args.bootstrap is not None:
        if args.bootstrap < 1:
            raise ValidationError(f"need at least one bootstrap replicate, got {args.bootstrap}")
        return args.bootstrap
    return FAST_B if args.fast else DEFAULT_B


def _grid(args) -> TimeGrid:
    return TimeGrid(T=args.t_max, m=args.grid_points)


def _load_pair_model(path: str, epsilon: float | None) -> PairModel:
    pm = pair_model_from_dict(read_json(path))
    if epsilon is None:
        return pm
    def fix(model):
        if isinstance(model, GeometricModel):
            return dataclasses.replace(model, epsilon=epsilon)
        return model
    return dataclasses.replace(pm, model1=fix(pm.model1), model2=fix(pm.model2))


def _out_prefix(path: str) -> str:
    return path[:-5] if path.endswith(".json") else path


def _cmd_generate(args) -> int:
    pm = _load_pair_model(args.model, args.epsilon)
    pairs = sample_dataset(pm, args.num_pairs, args.seed)
    write_dataset(args.out, pairs, pm, args.seed, force=args.force)
    print(f"wrote {args.num_pairs} pairs to {args.out}")
    return 0


def _cmd_compute(args) -> int:
    pairs, _, _ = read_dataset(args.dataset)
    grid = _grid(args)
    matrix = compute_process_matrix(pairs, grid, args.kind, jobs=_resolve_jobs(args))
    write_process_csv(args.out, matrix, force=args.force)
    bound = _dataset_discretization_bound(pairs, grid, args.kind)
    print(f"wrote {matrix.N}x{grid.m} process matrix to {args.out}")
    print(f"grid discretization error bound: {bound:.6g}")
    return 0


def _dataset_discretization_bound(pairs, grid: TimeGrid, kind: str) -> float:
    from .distances import lipschitz_constant

    n = max(max(p.g1.n, p.g2.n) for p in pairs)
    w_max = max(max(p.g1.w_max, p.g2.w_max) for p in pairs)
    dt = grid.T / (grid.m - 1)
    return lipschitz_constant(n, w_max, kind) * dt / 2.0


def _cmd_band(args) -> int:
    matrix = read_process_csv(args.process)
    band = bootstrap_band(matrix, args.alpha, _resolve_B(args), args.seed)
    prefix = _out_prefix(args.out)
    write_json(prefix + ".json", band_to_dict(band, args.seed), force=args.force)
    _write_band_plot(prefix, band, args.force)
    print(f"wrote {prefix}.json, {prefix}.svg, {prefix}.csv (c_hat={band.c_hat!r})")
    return 0


def _write_band_plot(prefix: str, band, force: bool) -> None:
    times = band.grid.times
    svg = band_svg(times, band.mean, band.lower, band.upper,
                   title=f"mean process with {100 * (1 - band.alpha):g}% band")
    _write_text(prefix + ".svg", svg, force)
    lines = ["t,mean,lower,upper"]
    for t, m, lo, hi in zip(times, band.mean, band.lower, band.upper):
        lines.append(f"{float(t)!r},{float(m)!r},{float(lo)!r},{float(hi)!r}")
    _write_text(prefix + ".csv", "\n".join(lines) + "\n", force)


def _cmd_test(args) -> int:
    a = read_process_csv(args.process_a)
    b = read_process_csv(args.process_b)
    result = two_sample_test(a, b, args.alpha, _resolve_B(args), args.seed)
    write_json(args.out, test_to_dict(result, args.seed, a.grid), force=args.force)
    verdict = "reject" if result.reject else "accept"
    print(
        f"statistic={result.statistic!r} threshold={result.threshold!r} "
        f"p={result.p_value_estimate!r} -> {verdict}"
    )
    return 0


def _cmd_experiment(args) -> int:
    try:
        sizes = tuple(int(s) for s in args.sizes.split(",") if s)
    except ValueError as exc:
        raise ValidationError(f"--sizes must be comma-separated ints: {exc}") from exc
    pm = _load_pair_model(args.model, args.epsilon) if args.model else None
    pm_b = _load_pair_model(args.model_b, args.epsilon) if args.model_b else None
    config = ExperimentConfig(
        experiment=args.experiment,
        process=args.kind,
        grid=_grid(args),
        alpha=args.alpha,
        B=_resolve_B(args),
        sizes=sizes,
        reps=args.reps,
        seed=args.seed,
        jobs=_resolve_jobs(args),
        pair_model=pm,
        pair_model_b=pm_b,
        truth_pairs=args.truth_pairs,
        np_n=args.np_n,
        np_p=args.np_p,
        np_c=args.np_c,
    )
    summary = run_experiment(config)
    prefix = _out_prefix(args.out)
    write_json(prefix + ".json", summary, force=args.force)
    _write_experiment_plot(prefix, summary, args.force)
    rates = ", ".join(f"{n}:{r:g}" for n, r in zip(summary["sizes"], summary["rates"]))
    print(f"wrote {prefix}.json, {prefix}.svg, {prefix}.csv ({rates})")
    return 0


def _experiment_csv(summary: dict) -> str:
    has_np = "p0" in summary
    header = "size,rate,ci_low,ci_high" + (",p0,p1" if has_np else "")
    lines = [header]
    for i, n in enumerate(summary["sizes"]):
        row = [
            repr(n),
            repr(summary["rates"][i]),
            repr(summary["ci_low"][i]),
            repr(summary["ci_high"][i]),
        ]
        if has_np:
            row += [repr(summary["p0"][i]), repr(summary["p1"][i])]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def _write_experiment_plot(prefix: str, summary: dict, force: bool) -> None:
    ylabel = "coverage" if summary["experiment"] == "coverage" else "rejection rate"
    svg = rates_svg(
        summary["sizes"],
        summary["rates"],
        summary["ci_low"],
        summary["ci_high"],
        xlabel="sample size",
        title=f"{summary['experiment']} ({summary['process']}), {ylabel} with 95% CIs",
    )
    _write_text(prefix + ".svg", svg, force)
    _write_text(prefix + ".csv", _experiment_csv(summary), force)


def _cmd_plot(args) -> int:
    data = read_json(args.input)
    kind = data.get("kind")
    if kind == "band":
        try:
            import numpy as np

            mean = np.asarray(data["mean"], dtype=float)
            half = float(data["half_width"])
            times = data["grid"]
            svg = band_svg(times, mean, mean - half, mean + half,
                           title=f"mean process with {100 * (1 - data['alpha']):g}% band")
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed band JSON: {exc}") from exc
    elif kind == "experiment":
        try:
            svg = rates_svg(
                data["sizes"], data["rates"], data["ci_low"], data["ci_high"],
                xlabel="sample size",
                title=f"{data['experiment']} ({data['process']})",
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed experiment JSON: {exc}") from exc
    else:
        raise ValidationError(f"cannot plot kind {kind!r} (expected band or experiment)")
    _write_text(args.out, svg, args.force)
    print(f"wrote {args.out}")
    return 0


def _write_text(path: str, text: str, force: bool) -> None:
    check_overwrite(path, force)
    with open(path, "w", newline="\n") as fh:
        fh.write(text)


if __name__ == "__main__":
    sys.exit(main())
