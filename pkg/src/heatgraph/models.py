"""Seeded random graph models and pair distributions.

Three model families: Erdos-Renyi, a stochastic block model, and
geometric graphs on the unit disk or an annulus (edges between the
closest point pairs).  Weights are unweighted, i.i.d. uniform, or
exp(-rate * distance) for geometric models.

Sampling is deterministic given the generator handed in; datasets give
pair i the PCG64 stream keyed (seed, i) so generation order and worker
scheduling cannot change the result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .distances import GraphPair
from .errors import ValidationError
from .graphs import WeightedGraph, build_graph
from .streams import derive_rng

DISK = "disk"
ANNULUS = "annulus"


@dataclass(frozen=True)
class ERModel:
    """Every unordered pair is an edge independently with probability p."""

    n: int
    p: float

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError(f"ER model needs n >= 1, got {self.n}")
        if not (0.0 <= self.p <= 1.0):
            raise ValidationError(f"ER probability must be in [0,1], got {self.p}")


@dataclass(frozen=True)
class SBMModel:
    """Blocks of given sizes; edge {i,j} appears with prob p[block(i)][block(j)]."""

    block_sizes: tuple[int, ...]
    probs: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.block_sizes)
        object.__setattr__(self, "block_sizes", sizes)
        probs = tuple(tuple(float(x) for x in row) for row in self.probs)
        object.__setattr__(self, "probs", probs)
        k = len(sizes)
        if k == 0 or any(s < 1 for s in sizes):
            raise ValidationError("SBM block sizes must be positive")
        if len(probs) != k or any(len(row) != k for row in probs):
            raise ValidationError("SBM probability matrix must be KxK")
        for i in range(k):
            for j in range(k):
                if not (0.0 <= probs[i][j] <= 1.0):
                    raise ValidationError(f"SBM probability out of [0,1]: {probs[i][j]}")
                if probs[i][j] != probs[j][i]:
                    raise ValidationError("SBM probability matrix must be symmetric")

    @property
    def n(self) -> int:
        return sum(self.block_sizes)


@dataclass(frozen=True)
class GeometricModel:
    """Points on the unit disk or on an annulus; closest pairs become edges.

    ``size_n`` fixes the vertex count; ``poisson_mean`` draws it from a
    Poisson law instead (draws of 0 are resampled).  Exactly one of the
    two must be set.  The annulus has outer radius 1 and inner radius
    ``epsilon``; sampling is uniform on the disk (square-root radius
    law) with rejection below epsilon for the annulus.
    """

    domain: str
    edge_fraction: float
    size_n: int | None = None
    poisson_mean: float | None = None
    epsilon: float = 0.5

    def __post_init__(self):
        if self.domain not in (DISK, ANNULUS):
            raise ValidationError(f"domain must be '{DISK}' or '{ANNULUS}', got {self.domain!r}")
        if not (0.0 <= self.edge_fraction <= 1.0):
            raise ValidationError(f"edge fraction must be in [0,1], got {self.edge_fraction}")
        if (self.size_n is None) == (self.poisson_mean is None):
            raise ValidationError("set exactly one of size_n and poisson_mean")
        if self.size_n is not None and self.size_n < 1:
            raise ValidationError(f"need size_n >= 1, got {self.size_n}")
        if self.poisson_mean is not None and not self.poisson_mean > 0.0:
            raise ValidationError(f"need poisson_mean > 0, got {self.poisson_mean}")
        if self.domain == ANNULUS and not (0.0 < self.epsilon < 1.0):
            raise ValidationError(f"annulus inner radius must be in (0,1), got {self.epsilon}")


GraphModel = ERModel | SBMModel | GeometricModel


@dataclass(frozen=True)
class Unweighted:
    pass


@dataclass(frozen=True)
class UniformWeights:
    low: float = 0.0
    high: float = 2.0

    def __post_init__(self):
        if not (0.0 <= self.low < self.high):
            raise ValidationError(f"need 0 <= low < high, got ({self.low}, {self.high})")


@dataclass(frozen=True)
class ExpDecayWeights:
    rate: float = 2.0

    def __post_init__(self):
        if not self.rate > 0.0:
            raise ValidationError(f"decay rate must be positive, got {self.rate}")


WeightScheme = Unweighted | UniformWeights | ExpDecayWeights


@dataclass(frozen=True)
class PairModel:
    """Distribution over independent graph pairs."""

    model1: GraphModel
    model2: GraphModel
    weights: WeightScheme = field(default_factory=Unweighted)


def fixed_size(model: GraphModel) -> int | None:
    """Deterministic vertex count of the model, or None for random sizes."""
    if isinstance(model, ERModel):
        return model.n
    if isinstance(model, SBMModel):
        return model.n
    return model.size_n


def hkd_compatible(pm: PairModel) -> bool:
    """True iff both marginals have equal, deterministic sizes."""
    n1, n2 = fixed_size(pm.model1), fixed_size(pm.model2)
    return n1 is not None and n1 == n2


def sample_graph(model: GraphModel, weights: WeightScheme, rng: np.random.Generator) -> WeightedGraph:
    """Draw one graph from the model with the given weight scheme."""
    if isinstance(weights, ExpDecayWeights) and not isinstance(model, GeometricModel):
        raise ValidationError("exp_decay weights need endpoint distances: geometric models only")

    if isinstance(model, GeometricModel):
        pairs, dists, n = _geometric_edges(model, rng)
    else:
        pairs, n = _bernoulli_edges(model, rng)
        dists = None

    if isinstance(weights, Unweighted):
        edges = [(u, v, 1.0) for u, v in pairs]
        return build_graph(n, edges, w_min=1.0, w_max=1.0)
    if isinstance(weights, UniformWeights):
        w = rng.uniform(weights.low, weights.high, size=len(pairs))
        while np.any(w <= weights.low):
            bad = w <= weights.low  # uniform draws can hit the closed left end
            w[bad] = rng.uniform(weights.low, weights.high, size=int(bad.sum()))
        edges = [(u, v, float(wi)) for (u, v), wi in zip(pairs, w)]
        return build_graph(n, edges, w_min=weights.low, w_max=weights.high)
    # exp_decay: weight e^{-rate d}; the domain diameter is at most 2
    edges = [
        (u, v, float(math.exp(-weights.rate * d))) for (u, v), d in zip(pairs, dists)
    ]
    return build_graph(n, edges, w_min=math.exp(-2.0 * weights.rate), w_max=1.0)


def sample_pair(pm: PairModel, rng: np.random.Generator) -> GraphPair:
    """Two independent draws from the pair model."""
    g1 = sample_graph(pm.model1, pm.weights, rng)
    g2 = sample_graph(pm.model2, pm.weights, rng)
    return GraphPair(g1=g1, g2=g2)


def sample_dataset(pm: PairModel, N: int, seed: int) -> list[GraphPair]:
    """N i.i.d. pairs; pair i comes from the derived stream (seed, i)."""
    if N < 1:
        raise ValidationError(f"dataset size must be >= 1, got N={N}")
    return [sample_pair(pm, derive_rng(seed, i)) for i in range(N)]


def np_sweep_params(N: int, C: float, p: float) -> tuple[float, float]:
    """Edge probabilities (p, p + C log(N)/sqrt(N)) for the detection sweep."""
    if N < 2:
        raise ValidationError(f"sweep needs N >= 2, got {N}")
    p1 = p + C * math.log(N) / math.sqrt(N)
    return p, min(1.0, max(0.0, p1))


def _pair_index(n: int) -> tuple[np.ndarray, np.ndarray]:
    return np.triu_indices(n, k=1)


def _bernoulli_edges(model: ERModel | SBMModel, rng) -> tuple[list[tuple[int, int]], int]:
    if isinstance(model, ERModel):
        n = model.n
        iu, ju = _pair_index(n)
        probs = np.full(iu.shape[0], model.p)
    else:
        n = model.n
        labels = np.repeat(np.arange(len(model.block_sizes)), model.block_sizes)
        iu, ju = _pair_index(n)
        pmat = np.asarray(model.probs)
        probs = pmat[labels[iu], labels[ju]]
    mask = rng.random(iu.shape[0]) < probs
    return list(zip(iu[mask].tolist(), ju[mask].tolist())), n


def _geometric_edges(model: GeometricModel, rng) -> tuple[list, np.ndarray, int]:
    if model.size_n is not None:
        n = model.size_n
    else:
        n = 0
        while n == 0:
            n = int(rng.poisson(model.poisson_mean))
    pts = np.array([_draw_point(model, rng) for _ in range(n)])
    iu, ju = _pair_index(n)
    if iu.shape[0] == 0:
        return [], np.empty(0), n
    d = np.hypot(pts[iu, 0] - pts[ju, 0], pts[iu, 1] - pts[ju, 1])
    k = int(model.edge_fraction * iu.shape[0])
    chosen = np.sort(np.argsort(d, kind="stable")[:k])  # ties fall back to pair order
    pairs = list(zip(iu[chosen].tolist(), ju[chosen].tolist()))
    return pairs, d[chosen], n


def _draw_point(model: GeometricModel, rng) -> tuple[float, float]:
    while True:
        r = math.sqrt(rng.random())
        theta = 2.0 * math.pi * rng.random()
        if model.domain == DISK or r >= model.epsilon:
            return r * math.cos(theta), r * math.sin(theta)


# --- config JSON mirror -----------------------------------------------------


def model_to_dict(model: GraphModel) -> dict:
    if isinstance(model, ERModel):
        return {"type": "er", "n": model.n, "p": model.p}
    if isinstance(model, SBMModel):
        return {
            "type": "sbm",
            "block_sizes": list(model.block_sizes),
            "probs": [list(row) for row in model.probs],
        }
    size = {"fixed": model.size_n} if model.size_n is not None else {"poisson": model.poisson_mean}
    return {
        "type": "geometric",
        "domain": model.domain,
        "epsilon": model.epsilon,
        "size": size,
        "edge_fraction": model.edge_fraction,
    }


def model_from_dict(data: dict) -> GraphModel:
    try:
        kind = data["type"]
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"model config needs a 'type' field: {exc}") from exc
    if kind == "er":
        return ERModel(n=int(data["n"]), p=float(data["p"]))
    if kind == "sbm":
        return SBMModel(
            block_sizes=tuple(data["block_sizes"]),
            probs=tuple(tuple(row) for row in data["probs"]),
        )
    if kind == "geometric":
        size = data.get("size", {})
        return GeometricModel(
            domain=data["domain"],
            edge_fraction=float(data["edge_fraction"]),
            size_n=int(size["fixed"]) if "fixed" in size else None,
            poisson_mean=float(size["poisson"]) if "poisson" in size else None,
            epsilon=float(data.get("epsilon", 0.5)),
        )
    raise ValidationError(f"unknown model type {kind!r}")


def weights_to_dict(weights: WeightScheme) -> dict:
    if isinstance(weights, Unweighted):
        return {"type": "unweighted"}
    if isinstance(weights, UniformWeights):
        return {"type": "uniform", "low": weights.low, "high": weights.high}
    return {"type": "exp_decay", "rate": weights.rate}


def weights_from_dict(data: dict) -> WeightScheme:
    kind = data.get("type", "unweighted")
    if kind == "unweighted":
        return Unweighted()
    if kind == "uniform":
        return UniformWeights(low=float(data.get("low", 0.0)), high=float(data.get("high", 2.0)))
    if kind == "exp_decay":
        return ExpDecayWeights(rate=float(data.get("rate", 2.0)))
    raise ValidationError(f"unknown weight scheme {kind!r}")


def pair_model_to_dict(pm: PairModel) -> dict:
    return {
        "model1": model_to_dict(pm.model1),
        "model2": model_to_dict(pm.model2),
        "weights": weights_to_dict(pm.weights),
    }


def pair_model_from_dict(data: dict) -> PairModel:
    try:
        m1 = data["model1"]
        m2 = data["model2"]
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"pair model config needs model1/model2: {exc}") from exc
    return PairModel(
        model1=model_from_dict(m1),
        model2=model_from_dict(m2),
        weights=weights_from_dict(data.get("weights", {"type": "unweighted"})),
    )
