"""Undirected weighted graphs and their combinatorial Laplacians."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ValidationError

Edge = tuple[int, int, float]


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph with positive edge weights.

    Edges are stored as ``(u, v, w)`` with ``u < v`` in lexicographic
    order.  ``w_min``/``w_max`` record the declared weight range of the
    generating model when one exists, otherwise the observed range; they
    feed the Laplacian eigenvalue bounds and the Lipschitz constants.
    """

    n: int
    edges: tuple[Edge, ...]
    w_min: float
    w_max: float

    @property
    def num_edges(self) -> int:
        return len(self.edges)


def build_graph(
    n: int,
    edges: Iterable[Sequence],
    w_min: float | None = None,
    w_max: float | None = None,
) -> WeightedGraph:
    """Validate and canonicalize raw edge data into a WeightedGraph.

    Args:
        n: number of vertices, at least 1.
        edges: iterable of ``(u, v)`` or ``(u, v, w)``; missing weights
            default to 1.0.  Endpoints may come in either order.
        w_min, w_max: declared weight bounds.  When omitted they are
            inferred from the data (1.0 for an edgeless graph).

    Raises:
        ValidationError: on self loops, duplicate edges, endpoints out of
            range, nonpositive weights, or weights outside declared bounds.
    """
    if n < 1:
        raise ValidationError(f"graph needs at least one vertex, got n={n}")
    canon: list[Edge] = []
    seen: set[tuple[int, int]] = set()
    for item in edges:
        if len(item) == 2:
            u, v = item
            w = 1.0
        elif len(item) == 3:
            u, v, w = item
        else:
            raise ValidationError(f"edge entries must be (u, v[, w]), got {item!r}")
        u, v, w = int(u), int(v), float(w)
        if u > v:
            u, v = v, u
        if u == v:
            raise ValidationError(f"self loop at vertex {u}")
        if not (0 <= u and v < n):
            raise ValidationError(f"edge ({u}, {v}) out of range for n={n}")
        if (u, v) in seen:
            raise ValidationError(f"duplicate edge ({u}, {v})")
        if not w > 0.0:
            raise ValidationError(f"edge ({u}, {v}) has nonpositive weight {w}")
        seen.add((u, v))
        canon.append((u, v, w))
    canon.sort(key=lambda e: (e[0], e[1]))

    if canon:
        observed_lo = min(e[2] for e in canon)
        observed_hi = max(e[2] for e in canon)
    else:
        observed_lo = observed_hi = 1.0
    lo = observed_lo if w_min is None else float(w_min)
    hi = observed_hi if w_max is None else float(w_max)
    if lo > hi:
        raise ValidationError(f"w_min={lo} exceeds w_max={hi}")
    for u, v, w in canon:
        if w > hi or (lo > 0.0 and w < lo):
            raise ValidationError(
                f"edge ({u}, {v}) weight {w} outside declared range [{lo}, {hi}]"
            )
    return WeightedGraph(n=n, edges=tuple(canon), w_min=lo, w_max=hi)


def laplacian(g: WeightedGraph) -> np.ndarray:
    """Dense combinatorial Laplacian L = D - W."""
    L = np.zeros((g.n, g.n))
    for u, v, w in g.edges:
        L[u, v] -= w
        L[v, u] -= w
        L[u, u] += w
        L[v, v] += w
    return L


def connected_components(g: WeightedGraph) -> list[list[int]]:
    """Vertex lists of the connected components, each sorted ascending."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def graph_to_dict(g: WeightedGraph) -> dict:
    """JSON-ready mapping ``{"n": ..., "edges": [[u, v, w], ...]}``."""
    return {"n": g.n, "edges": [[u, v, w] for u, v, w in g.edges]}


def graph_from_dict(data: dict) -> WeightedGraph:
    """Inverse of :func:`graph_to_dict`, with full validation."""
    try:
        n = int(data["n"])
        edges = data["edges"]
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed graph object: {exc}") from exc
    return build_graph(n, edges)
