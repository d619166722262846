"""Extended persistence diagrams of vertex-filtered graphs.

A real-valued function f on the vertices of a graph G induces sublevel
subgraphs (vertices with f(v) <= alpha, edges with both endpoints
present) and superlevel subgraphs.  Extended persistence tracks four
kinds of features across the two families:

* ord0: components born and dying in the sublevel family (downward branches)
* rel1: components of the superlevel family (upward branches)
* ext0: one point per connected component, coordinates (min f, max f)
* ext1: one point per independent loop

All four are computed at once by ordinary persistence of a cone over G:
phase 1 inserts the vertices and edges of G by ascending level, phase 2
inserts the cone vertex omega, a cone edge (v, omega) per vertex and a
cone triangle (u, v, omega) per edge by descending level.  Boundary
matrix reduction over GF(2) pairs each creator simplex with a destroyer;
the classification of the pair decides the diagram and the coordinates
are (level(creator), level(destroyer)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import ValidationError
from .graphs import WeightedGraph

# A vertex function is just a length-n vector of reals.
VertexFunction = np.ndarray

Point = tuple[float, float]


@dataclass(frozen=True)
class PersistenceDiagram:
    """Finite multiset of (birth, death) points, stored sorted."""

    points: tuple[Point, ...]

    @classmethod
    def from_points(cls, points: Iterable[Iterable[float]]) -> "PersistenceDiagram":
        canon = []
        for p in points:
            b, d = p
            b, d = float(b), float(d)
            if not (np.isfinite(b) and np.isfinite(d)):
                raise ValidationError(f"non-finite diagram point ({b}, {d})")
            canon.append((b, d))
        canon.sort()
        return cls(points=tuple(canon))

    def __len__(self) -> int:
        return len(self.points)


EMPTY_DIAGRAM = PersistenceDiagram(points=())


@dataclass(frozen=True)
class ExtendedDiagramSet:
    """The four extended persistence diagrams of one filtered graph."""

    ord0: PersistenceDiagram
    rel1: PersistenceDiagram
    ext0: PersistenceDiagram
    ext1: PersistenceDiagram

    def as_dict(self) -> dict:
        return {
            "ord0": [[b, d] for b, d in self.ord0.points],
            "rel1": [[b, d] for b, d in self.rel1.points],
            "ext0": [[b, d] for b, d in self.ext0.points],
            "ext1": [[b, d] for b, d in self.ext1.points],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ExtendedDiagramSet":
        try:
            parts = {k: PersistenceDiagram.from_points(data[k]) for k in
                     ("ord0", "rel1", "ext0", "ext1")}
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed diagram object: {exc}") from exc
        return cls(**parts)


class ConeComplex:
    """Reusable filtration machinery for one graph.

    Building the simplex bookkeeping is independent of the vertex
    function, so callers evaluating many functions on the same graph
    (one per diffusion time) construct this once and call
    :meth:`diagrams` repeatedly.

    Simplex ids: vertices 0..n-1, G-edges n..n+e-1 (lexicographic),
    cone edges n+e..2n+e-1, cone triangles 2n+e..2n+2e-1.  The cone
    vertex omega sits at filtration position 0 and has no id.
    """

    def __init__(self, g: WeightedGraph):
        n, e = g.n, g.num_edges
        self.n = n
        self.e = e
        self.edge_u = np.array([ed[0] for ed in g.edges], dtype=np.int64)
        self.edge_v = np.array([ed[1] for ed in g.edges], dtype=np.int64)
        # Static sort fields: phase, dimension, index tiebreak.
        self._phase = np.concatenate(
            [np.zeros(n + e, dtype=np.int8), np.ones(n + e, dtype=np.int8)]
        )
        self._dim = np.concatenate(
            [
                np.zeros(n, dtype=np.int8),
                np.ones(e, dtype=np.int8),
                np.ones(n, dtype=np.int8),
                np.full(e, 2, dtype=np.int8),
            ]
        )
        self._tie = np.concatenate(
            [np.arange(n), np.arange(e), np.arange(n), np.arange(e)]
        )
        self._eu = self.edge_u.tolist()
        self._ev = self.edge_v.tolist()

    def diagrams(self, f: VertexFunction, drop_zero: bool = True) -> ExtendedDiagramSet:
        """Extended persistence of (G, f) via cone reduction.

        Args:
            f: vertex function, one finite real per vertex.
            drop_zero: discard pairs with equal creator/destroyer level
                (the default everywhere; they never affect bottleneck
                distances).
        """
        n, e = self.n, self.e
        f = np.asarray(f, dtype=float)
        if f.shape != (n,):
            raise ValidationError(f"vertex function has shape {f.shape}, graph has n={n}")
        if not np.isfinite(f).all():
            raise ValidationError("vertex function must be finite")

        if e:
            max_f = np.maximum(f[self.edge_u], f[self.edge_v])
            min_f = np.minimum(f[self.edge_u], f[self.edge_v])
        else:
            max_f = min_f = np.empty(0)
        # Phase-1 simplices ascend by level, phase-2 descend; ties go to
        # the lower dimension, then the index.
        signed = np.concatenate([f, max_f, -f, -min_f])
        order = np.lexsort((self._tie, self._dim, signed, self._phase)).tolist()

        total = 2 * n + 2 * e + 1
        pos = [0] * (2 * n + 2 * e)
        for i, sid in enumerate(order):
            pos[sid] = i + 1  # omega occupies position 0

        cols = [0] * total
        low_owner = [-1] * total
        pairs: list[tuple[int, int]] = []
        eu, ev = self._eu, self._ev
        n_e = n + e
        nn_e = 2 * n + e

        for i, sid in enumerate(order):
            if sid < n:
                continue  # vertices create
            if sid < n_e:
                j = sid - n
                b = (1 << pos[eu[j]]) | (1 << pos[ev[j]])
            elif sid < nn_e:
                b = (1 << pos[sid - n_e]) | 1  # cone edge: base vertex and omega
            else:
                j = sid - nn_e
                b = (
                    (1 << pos[n + j])
                    | (1 << pos[n_e + eu[j]])
                    | (1 << pos[n_e + ev[j]])
                )
            p = i + 1
            while b:
                low = b.bit_length() - 1
                owner = low_owner[low]
                if owner < 0:
                    low_owner[low] = p
                    cols[p] = b
                    if low == 0:
                        raise RuntimeError("cone vertex paired; reduction is broken")
                    pairs.append((order[low - 1], sid))
                    break
                b ^= cols[owner]

        flist = f.tolist()
        maxl = max_f.tolist()
        minl = min_f.tolist()
        ord0: list[Point] = []
        rel1: list[Point] = []
        ext0: list[Point] = []
        ext1: list[Point] = []
        for c, d in pairs:
            if c < n:
                birth = flist[c]
                if d < n_e:
                    death = maxl[d - n]
                    target = ord0
                else:
                    death = flist[d - n_e]
                    target = ext0
            elif c < n_e:
                birth = maxl[c - n]
                death = minl[d - nn_e]
                target = ext1
            else:
                birth = flist[c - n_e]
                death = minl[d - nn_e]
                target = rel1
            if drop_zero and birth == death:
                continue
            target.append((birth, death))

        return ExtendedDiagramSet(
            ord0=PersistenceDiagram(tuple(sorted(ord0))),
            rel1=PersistenceDiagram(tuple(sorted(rel1))),
            ext0=PersistenceDiagram(tuple(sorted(ext0))),
            ext1=PersistenceDiagram(tuple(sorted(ext1))),
        )


def extended_persistence(
    g: WeightedGraph, f: VertexFunction, drop_zero: bool = True
) -> ExtendedDiagramSet:
    """Extended persistence diagrams of graph g filtered by f."""
    return ConeComplex(g).diagrams(f, drop_zero=drop_zero)
