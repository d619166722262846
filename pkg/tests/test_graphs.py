import numpy as np
import pytest

from heatgraph import (
    ValidationError,
    build_graph,
    connected_components,
    graph_from_dict,
    graph_to_dict,
    laplacian,
)


def test_edgeless_graph():
    g = build_graph(2, [])
    assert g.n == 2
    assert g.edges == ()
    assert (g.w_min, g.w_max) == (1.0, 1.0)
    assert np.array_equal(laplacian(g), np.zeros((2, 2)))


def test_k2():
    g = build_graph(2, [(0, 1, 1)])
    assert np.array_equal(laplacian(g), [[1.0, -1.0], [-1.0, 1.0]])


def test_c3_laplacian():
    g = build_graph(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    L = laplacian(g)
    assert np.array_equal(np.diag(L), [2.0, 2.0, 2.0])
    off = L[~np.eye(3, dtype=bool)]
    assert np.array_equal(off, -np.ones(6))


def test_canonicalization_sorts_and_orients_edges():
    g = build_graph(4, [(3, 1, 2.0), (2, 0, 0.5)])
    assert g.edges == ((0, 2, 0.5), (1, 3, 2.0))
    assert (g.w_min, g.w_max) == (0.5, 2.0)


def test_weighted_laplacian_row_sums_zero():
    rng = np.random.default_rng(0)
    for _ in range(20):
        n = int(rng.integers(2, 9))
        edges = [
            (u, v, float(rng.uniform(0.1, 3.0)))
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.5
        ]
        L = laplacian(build_graph(n, edges))
        assert np.allclose(L.sum(axis=1), 0.0, atol=1e-12)
        assert np.array_equal(L, L.T)


@pytest.mark.parametrize(
    "n,edges",
    [
        (3, [(0, 0, 1.0)]),
        (3, [(0, 3, 1.0)]),
        (3, [(-1, 2, 1.0)]),
        (3, [(0, 1, 1.0), (1, 0, 2.0)]),
        (3, [(0, 1, 1.0), (0, 1, 1.0)]),
        (3, [(0, 1, 0.0)]),
        (3, [(0, 1, -0.5)]),
        (0, []),
    ],
)
def test_build_graph_rejections(n, edges):
    with pytest.raises(ValidationError):
        build_graph(n, edges)


def test_declared_bounds_enforced():
    with pytest.raises(ValidationError):
        build_graph(2, [(0, 1, 3.0)], w_min=1.0, w_max=2.0)
    with pytest.raises(ValidationError):
        build_graph(2, [(0, 1, 0.5)], w_min=1.0, w_max=2.0)
    g = build_graph(2, [(0, 1, 1.5)], w_min=0.0, w_max=2.0)
    assert (g.w_min, g.w_max) == (0.0, 2.0)


def test_connected_components():
    g = build_graph(5, [(0, 1, 1), (1, 2, 1), (3, 4, 1)])
    assert connected_components(g) == [[0, 1, 2], [3, 4]]
    assert connected_components(build_graph(3, [])) == [[0], [1], [2]]
    assert connected_components(build_graph(1, [])) == [[0]]


def test_graph_dict_round_trip():
    g = build_graph(4, [(0, 1, 0.5), (2, 3, 1.5)], w_min=0.5, w_max=1.5)
    d = graph_to_dict(g)
    assert d == {"n": 4, "edges": [[0, 1, 0.5], [2, 3, 1.5]]}
    g2 = graph_from_dict(d)
    assert g2.n == g.n and g2.edges == g.edges


def test_num_edges():
    assert build_graph(3, [(0, 1, 1), (1, 2, 1)]).num_edges == 2
    assert build_graph(3, []).num_edges == 0
