import numpy as np
import pytest

from corpus import model_corpus, random_graph
from heatgraph import (
    ValidationError,
    build_graph,
    connected_components,
    heat_kernel,
    hks,
    hks_matrix,
    laplacian,
    laplacian_eigen_bounds,
    spectral_decompose,
)

INVSQRT2 = 1.0 / np.sqrt(2.0)


def decompose(g):
    return spectral_decompose(laplacian(g))


def test_k2_decomposition():
    dec = decompose(build_graph(2, [(0, 1, 1)]))
    assert np.allclose(dec.eigenvalues, [0.0, 2.0], atol=1e-12)
    assert np.array_equal(dec.eigenvectors[:, 0], [INVSQRT2, INVSQRT2])
    assert np.allclose(np.abs(dec.eigenvectors[:, 1]), [INVSQRT2, INVSQRT2], atol=1e-12)
    assert np.isclose(dec.eigenvectors[:, 1].sum(), 0.0, atol=1e-12)


def test_zero_matrix_decomposition():
    dec = spectral_decompose(np.zeros((3, 3)))
    assert np.array_equal(dec.eigenvalues, np.zeros(3))
    assert np.allclose(dec.eigenvectors[:, 0], 1.0 / np.sqrt(3.0))
    assert np.allclose(dec.eigenvectors.T @ dec.eigenvectors, np.eye(3), atol=1e-9)


def test_c3_spectrum():
    dec = decompose(build_graph(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)]))
    assert np.allclose(dec.eigenvalues, [0.0, 3.0, 3.0], atol=1e-9)


def test_constant_eigenvector_is_exact():
    rng = np.random.default_rng(7)
    for _ in range(25):
        g = random_graph(rng, n_max=12)
        dec = decompose(g)
        assert np.array_equal(dec.eigenvectors[:, 0], np.full(g.n, 1.0 / np.sqrt(g.n)))


def test_disconnected_kernel_dimension_and_reconstruction():
    rng = np.random.default_rng(11)
    for _ in range(25):
        a = random_graph(rng, n_min=2, n_max=5)
        b = random_graph(rng, n_min=2, n_max=5)
        edges = list(a.edges) + [(u + a.n, v + a.n, w) for u, v, w in b.edges]
        g = build_graph(a.n + b.n, edges)
        L = laplacian(g)
        dec = spectral_decompose(L)
        k = len(connected_components(g))
        assert np.count_nonzero(dec.eigenvalues == 0.0) == k
        recon = dec.eigenvectors @ np.diag(dec.eigenvalues) @ dec.eigenvectors.T
        assert np.max(np.abs(recon - L)) < 1e-8
        assert np.allclose(dec.eigenvectors.T @ dec.eigenvectors, np.eye(g.n), atol=1e-9)


def test_reconstruction_on_random_graphs():
    rng = np.random.default_rng(3)
    for _ in range(100):
        g = random_graph(rng, n_max=20)
        L = laplacian(g)
        dec = spectral_decompose(L)
        recon = (dec.eigenvectors * dec.eigenvalues) @ dec.eigenvectors.T
        assert np.max(np.abs(recon - L)) < 1e-8


def test_non_symmetric_rejected():
    with pytest.raises(ValidationError):
        spectral_decompose(np.array([[1.0, 0.5], [0.0, 1.0]]))


def test_indefinite_matrix_rejected():
    with pytest.raises(ValidationError):
        spectral_decompose(np.array([[0.0, 1.0], [1.0, 0.0]]))


def test_heat_kernel_identity_at_zero():
    g = build_graph(4, [(0, 1, 1), (1, 2, 0.5), (2, 3, 2)])
    assert np.allclose(heat_kernel(decompose(g), 0.0), np.eye(4), atol=1e-12)


def test_heat_kernel_k2_closed_form():
    dec = decompose(build_graph(2, [(0, 1, 1)]))
    for t in (0.1, 0.5, 1.3):
        a = (1 + np.exp(-2 * t)) / 2
        b = (1 - np.exp(-2 * t)) / 2
        assert np.allclose(heat_kernel(dec, t), [[a, b], [b, a]], atol=1e-12)


def test_heat_kernel_edgeless_identity():
    dec = spectral_decompose(np.zeros((5, 5)))
    assert np.allclose(heat_kernel(dec, 3.7), np.eye(5), atol=1e-12)


def test_heat_kernel_laws_on_random_graphs():
    rng = np.random.default_rng(5)
    for _ in range(30):
        g = random_graph(rng, n_max=12)
        dec = decompose(g)
        t, s = rng.uniform(0.0, 1.0, size=2)
        Kt, Ks, Kts = heat_kernel(dec, t), heat_kernel(dec, s), heat_kernel(dec, t + s)
        assert np.max(np.abs(Kt @ Ks - Kts)) < 1e-8
        assert np.allclose(Kt.sum(axis=0), 1.0, atol=1e-9)
        assert Kt.min() >= -1e-12 and Kt.max() <= 1 + 1e-12


def test_heat_kernel_negative_time_rejected():
    dec = decompose(build_graph(2, [(0, 1, 1)]))
    with pytest.raises(ValidationError):
        heat_kernel(dec, -0.1)
    with pytest.raises(ValidationError):
        hks(dec, -0.1)


def test_hks_values():
    g = build_graph(2, [(0, 1, 1)])
    dec = decompose(g)
    assert np.allclose(hks(dec, 0.0).values, 1.0, atol=1e-12)
    for t in (0.2, 1.0):
        assert np.allclose(hks(dec, t).values, (1 + np.exp(-2 * t)) / 2, atol=1e-12)
    assert np.allclose(hks(dec, 80.0).values, 0.5, atol=1e-9)


def test_hks_matches_kernel_diagonal_and_is_monotone():
    rng = np.random.default_rng(9)
    grid = np.linspace(0.0, 2.0, 60)
    for _ in range(15):
        g = random_graph(rng, n_max=10)
        dec = decompose(g)
        values = hks_matrix(dec, grid)
        assert values.shape == (g.n, grid.size)
        for j in (0, 17, 59):
            k = heat_kernel(dec, grid[j])
            assert np.max(np.abs(values[:, j] - np.diag(k))) < 1e-9
        assert np.all(np.diff(values, axis=1) <= 1e-9)
        assert values.min() >= -1e-12 and values.max() <= 1 + 1e-12


def test_eigen_bounds_examples():
    assert laplacian_eigen_bounds(2, 1, 1) == (2.0, 2.0)
    lo, hi = laplacian_eigen_bounds(50, 1, 1)
    assert np.isclose(lo, 0.0032) and hi == 50.0
    assert laplacian_eigen_bounds(10, 0, 2) == (0.0, 20.0)


def test_eigenvalue_bounds_across_models():
    for g, _, _ in model_corpus(60, seed=21):
        dec = spectral_decompose(laplacian(g))
        lo, hi = laplacian_eigen_bounds(g.n, g.w_min, g.w_max)
        positive = dec.eigenvalues[dec.eigenvalues > 1e-8]
        if positive.size:
            assert positive.min() >= lo - 1e-9
            assert positive.max() <= hi + 1e-9
