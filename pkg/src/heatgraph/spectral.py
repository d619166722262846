"""Laplacian eigendecomposition, heat kernel, and heat kernel signature.

The eigenbasis convention matters throughout the package: eigenvalues are
sorted ascending, and the first eigenvector is pinned to the constant
vector with entries 1/sqrt(n).  For disconnected graphs the zero
eigenspace has dimension > 1, so the computed kernel basis is rotated so
that its first vector is exactly the constant one and the remainder is
re-orthonormalized inside the kernel.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalError, ValidationError

# Eigenvalues below this are treated as the Laplacian kernel.  The value
# sits far above solver residuals and far below 8*w_min/n^2 at the graph
# sizes used in experiments with w_min >= 1.
ZERO_EIGENVALUE_THRESHOLD = 1e-08

_SYMMETRY_TOL = 1e-10
_RECONSTRUCTION_TOL = 1e-08


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenpairs of a combinatorial Laplacian, ascending by eigenvalue.

    ``eigenvectors[:, k]`` is the eigenvector of ``eigenvalues[k]``; the
    column 0 is exactly the constant vector.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]


@dataclass(frozen=True)
class HKSVector:
    """Heat kernel signature at one diffusion time: the kernel diagonal."""

    t: float
    values: np.ndarray


def _freeze(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def spectral_decompose(L: np.ndarray) -> SpectralDecomposition:
    """Eigendecompose a Laplacian with the constant-first-vector convention.

    Args:
        L: symmetric positive semidefinite matrix whose kernel contains
            the constant vector (any combinatorial Laplacian qualifies).

    Raises:
        ValidationError: non-symmetric input, negative spectrum, or a
            kernel that does not contain the constant vector.
        NumericalError: eigensolver failure or reconstruction residual
            above tolerance.
    """
    L = np.asarray(L, dtype=float)
    if L.ndim != 2 or L.shape[0] != L.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {L.shape}")
    n = L.shape[0]
    scale = max(1.0, float(np.abs(L).max()))
    if float(np.abs(L - L.T).max()) > _SYMMETRY_TOL * scale:
        raise ValidationError("matrix is not symmetric")

    try:
        lam, phi = np.linalg.eigh(L)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver did not converge: {exc}") from exc

    if lam[0] < -1e-09 * scale:
        raise ValidationError(f"matrix is not PSD within tolerance (lambda_min={lam[0]})")
    kernel_dim = int(np.searchsorted(lam, ZERO_EIGENVALUE_THRESHOLD))
    if kernel_dim == 0:
        raise ValidationError("no zero eigenvalue: input is not a graph Laplacian")
    lam = lam.copy()
    lam[:kernel_dim] = 0.0

    constant = np.full(n, 1.0 / np.sqrt(n))
    kernel = phi[:, :kernel_dim]
    coeffs = kernel.T @ constant
    if abs(float(coeffs @ coeffs) - 1.0) > 1e-08:
        raise ValidationError("constant vector is not in the numerical kernel")
    if kernel_dim == 1:
        phi = phi.copy()
        phi[:, 0] = constant
    else:
        # Rotate inside the kernel so the first basis vector is the
        # constant one; any orthonormal completion of `coeffs` works.
        basis = np.eye(kernel_dim)
        basis[:, 0] = coeffs
        q, _ = np.linalg.qr(basis)
        if float(q[:, 0] @ coeffs) < 0.0:
            q[:, 0] = -q[:, 0]
        rotated = kernel @ q
        rotated[:, 0] = constant
        phi = phi.copy()
        phi[:, :kernel_dim] = rotated

    residual = float(np.abs((phi * lam) @ phi.T - L).max())
    if residual > _RECONSTRUCTION_TOL * scale:
        raise NumericalError(
            f"reconstruction residual {residual:.3e} exceeds tolerance "
            f"{_RECONSTRUCTION_TOL * scale:.3e}"
        )
    return SpectralDecomposition(eigenvalues=_freeze(lam), eigenvectors=_freeze(phi))


def heat_kernel(dec: SpectralDecomposition, t: float) -> np.ndarray:
    """Heat kernel exp(-t L) assembled from the eigenpairs.

    Symmetric, entries in [-1e-12, 1 + 1e-12], columns summing to 1
    within 1e-9 (heat conservation).
    """
    t = _check_time(t)
    decay = np.exp(-t * dec.eigenvalues)
    H = (dec.eigenvectors * decay) @ dec.eigenvectors.T
    return (H + H.T) / 2.0


def hks(dec: SpectralDecomposition, t: float) -> HKSVector:
    """Heat kernel signature h_t(i) = sum_k exp(-t lambda_k) phi_k(i)^2."""
    t = _check_time(t)
    values = np.square(dec.eigenvectors) @ np.exp(-t * dec.eigenvalues)
    return HKSVector(t=t, values=_freeze(values))


def hks_matrix(dec: SpectralDecomposition, times: np.ndarray) -> np.ndarray:
    """Signatures for many times at once; column j is hks at times[j]."""
    times = np.asarray(times, dtype=float)
    if times.size and float(times.min()) < 0.0:
        raise ValidationError("diffusion times must be nonnegative")
    decay = np.exp(-np.outer(dec.eigenvalues, times))
    return np.square(dec.eigenvectors) @ decay


def laplacian_eigen_bounds(n: int, w_min: float, w_max: float) -> tuple[float, float]:
    """Range [8 w_min/n^2, n w_max] containing every positive eigenvalue."""
    if n < 1:
        raise ValidationError(f"need n >= 1, got {n}")
    if not (0.0 <= w_min <= w_max):
        raise ValidationError(f"need 0 <= w_min <= w_max, got ({w_min}, {w_max})")
    return 8.0 * w_min / float(n * n), float(n) * w_max


def _check_time(t: float) -> float:
    t = float(t)
    if t < 0.0:
        raise ValidationError(f"diffusion time must be nonnegative, got {t}")
    return t
