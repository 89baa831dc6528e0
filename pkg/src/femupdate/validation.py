"""Small input-validation helpers used across the package."""

from __future__ import annotations

import numpy as np

from .exceptions import CovarianceError, DimensionError


def as_vector(values, name: str = "vector", size: int | None = None) -> np.ndarray:
    """Coerce to a 1-D float array, optionally checking its length."""
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        raise DimensionError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if size is not None and arr.shape[0] != size:
        raise DimensionError(f"{name} must have length {size}, got {arr.shape[0]}")
    if not np.all(np.isfinite(arr)):
        raise DimensionError(f"{name} contains non-finite entries")
    return arr


def as_square_matrix(values, name: str = "matrix", size: int | None = None) -> np.ndarray:
    """Coerce to a square 2-D float array."""
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"{name} must be square, got shape {arr.shape}")
    if size is not None and arr.shape[0] != size:
        raise DimensionError(f"{name} must be {size}x{size}, got {arr.shape[0]}x{arr.shape[1]}")
    if not np.all(np.isfinite(arr)):
        raise DimensionError(f"{name} contains non-finite entries")
    return arr


def spd_cholesky(matrix: np.ndarray, name: str = "covariance") -> np.ndarray:
    """Lower Cholesky factor of a symmetric positive definite matrix.

    Raises CovarianceError when the matrix is asymmetric or not PD.
    """
    sym_err = np.abs(matrix - matrix.T).max(initial=0.0)
    scale = np.abs(matrix).max(initial=0.0)
    if sym_err > 1e-10 * max(scale, 1e-300):
        raise CovarianceError(f"{name} is not symmetric (max |A - A^T| = {sym_err:g})")
    try:
        return np.linalg.cholesky(matrix)
    except np.linalg.LinAlgError as exc:
        raise CovarianceError(f"{name} is not positive definite") from exc
