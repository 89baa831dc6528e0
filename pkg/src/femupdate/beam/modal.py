"""Generalized eigenvalue solve for natural frequencies and mode shapes."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ..exceptions import DegenerateModelError, DimensionError, NumericalError

#: frequencies below this are treated as rigid-body motion of a free structure
RIGID_THRESHOLD_HZ = 1e-3


@dataclass(frozen=True, eq=False)
class ModalResult:
    """Ascending natural frequencies (Hz) with mass-normalized mode vectors.

    ``modes[:, k]`` is the eigenvector of ``frequencies[k]``; each satisfies
    v^T M v = 1 and K v = (2 pi f)^2 M v for the matrices it was solved from.
    """

    frequencies: np.ndarray
    modes: np.ndarray

    @property
    def n_modes(self) -> int:
        return len(self.frequencies)

    def n_rigid(self, threshold_hz: float = RIGID_THRESHOLD_HZ) -> int:
        return int(np.sum(self.frequencies < threshold_hz))

    def elastic(self, threshold_hz: float = RIGID_THRESHOLD_HZ) -> "ModalResult":
        """Drop rigid-body modes of an unconstrained structure."""
        keep = self.frequencies >= threshold_hz
        return ModalResult(self.frequencies[keep], self.modes[:, keep])


def modal_solve(K: np.ndarray, M: np.ndarray, n_modes: int) -> ModalResult:
    """Lowest ``n_modes`` solutions of K v = (2 pi f)^2 M v.

    Frequencies come back sorted ascending and non-negative (tiny negative
    rigid-body eigenvalues are clipped to zero).  Mode signs are fixed by
    making the largest-magnitude entry positive.
    """
    K = np.asarray(K, dtype=float)
    M = np.asarray(M, dtype=float)
    if K.shape != M.shape or K.ndim != 2 or K.shape[0] != K.shape[1]:
        raise DimensionError(f"stiffness/mass shapes disagree: {K.shape} vs {M.shape}")
    dim = K.shape[0]
    if not 1 <= n_modes <= dim:
        raise DimensionError(f"n_modes must be in 1..{dim}, got {n_modes}")
    try:
        lam, vec = scipy.linalg.eigh(K, M, subset_by_index=(0, n_modes - 1),
                                     driver="gvx", check_finite=False)
    except scipy.linalg.LinAlgError as exc:
        try:
            np.linalg.cholesky(M)
        except np.linalg.LinAlgError:
            raise DegenerateModelError("mass matrix is not positive definite") from exc
        raise NumericalError(f"generalized eigensolver failed: {exc}") from exc
    lam = np.maximum(lam, 0.0)
    freqs = np.sqrt(lam) / (2.0 * np.pi)
    flip = vec[np.argmax(np.abs(vec), axis=0), np.arange(vec.shape[1])] < 0
    vec[:, flip] *= -1.0
    return ModalResult(freqs, vec)
