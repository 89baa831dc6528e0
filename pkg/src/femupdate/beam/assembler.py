"""Batched assembly for repeated solves over many parameter vectors.

Same arithmetic as :func:`femupdate.beam.model.assemble`, but element
geometry, transformations and scatter indices are computed once so that a
sampler can evaluate thousands of parameter vectors cheaply.
"""

from __future__ import annotations

import numpy as np

from ..exceptions import DegenerateModelError, ModelConfigError
from .elements import local_mass, local_stiffness, transformation
from .model import BeamModel

_PROPERTY_ORDER = ("youngs_modulus", "shear_modulus", "area", "i_min", "i_max", "torsion", "density")


class ModelAssembler:
    """Precomputed fast path for ``assemble(model, theta)`` on a fixed model."""

    def __init__(self, model: BeamModel):
        self.model = model
        n_el = len(model.elements)
        self._lengths = np.array([model.element_length(i) for i in range(n_el)])
        self._lambdas = np.stack([transformation(model.element_triad(i)) for i in range(n_el)])
        self._base = {
            prop: np.array([getattr(s, prop) for s in model.effective_sections(None)])
            for prop in _PROPERTY_ORDER
        }
        # one (component, property) pair may touch many elements; group them
        self._binding_targets: list[list[tuple[str, np.ndarray]]] = []
        for binding in model.bindings:
            per_prop: dict[str, list[int]] = {}
            for elem, prop in binding.targets:
                per_prop.setdefault(prop, []).append(elem)
            self._binding_targets.append(
                [(prop, np.array(elems, dtype=int)) for prop, elems in per_prop.items()])
        n = model.n_dof_total
        dofs = np.stack([model.element_dofs(i) for i in range(n_el)])        # (n_el, 12)
        rows = np.repeat(dofs, 12, axis=1)                                   # (n_el, 144)
        cols = np.tile(dofs, (1, 12))
        self._flat_index = (rows * n + cols).ravel()
        self._n_total = n
        self._free = model.free_dofs
        if self._free.size == 0:
            raise DegenerateModelError("all DOFs are constrained")
        self._free_ix = np.ix_(self._free, self._free)

    @property
    def n_parameters(self) -> int:
        return len(self.model.bindings)

    def _properties(self, theta):
        props = {name: arr.copy() for name, arr in self._base.items()}
        if theta is None:
            return props
        values = np.asarray(theta, dtype=float)
        if values.shape != (self.n_parameters,):
            raise ModelConfigError(
                f"parameter vector has shape {values.shape}, model binds {self.n_parameters} components")
        for value, targets in zip(values, self._binding_targets):
            for prop, elems in targets:
                props[prop][elems] = value
        for name, arr in props.items():
            if not np.all(arr > 0.0):
                raise DegenerateModelError(f"parameter overrides drive {name} non-positive")
        return props

    def assemble(self, theta=None):
        """Global (K, M) with constrained DOFs eliminated."""
        p = self._properties(theta)
        k_loc = local_stiffness(p["youngs_modulus"], p["shear_modulus"], p["area"],
                                p["i_min"], p["i_max"], p["torsion"], self._lengths)
        m_loc = local_mass(p["density"], p["area"], p["i_min"], p["i_max"], self._lengths)
        lam = self._lambdas
        lam_t = lam.transpose(0, 2, 1)
        k_glob = lam_t @ k_loc @ lam
        m_glob = lam_t @ m_loc @ lam
        n = self._n_total
        K = np.bincount(self._flat_index, weights=k_glob.ravel(), minlength=n * n).reshape(n, n)
        M = np.bincount(self._flat_index, weights=m_glob.ravel(), minlength=n * n).reshape(n, n)
        K = K[self._free_ix]
        M = M[self._free_ix]
        K = 0.5 * (K + K.T)
        M = 0.5 * (M + M.T)
        return K, M
