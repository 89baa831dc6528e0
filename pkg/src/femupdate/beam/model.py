"""Beam structure definition and global matrix assembly."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..exceptions import DegenerateModelError, GeometryError, ModelConfigError
from .elements import DOF_PER_NODE, element_matrices, orientation_triad
from .sections import OVERRIDABLE_PROPERTIES, MaterialSection

DOF_NAMES = ("ux", "uy", "uz", "rx", "ry", "rz")


@dataclass(frozen=True)
class BeamElement:
    """Two-node element referencing a named section.

    ``orientation`` is an optional reference vector fixing the local z plane;
    ``group`` is a free-form tag used by parameter bindings.
    """

    node_a: int
    node_b: int
    section: str
    group: str = ""
    orientation: tuple[float, float, float] | None = None


@dataclass(frozen=True)
class ParameterBinding:
    """One updating-parameter component and the element properties it overrides."""

    name: str
    targets: tuple[tuple[int, str], ...]  # (element index, section property)


@dataclass(frozen=True, eq=False)
class BeamModel:
    """Nodes, elements, supports and the parameter-to-property binding map."""

    nodes: np.ndarray                       # (n_nodes, 3) coordinates in m
    elements: tuple[BeamElement, ...]
    sections: dict[str, MaterialSection]
    constraints: frozenset[int] = frozenset()   # fixed global DOF indices
    bindings: tuple[ParameterBinding, ...] = ()
    name: str = ""

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        if nodes.ndim != 2 or nodes.shape[1] != 3:
            raise ModelConfigError(f"nodes must be (n, 3) coordinates, got shape {nodes.shape}")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "bindings", tuple(self.bindings))
        object.__setattr__(self, "constraints", frozenset(int(i) for i in self.constraints))
        if not self.elements:
            raise ModelConfigError("model has no elements")
        n = len(nodes)
        for idx, el in enumerate(self.elements):
            if not (0 <= el.node_a < n and 0 <= el.node_b < n):
                raise ModelConfigError(f"element {idx} references missing nodes ({el.node_a}, {el.node_b})")
            if el.node_a == el.node_b:
                raise ModelConfigError(f"element {idx} connects a node to itself")
            if el.section not in self.sections:
                raise ModelConfigError(f"element {idx} uses unknown section {el.section!r}")
        for dof in self.constraints:
            if not 0 <= dof < self.n_dof_total:
                raise ModelConfigError(f"constrained DOF {dof} outside 0..{self.n_dof_total - 1}")
        seen = set()
        for binding in self.bindings:
            if binding.name in seen:
                raise ModelConfigError(f"duplicate parameter binding {binding.name!r}")
            seen.add(binding.name)
            if not binding.targets:
                raise ModelConfigError(f"binding {binding.name!r} overrides nothing")
            for elem, prop in binding.targets:
                if not 0 <= elem < len(self.elements):
                    raise ModelConfigError(f"binding {binding.name!r} references missing element {elem}")
                if prop not in OVERRIDABLE_PROPERTIES:
                    raise ModelConfigError(f"binding {binding.name!r} overrides unknown property {prop!r}")
        for i in range(len(self.elements)):
            self.element_length(i)  # raises GeometryError for coincident nodes

    # -- geometry -----------------------------------------------------------

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    @property
    def n_dof_total(self) -> int:
        return DOF_PER_NODE * self.n_nodes

    @property
    def n_dof(self) -> int:
        """DOF count after constraint elimination."""
        return self.n_dof_total - len(self.constraints)

    @property
    def free_dofs(self) -> np.ndarray:
        return np.array(sorted(set(range(self.n_dof_total)) - self.constraints), dtype=int)

    @property
    def parameter_names(self) -> tuple[str, ...]:
        return tuple(b.name for b in self.bindings)

    def element_length(self, index: int) -> float:
        el = self.elements[index]
        length = float(np.linalg.norm(self.nodes[el.node_b] - self.nodes[el.node_a]))
        if not length > 0.0:
            raise GeometryError(f"element {index} has zero length")
        return length

    def element_triad(self, index: int) -> np.ndarray:
        el = self.elements[index]
        return orientation_triad(self.nodes[el.node_a], self.nodes[el.node_b], el.orientation)

    def element_dofs(self, index: int) -> np.ndarray:
        el = self.elements[index]
        return np.concatenate([DOF_PER_NODE * el.node_a + np.arange(DOF_PER_NODE),
                               DOF_PER_NODE * el.node_b + np.arange(DOF_PER_NODE)])

    def elements_in_group(self, group: str) -> list[int]:
        return [i for i, el in enumerate(self.elements) if el.group == group]

    # -- parameter overrides --------------------------------------------------

    def effective_sections(self, theta=None) -> list[MaterialSection]:
        """Per-element sections after applying parameter overrides."""
        base = [self.sections[el.section] for el in self.elements]
        if theta is None:
            return base
        values = np.asarray(theta, dtype=float)
        if values.shape != (len(self.bindings),):
            raise ModelConfigError(
                f"parameter vector has length {values.shape}, model binds {len(self.bindings)} components")
        overrides: dict[int, dict[str, float]] = {}
        for component, binding in zip(values, self.bindings):
            for elem, prop in binding.targets:
                overrides.setdefault(elem, {})[prop] = float(component)
        out = list(base)
        for elem, props in overrides.items():
            try:
                out[elem] = base[elem].replace(**props)
            except GeometryError as exc:
                raise DegenerateModelError(
                    f"parameter overrides make element {elem} invalid: {exc}") from exc
        return out


def assemble(model: BeamModel, theta=None):
    """Global (K, M) with constrained DOFs eliminated.

    K and M are exactly symmetric; M is positive definite for any valid
    section set.  Pure function of its inputs, safe to call concurrently.
    """
    sections = model.effective_sections(theta)
    n = model.n_dof_total
    K = np.zeros((n, n))
    M = np.zeros((n, n))
    for index, section in enumerate(sections):
        ke, me = element_matrices(section, model.element_length(index), model.element_triad(index))
        dofs = model.element_dofs(index)
        ix = np.ix_(dofs, dofs)
        K[ix] += ke
        M[ix] += me
    free = model.free_dofs
    if free.size == 0:
        raise DegenerateModelError("all DOFs are constrained")
    ix = np.ix_(free, free)
    K = K[ix]
    M = M[ix]
    K = 0.5 * (K + K.T)
    M = 0.5 * (M + M.T)
    return K, M
