"""The box-bounded physical parameter vector shared by samplers and the FE layer."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import ModelConfigError
from .validation import as_vector


@dataclass(frozen=True)
class UpdatingVector:
    """A named parameter vector with strict box bounds.

    Components carry mixed physical units (e.g. kg/m^3 for a density entry,
    m^4 for a bending inertia), so anything metric-like downstream has to be
    scaled per component.
    """

    values: np.ndarray
    names: tuple[str, ...]
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        d = len(self.names)
        object.__setattr__(self, "values", as_vector(self.values, "values", d))
        object.__setattr__(self, "lower", as_vector(self.lower, "lower bounds", d))
        object.__setattr__(self, "upper", as_vector(self.upper, "upper bounds", d))
        if len(set(self.names)) != d:
            raise ModelConfigError("parameter names must be unique")
        if not np.all(self.lower < self.upper):
            raise ModelConfigError("lower bounds must be strictly below upper bounds")
        if not self.contains(self.values):
            raise ModelConfigError("parameter values fall outside their bounds")

    @property
    def dimension(self) -> int:
        return len(self.names)

    def contains(self, values) -> bool:
        """True when a raw vector lies inside the box (inclusive)."""
        arr = np.asarray(values, dtype=float)
        if arr.shape != (self.dimension,):
            return False
        return bool(np.all(arr >= self.lower) & np.all(arr <= self.upper))

    def with_values(self, values) -> "UpdatingVector":
        return UpdatingVector(np.asarray(values, dtype=float), self.names, self.lower, self.upper)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError as exc:
            raise ModelConfigError(f"unknown parameter {name!r}") from exc
