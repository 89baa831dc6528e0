"""Material and cross-section properties for beam elements."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from ..exceptions import GeometryError

#: section fields that a parameter binding may override
OVERRIDABLE_PROPERTIES = (
    "youngs_modulus",
    "shear_modulus",
    "density",
    "area",
    "i_min",
    "i_max",
    "torsion",
)


@dataclass(frozen=True)
class MaterialSection:
    """Isotropic material plus cross-section constants, SI units throughout.

    i_min / i_max are the minor- and major-axis bending inertias (m^4);
    torsion is the St Venant torsional constant J (m^4).
    """

    youngs_modulus: float  # Pa
    shear_modulus: float   # Pa
    density: float         # kg/m^3
    area: float            # m^2
    i_min: float           # m^4
    i_max: float           # m^4
    torsion: float         # m^4

    def __post_init__(self):
        for name in OVERRIDABLE_PROPERTIES:
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or not value > 0.0 or value != value:
                raise GeometryError(f"section property {name!r} must be strictly positive, got {value!r}")
            object.__setattr__(self, name, float(value))

    def replace(self, **overrides) -> "MaterialSection":
        """Copy with some properties overridden; re-validates."""
        unknown = set(overrides) - set(OVERRIDABLE_PROPERTIES)
        if unknown:
            raise GeometryError(f"unknown section properties: {sorted(unknown)}")
        return dataclasses.replace(self, **overrides)
