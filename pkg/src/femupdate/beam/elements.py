"""12-DOF two-node beam element: stiffness, consistent mass, orientation.

Local DOF order per element is (ux, uy, uz, rx, ry, rz) at node a, then the
same six at node b.  Bending neglects shear deformation.  The local z axis is
the compliant bending direction: deflection along local z is governed by
``i_min``, deflection along local y by ``i_max``.
"""

from __future__ import annotations

import numpy as np

from ..exceptions import GeometryError
from .sections import MaterialSection

DOF_PER_NODE = 6

_Z_AXIS = np.array([0.0, 0.0, 1.0])
_X_AXIS = np.array([1.0, 0.0, 0.0])

# (translation_a, rotation_a, translation_b, rotation_b, sign) per bending plane;
# the sign flips translation-rotation couplings between the two planes.
_BENDING_PLANES = (
    ((1, 5, 7, 11), +1.0),  # deflection along local y, inertia i_max
    ((2, 4, 8, 10), -1.0),  # deflection along local z, inertia i_min
)


def orientation_triad(node_a, node_b, reference=None) -> np.ndarray:
    """Local axes as rows (x, y, z) in global coordinates.

    ``reference`` picks the plane of the local z axis; by default global z is
    used, falling back to global x for near-vertical elements.
    """
    xa = np.asarray(node_a, dtype=float)
    xb = np.asarray(node_b, dtype=float)
    axis = xb - xa
    length = float(np.linalg.norm(axis))
    if not length > 0.0:
        raise GeometryError("element nodes coincide")
    ex = axis / length
    if reference is None:
        ref = _Z_AXIS if abs(float(ex @ _Z_AXIS)) < 0.999 else _X_AXIS
    else:
        ref = np.asarray(reference, dtype=float)
        norm = np.linalg.norm(ref)
        if not norm > 0.0:
            raise GeometryError("orientation reference vector is zero")
        ref = ref / norm
    ez = np.cross(ex, ref)
    norm = np.linalg.norm(ez)
    if norm < 1e-8:
        raise GeometryError("orientation reference is parallel to the element axis")
    ez = ez / norm
    ey = np.cross(ez, ex)
    return np.vstack([ex, ey, ez])


def transformation(triad: np.ndarray) -> np.ndarray:
    """12x12 global-to-local rotation built from a 3x3 triad."""
    lam = np.zeros((12, 12))
    for block in range(4):
        lam[3 * block:3 * block + 3, 3 * block:3 * block + 3] = triad
    return lam


def _broadcast(*values):
    arrays = np.broadcast_arrays(*[np.asarray(v, dtype=float) for v in values])
    return arrays


def local_stiffness(youngs, shear, area, i_y, i_z, torsion, length) -> np.ndarray:
    """Local stiffness; scalar inputs give (12, 12), arrays broadcast in front.

    i_y governs deflection along local z, i_z deflection along local y.
    """
    E, G, A, Iy, Iz, J, L = _broadcast(youngs, shear, area, i_y, i_z, torsion, length)
    k = np.zeros(E.shape + (12, 12))
    ea = E * A / L
    gj = G * J / L
    for (i, j), value in (((0, 0), ea), ((6, 6), ea), ((0, 6), -ea),
                          ((3, 3), gj), ((9, 9), gj), ((3, 9), -gj)):
        k[..., i, j] = value
        k[..., j, i] = value
    for (dofs, sign), inertia in zip(_BENDING_PLANES, (Iz, Iy)):
        ta, ra, tb, rb = dofs
        c = E * inertia / L**3
        cl = c * L
        cl2 = cl * L
        entries = (
            ((ta, ta), 12.0 * c), ((ta, ra), sign * 6.0 * cl), ((ta, tb), -12.0 * c),
            ((ta, rb), sign * 6.0 * cl), ((ra, ra), 4.0 * cl2), ((ra, tb), -sign * 6.0 * cl),
            ((ra, rb), 2.0 * cl2), ((tb, tb), 12.0 * c), ((tb, rb), -sign * 6.0 * cl),
            ((rb, rb), 4.0 * cl2),
        )
        for (i, j), value in entries:
            k[..., i, j] = value
            k[..., j, i] = value
    return k


def local_mass(density, area, i_y, i_z, length) -> np.ndarray:
    """Consistent mass; torsional rotary inertia uses the polar inertia i_y + i_z."""
    rho, A, Iy, Iz, L = _broadcast(density, area, i_y, i_z, length)
    m = np.zeros(rho.shape + (12, 12))
    ax = rho * A * L / 6.0
    tor = rho * (Iy + Iz) * L / 6.0
    for (i, j), value in (((0, 0), 2.0 * ax), ((6, 6), 2.0 * ax), ((0, 6), ax),
                          ((3, 3), 2.0 * tor), ((9, 9), 2.0 * tor), ((3, 9), tor)):
        m[..., i, j] = value
        m[..., j, i] = value
    base = rho * A * L / 420.0
    for dofs, sign in _BENDING_PLANES:
        ta, ra, tb, rb = dofs
        bl = base * L
        bl2 = bl * L
        entries = (
            ((ta, ta), 156.0 * base), ((ta, ra), sign * 22.0 * bl), ((ta, tb), 54.0 * base),
            ((ta, rb), -sign * 13.0 * bl), ((ra, ra), 4.0 * bl2), ((ra, tb), sign * 13.0 * bl),
            ((ra, rb), -3.0 * bl2), ((tb, tb), 156.0 * base), ((tb, rb), -sign * 22.0 * bl),
            ((rb, rb), 4.0 * bl2),
        )
        for (i, j), value in entries:
            m[..., i, j] = value
            m[..., j, i] = value
    return m


def element_matrices(section: MaterialSection, length: float, triad=None):
    """Stiffness and consistent mass of one element in global coordinates.

    With ``triad=None`` the element is taken axis-aligned (local frame equals
    global), which is the raw textbook matrix pair.
    """
    if not (isinstance(length, (int, float)) and length > 0.0 and np.isfinite(length)):
        raise GeometryError(f"element length must be strictly positive, got {length!r}")
    ke = local_stiffness(section.youngs_modulus, section.shear_modulus, section.area,
                         section.i_min, section.i_max, section.torsion, float(length))
    me = local_mass(section.density, section.area, section.i_min, section.i_max, float(length))
    if triad is not None:
        lam = transformation(np.asarray(triad, dtype=float))
        ke = lam.T @ ke @ lam
        me = lam.T @ me @ lam
        ke = 0.5 * (ke + ke.T)
        me = 0.5 * (me + me.T)
    return ke, me
