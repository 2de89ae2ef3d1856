"""Hyperbolic-interval view of the two-mode positivity constraints.

Both the physicality and the separability condition of a two-mode CM
reduce to the sign of a quadratic form dt^2 - dx^2 - dy^2 built from the
local invariants, i.e. a squared interval of a 1+2 Minkowski space.  The
physicality cone and the separability cone share dt^2 and dx^2 and
differ only in the y coordinate (the sign of I3 flips between them).

The interval values themselves are always computed from the closed
determinant forms, which are total functions of the invariants; the
coordinates carry a removable prefactor singularity at I1 = 1/4 and are
exposed as a derived view that raises instead of returning NaN.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    E,
    T,
    CovarianceMatrix,
    LocalInvariants,
    det_via_invariants,
    seralian,
    symplectic_eigenvalues,
)

I1_SINGULARITY_TOL = 1e-9
I2_SINGULARITY_TOL = 1e-12


class CoordinateSingularity(ValueError):
    """Minkowski coordinates undefined (I1 at 1/4, or I2 at zero)."""


@dataclass(frozen=True)
class MinkowskiCoords:
    """Squared coordinates; dy2 belongs to the physicality cone and
    dy2_tilde to the separability cone."""

    dt2: float
    dx2: float
    dy2: float
    dy2_tilde: float


@dataclass(frozen=True)
class Intervals:
    """The two squared intervals: ds2 >= 0 iff physical, ds2_tilde >= 0
    iff separable."""

    ds2: float
    ds2_tilde: float


def coordinates(inv: LocalInvariants) -> MinkowskiCoords:
    """Squared Minkowski coordinates of a state's invariants."""
    u = inv.i1 - 0.25
    if u <= I1_SINGULARITY_TOL:
        raise CoordinateSingularity(f"I1 - 1/4 = {u:.3e} <= tolerance")
    if inv.i2 <= I2_SINGULARITY_TOL:
        raise CoordinateSingularity(f"I2 = {inv.i2:.3e} <= tolerance")
    pref = 1.0 / u
    dt2 = pref * (u - 0.5 * inv.i4 / inv.i2) ** 2 * inv.i2
    dx2 = pref * (0.25 * inv.i4 ** 2 / inv.i2 - inv.i1 * inv.i3 ** 2)
    dy2 = 0.25 * pref * (u + inv.i3) ** 2
    dy2_tilde = 0.25 * pref * (u - inv.i3) ** 2
    return MinkowskiCoords(dt2, dx2, dy2, dy2_tilde)


def interval_physical(inv: LocalInvariants) -> float:
    """ds^2 = det V - seralian/4 + 1/16; >= 0 for physical states."""
    return det_via_invariants(inv) - seralian(inv) / 4 + 1 / 16


def interval_separability(inv: LocalInvariants) -> float:
    """ds~^2, the same closed form on the partially-transposed
    invariants; negative exactly for entangled states."""
    pt = inv.partially_transposed()
    return det_via_invariants(pt) - seralian(pt) / 4 + 1 / 16


def intervals(inv: LocalInvariants) -> Intervals:
    return Intervals(interval_physical(inv), interval_separability(inv))


def interval_physical_direct(v: CovarianceMatrix) -> float:
    """ds^2 as det(V + E/2) on the matrix itself.

    Equals interval_physical of the invariants, but with relative-only
    rounding: the closed form cancels invariants that grow like the
    fourth power of the squeezing scale, which drowns the 1e-9-level
    values of near-pure states.
    """
    return float(np.linalg.det(v.entries + E / 2).real)


def interval_separability_direct(v: CovarianceMatrix) -> float:
    """ds~^2 as det(T V T + E/2) on the matrix itself."""
    return float(np.linalg.det(T @ v.entries @ T + E / 2).real)


def interval_separability_from_eigenvalues(inv: LocalInvariants) -> float:
    """ds~^2 as (nt+^2 - 1/4)(nt-^2 - 1/4) from the symplectic spectrum
    of the partially-transposed CM; agrees with interval_separability
    whenever that spectrum is real (always, for physical states)."""
    pair = symplectic_eigenvalues(inv.partially_transposed())
    return (pair.n_plus ** 2 - 0.25) * (pair.n_minus ** 2 - 0.25)


def tmtss_separatrix(n: float) -> tuple[float, float]:
    """The two cross-correlation values +-(n - 1/2) where a symmetric
    zero-ms state crosses the separability boundary."""
    return n - 0.5, -(n - 0.5)


def fiber_separatrix_residual(n1p: float, n2p: float, mcp: float) -> float:
    """Distance of a fiber-output state from its separability boundary.

    The boundary condition is (n1' +- 1/2)(n2' +- 1/2) = mc'^2 with an
    unspecified sign branch; the residual is the minimum over all four
    branches and vanishes iff the state sits on the separatrix.
    """
    m2 = mcp * mcp
    return min(abs((n1p + s1 * 0.5) * (n2p + s2 * 0.5) - m2)
               for s1 in (1.0, -1.0) for s2 in (1.0, -1.0))
