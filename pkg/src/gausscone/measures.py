"""Entanglement quantifiers for two-mode Gaussian states.

All quantifiers funnel through a single argument
x = 2 sqrt(ds~^2 / (nt+^2 - 1/4) + 1/4), which collapses algebraically
to twice the smaller symplectic eigenvalue of the partially-transposed
CM.  Plugging x into different decreasing functions yields the
logarithmic negativity and the symmetric-state entanglement of
formation; the latter formula doubles as a lower bound on non-symmetric
states.  The invariant interval ds~^2 itself serves as a distance-type
measure: its magnitude below the separability boundary.
"""

from __future__ import annotations

import warnings
from enum import Enum

import numpy as np

from .core import (
    BOUNDARY_TOL,
    CovarianceMatrix,
    LocalInvariants,
    PSD_TOL,
    SymplecticPair,
    symplectic_eigenvalues,
)
from .minkowski import interval_separability

SYMMETRY_TOL = 1e-9
DEGENERATE_TOL = 1e-12


class DegenerateArgument(ValueError):
    """The measure argument is 0/0-degenerate and not removable."""


class AsymmetricState(ValueError):
    """Symmetric-only formula applied to a state with I1 != I2."""


class SeparableState(UserWarning):
    """Entanglement of formation requested for a separable state."""


class NonPsdNoise(ValueError):
    """Classical-noise CM must be positive semidefinite."""


class MeasureKind(Enum):
    MINKOWSKI_DISTANCE = "mink_dist"
    LOG_NEGATIVITY = "log_neg"
    EOF_SYMMETRIC = "eof_symmetric"
    EOF_LOWER_BOUND = "eof_bound"


def transposed_pair(inv: LocalInvariants) -> SymplecticPair:
    """Symplectic spectrum of the partially-transposed CM."""
    return symplectic_eigenvalues(inv.partially_transposed())


def unified_argument(inv: LocalInvariants) -> float:
    """The common measure argument x; equals 2*nt- of the partial
    transpose.

    The defining ratio degenerates to 0/0 when the partial transpose is
    a pure product state (nt+ = 1/2, forcing ds~^2 = 0); the removable
    limit 2*nt- is returned there.  A degenerate denominator with a
    nonzero interval cannot come from a physical state and raises.
    """
    pair = transposed_pair(inv)
    denom = pair.n_plus ** 2 - 0.25
    s = interval_separability(inv)
    if denom <= DEGENERATE_TOL:
        if abs(s) <= DEGENERATE_TOL:
            return 2.0 * pair.n_minus
        raise DegenerateArgument(
            f"nt+^2 - 1/4 = {denom:.3e} but ds~^2 = {s:.3e}")
    return 2.0 * np.sqrt(max(s / denom + 0.25, 0.0))


def log_negativity(inv: LocalInvariants) -> float:
    """max(0, -ln x): zero on separable states, 2r on a two-mode
    squeezed vacuum with squeezing r."""
    return max(0.0, -np.log(unified_argument(inv)))


def _eof_of_argument(x):
    # c- log2 c- has a removable zero at x = 1
    cp = (x ** -0.5 + x ** 0.5) ** 2 / 4
    cm = (x ** -0.5 - x ** 0.5) ** 2 / 4
    out = cp * np.log2(cp)
    if cm > 0.0:
        out -= cm * np.log2(cm)
    return out


def eof_symmetric(inv: LocalInvariants) -> float:
    """Entanglement of formation, in bits, for a symmetric state.

    Only valid when I1 = I2 within tolerance; raises AsymmetricState
    otherwise.  On separable input (x > 1) the value is 0 by convention
    and a SeparableState warning is emitted.
    """
    if abs(inv.i1 - inv.i2) > SYMMETRY_TOL:
        raise AsymmetricState(
            f"|I1 - I2| = {abs(inv.i1 - inv.i2):.3e} exceeds tolerance")
    x = unified_argument(inv)
    if x > 1.0 + SYMMETRY_TOL:
        warnings.warn(SeparableState(
            f"state is separable (x = {x:.6g} > 1); EoF = 0 by convention"))
        return 0.0
    return float(_eof_of_argument(min(x, 1.0)))


def eof_lower_bound(inv: LocalInvariants) -> float:
    """The symmetric-state EoF formula applied regardless of symmetry;
    a lower bound on the true EoF, zero on separable states."""
    x = unified_argument(inv)
    if x >= 1.0:
        return 0.0
    return float(_eof_of_argument(x))


def minkowski_distance_measure(inv: LocalInvariants) -> float:
    """|ds~^2| on entangled states, 0 on separable ones (the interval
    magnitude is meaningless as a measure above the boundary)."""
    s = interval_separability(inv)
    return -s if s < -BOUNDARY_TOL else 0.0


def evaluate_measure(kind: MeasureKind, inv: LocalInvariants) -> float:
    if kind is MeasureKind.MINKOWSKI_DISTANCE:
        return minkowski_distance_measure(inv)
    if kind is MeasureKind.LOG_NEGATIVITY:
        return log_negativity(inv)
    if kind is MeasureKind.EOF_SYMMETRIC:
        return eof_symmetric(inv)
    return eof_lower_bound(inv)


def noise_convolution_cm(v_prime: CovarianceMatrix,
                         p: CovarianceMatrix) -> CovarianceMatrix:
    """CM of a state convolved with classical Gaussian displacement
    noise of CM ``p``: simply V = P + V'."""
    if np.linalg.eigvalsh(p.entries)[0] < -PSD_TOL:
        raise NonPsdNoise("noise CM has a negative eigenvalue")
    return CovarianceMatrix(v_prime.entries + p.entries)
