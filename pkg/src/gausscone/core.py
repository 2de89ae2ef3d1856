"""Covariance-matrix core for two-mode bosonic Gaussian states.

Everything is expressed in the mode ordering (a1+, a1, a2+, a2) with
dimensionless, hbar-free units: the vacuum has variance 1/2 on every
mode. A state is fully described by its 4x4 Hermitian covariance matrix
(CM); local-symplectic invariants of the CM drive all classification
and measure computations downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

# -- tolerances (absolute; everything in this problem is O(1)) --
HERMITICITY_TOL = 1e-12     # max |V - V+| accepted / enforced on results
IMAG_RESIDUE_TOL = 1e-10    # imaginary residue discarded on invariants
PSD_TOL = 1e-10             # smallest eigenvalue >= -PSD_TOL counts as PSD
PD_TOL = 1e-10              # smallest eigenvalue >= +PD_TOL counts as PD
BOUNDARY_TOL = 1e-9         # |interval| <= tol classifies as BOUNDARY
PHYSICAL_EIG_TOL = 1e-9     # smaller symplectic eigenvalue >= 1/2 - tol
DISC_CLAMP = 1e-10          # discriminant / squared-eigenvalue clamp band

# -- fixed basis matrices of the (a1+, a1, a2+, a2) ordering --
Z = np.diag([1.0, -1.0])
Z.flags.writeable = False
X = np.array([[0.0, 1.0], [1.0, 0.0]])
X.flags.writeable = False
E = np.kron(np.eye(2), Z)           # diag(Z, Z), the symplectic metric
E.flags.writeable = False
T = np.block([[np.eye(2), np.zeros((2, 2))],
              [np.zeros((2, 2)), X]])  # mirror reflection of mode 2
T.flags.writeable = False


class NonHermitianInput(ValueError):
    """Input matrix violates Hermiticity beyond tolerance."""


class UnphysicalState(ValueError):
    """State fails the bosonic positivity constraint.

    Carries ``n_minus``, the offending smaller symplectic eigenvalue,
    when it is defined (None when the symplectic spectrum is not real).
    """

    def __init__(self, msg, n_minus=None):
        super().__init__(msg)
        self.n_minus = n_minus


class NegativeDiscriminant(ValueError):
    """Symplectic-eigenvalue discriminant negative beyond the clamp band."""


class NegativeSquaredEigenvalue(ValueError):
    """Squared symplectic eigenvalue negative beyond the clamp band."""


@dataclass(frozen=True)
class StandardFormParams:
    """The four reals (n1, n2, ms, mc) of the standard-form CM.

    Physical states require n1, n2 >= 1/2; values below that are
    representable on purpose so that the classifiers can be exercised
    on deliberately unphysical inputs.
    """

    n1: float
    n2: float
    ms: float
    mc: float


@dataclass(frozen=True)
class LocalInvariants:
    """Local-symplectic invariants (I1, I2, I3, I4) of a two-mode CM."""

    i1: float
    i2: float
    i3: float
    i4: float

    def partially_transposed(self):
        """Invariants of the mirror-reflected CM: only I3 flips sign."""
        return LocalInvariants(self.i1, self.i2, -self.i3, self.i4)


@dataclass(frozen=True)
class SymplecticPair:
    """Ordered symplectic eigenvalues, n_plus >= n_minus."""

    n_plus: float
    n_minus: float


class Kind(Enum):
    UNPHYSICAL = "UNPHYSICAL"
    SEPARABLE = "SEPARABLE"
    ENTANGLED = "ENTANGLED"
    BOUNDARY = "BOUNDARY"


@dataclass(frozen=True)
class Classification:
    """Verdict plus the deciding interval value.

    ``detail`` is the physicality interval for UNPHYSICAL verdicts and
    the separability interval otherwise.  ``schur_consistent`` reports
    whether the Schur-complement criterion could be evaluated and, if
    so, whether it agreed with the symplectic-eigenvalue criterion
    (None when the upper-left block was singular and the Schur path had
    to be skipped).
    """

    kind: Kind
    detail: float
    schur_consistent: bool | None = True


class CovarianceMatrix:
    """4x4 Hermitian CM in the (a1+, a1, a2+, a2) ordering.

    The stored array is exactly Hermitian (inputs are validated within
    HERMITICITY_TOL, then symmetrized) and read-only.
    """

    __slots__ = ("entries",)

    def __init__(self, entries):
        m = np.array(entries, dtype=complex)
        if m.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
        dev = np.max(np.abs(m - m.conj().T))
        if dev > HERMITICITY_TOL:
            raise NonHermitianInput(
                f"matrix deviates from Hermiticity by {dev:.3e}")
        m = (m + m.conj().T) / 2
        m.flags.writeable = False
        object.__setattr__(self, "entries", m)

    def __setattr__(self, name, value):
        raise AttributeError("CovarianceMatrix is immutable")

    @property
    def v1(self):
        """Upper-left 2x2 block (mode 1)."""
        return self.entries[:2, :2]

    @property
    def v2(self):
        """Lower-right 2x2 block (mode 2)."""
        return self.entries[2:, 2:]

    @property
    def c(self):
        """Upper-right 2x2 cross-correlation block."""
        return self.entries[:2, 2:]

    def __repr__(self):
        return f"CovarianceMatrix({self.entries!r})"


def build_standard_cm(p: StandardFormParams) -> CovarianceMatrix:
    """Expand standard-form parameters into the full 4x4 CM."""
    c = np.array([[p.ms, p.mc], [p.mc, p.ms]])
    m = np.block([[p.n1 * np.eye(2), c], [c.T, p.n2 * np.eye(2)]])
    return CovarianceMatrix(m)


def _real(value, what):
    if abs(value.imag) > IMAG_RESIDUE_TOL:
        raise NonHermitianInput(
            f"{what} has imaginary residue {value.imag:.3e}")
    return float(value.real)


def local_invariants(v: CovarianceMatrix) -> LocalInvariants:
    """Compute (det V1, det V2, det C, tr(V1 Z C Z V2 Z C+ Z))."""
    m = v.entries
    i1 = _real(np.linalg.det(m[:2, :2]), "I1")
    i2 = _real(np.linalg.det(m[2:, 2:]), "I2")
    i3 = _real(np.linalg.det(m[:2, 2:]), "I3")
    c = m[:2, 2:]
    i4 = _real(np.trace(m[:2, :2] @ Z @ c @ Z @ m[2:, 2:] @ Z
                        @ c.conj().T @ Z), "I4")
    return LocalInvariants(i1, i2, i3, i4)


def partial_transpose(v: CovarianceMatrix) -> CovarianceMatrix:
    """Mirror-reflect mode 2 in phase space: V -> T V T."""
    return CovarianceMatrix(T @ v.entries @ T)


def symplectic_eigenvalues(inv: LocalInvariants) -> SymplecticPair:
    """Symplectic spectrum of the CM whose invariants are given.

    Callers pass the invariants of whichever matrix they mean; feeding
    the partially-transposed invariants yields the spectrum used by the
    separability criterion.  Raises when the invariants do not admit a
    real spectrum (they then cannot come from a positive Hermitian CM).
    """
    base = (inv.i1 + inv.i2) / 2 + inv.i3
    disc = ((inv.i1 - inv.i2) / 2) ** 2 + (inv.i1 + inv.i2) * inv.i3 + inv.i4
    # clamp bands scale with the cancelled terms: the absolute 1e-10 band
    # is only meaningful for O(1) invariants
    disc_scale = max(1.0, ((inv.i1 - inv.i2) / 2) ** 2,
                     abs((inv.i1 + inv.i2) * inv.i3), abs(inv.i4))
    if disc < -DISC_CLAMP * disc_scale:
        raise NegativeDiscriminant(
            f"symplectic spectrum is not real (discriminant {disc:.3e})")
    root = np.sqrt(max(disc, 0.0))
    hi = base + root
    # base - root suffers catastrophic cancellation for strongly squeezed
    # states; base^2 - disc collapses to det V, so divide that out instead
    lo = det_via_invariants(inv) / hi if hi > 0 else base - root
    if lo < -DISC_CLAMP * max(1.0, abs(base), root):
        raise NegativeSquaredEigenvalue(
            f"squared symplectic eigenvalue {lo:.3e} < 0")
    return SymplecticPair(float(np.sqrt(max(hi, 0.0))),
                          float(np.sqrt(max(lo, 0.0))))


def det_via_invariants(inv: LocalInvariants) -> float:
    """det V rebuilt from the invariants: I1*I2 + I3^2 - I4."""
    return inv.i1 * inv.i2 + inv.i3 ** 2 - inv.i4


def seralian(inv: LocalInvariants) -> float:
    """The invariant sum I1 + I2 + 2*I3."""
    return inv.i1 + inv.i2 + 2 * inv.i3


def determinant(v: CovarianceMatrix) -> float:
    """det V evaluated directly on the matrix.

    The factored (LU) evaluation keeps a small relative error even for
    strongly squeezed states, where rebuilding det V from the invariants
    cancels catastrophically; purity at the 1e-9 level needs this route.
    """
    return float(np.linalg.det(v.entries).real)


def purity(v: CovarianceMatrix) -> float:
    """Tr(rho^2) = 1/(4 sqrt(det V)); equals 1 exactly for pure states."""
    det = determinant(v)
    if det < 1 / 16 - PSD_TOL:
        raise UnphysicalState(f"det V = {det:.6g} < 1/16")
    return float(1.0 / (4.0 * np.sqrt(max(det, 1 / 16))))


def _interval_physical(inv):
    # closed form, total on any invariants
    return det_via_invariants(inv) - seralian(inv) / 4 + 1 / 16


def _interval_separability(inv):
    pt = inv.partially_transposed()
    return det_via_invariants(pt) - seralian(pt) / 4 + 1 / 16


def physical_via_schur(v: CovarianceMatrix):
    """Positivity test via block decomposition of V + E/2.

    Returns True/False, or None when the upper-left block of V + E/2 is
    singular within tolerance (pure first mode); the Schur complement is
    undefined there and the symplectic-eigenvalue criterion must be used
    alone.
    """
    a = v.v1 + Z / 2
    lam = np.linalg.eigvalsh(a)[0]
    if abs(lam) <= PD_TOL:
        return None
    if lam < 0:
        return False
    schur = (v.v2 + Z / 2) - v.c.conj().T @ np.linalg.inv(a) @ v.c
    return bool(np.linalg.eigvalsh(schur)[0] >= -PSD_TOL)


def physical_via_eigenvalue(v: CovarianceMatrix):
    """Symplectic-eigenvalue positivity test.

    Returns (is_physical, n_minus).  A real symplectic spectrum with
    n_minus >= 1/2 certifies positivity only together with V >= 0, so
    the ordinary PSD check on V itself is part of this criterion.  The
    eigenvalue extraction from the invariants turns ill-conditioned for
    near-degenerate spectra (strongly squeezed pure states); use
    is_physical for the production verdict there.
    """
    try:
        pair = symplectic_eigenvalues(local_invariants(v))
    except (NegativeDiscriminant, NegativeSquaredEigenvalue):
        return False, None
    if pair.n_minus < 0.5 - PHYSICAL_EIG_TOL:
        return False, pair.n_minus
    if np.linalg.eigvalsh(v.entries)[0] < -PSD_TOL:
        return False, pair.n_minus
    return True, pair.n_minus


def is_physical(v: CovarianceMatrix) -> bool:
    """True when V + E/2 is positive semidefinite within tolerance.

    Evaluated directly on the defining matrix; backward-stable for the
    whole generator range, unlike the invariant-route eigenvalue form.
    """
    return bool(np.linalg.eigvalsh(v.entries + E / 2)[0] >= -PSD_TOL)


def classify_physical(v: CovarianceMatrix) -> Classification:
    """Classify a CM, gating on the bosonic positivity constraint.

    The verdict comes from the defining positivity test; the Schur and
    symplectic-eigenvalue criteria are the two equivalent reformulations
    checked against each other by the property suites, and the Schur
    path's agreement (when its block inverse exists) is reported on the
    result.  Physical states fall through to the separability dichotomy.
    """
    phys = is_physical(v)
    schur = physical_via_schur(v)
    consistent = None if schur is None else (schur == phys)
    inv = local_invariants(v)
    if not phys:
        return Classification(Kind.UNPHYSICAL, _interval_physical(inv),
                              consistent)
    s = _interval_separability(inv)
    if abs(s) <= BOUNDARY_TOL:
        kind = Kind.BOUNDARY
    elif s > 0:
        kind = Kind.SEPARABLE
    else:
        kind = Kind.ENTANGLED
    return Classification(kind, s, consistent)


def classify_separable(v: CovarianceMatrix) -> Classification:
    """Separability verdict for a physical CM.

    Raises UnphysicalState (carrying the offending symplectic
    eigenvalue) instead of returning an UNPHYSICAL classification.
    """
    result = classify_physical(v)
    if result.kind is Kind.UNPHYSICAL:
        n_minus = physical_via_eigenvalue(v)[1]
        raise UnphysicalState(
            "state violates the positivity constraint"
            + ("" if n_minus is None
               else f" (smaller symplectic eigenvalue {n_minus:.6g} < 1/2)"),
            n_minus=n_minus)
    return result
