"""State generators, Gaussian channels, and property-test samplers.

The workhorse family is the two-mode squeezed thermal state produced by
a noisy nonlinear crystal: it is symmetric (n1 = n2), has no ms
correlation, and interpolates between the two-mode squeezed vacuum
(zero dissipation) and thermal-like separable states.  A lossy-fiber
attenuation channel acts directly on standard-form parameters and is
what breaks the n1 = n2 symmetry in the asymmetric configuration.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    CovarianceMatrix,
    StandardFormParams,
    build_standard_cm,
    is_physical,
)


class InvalidTransmission(ValueError):
    """Fiber transmission coefficients must lie in (0, 1]."""


@dataclass(frozen=True)
class TmtssParams:
    """Crystal knobs: dissipation d, squeezing r, thermal occupation."""

    d: float
    r: float
    nbar: float

    def __post_init__(self):
        if self.d < 0 or self.r < 0 or self.nbar < 0:
            raise ValueError("d, r and nbar must all be non-negative")


@dataclass(frozen=True)
class FiberParams:
    """Transmission coefficients of the two fiber arms.

    ``asymmetric`` builds the standard lossy configuration where only
    the second arm attenuates, t2 = exp(-ell); ell = 0 reduces to the
    symmetric (identity) configuration.
    """

    t1: float = 1.0
    t2: float = 1.0
    ell: float = 0.0

    def __post_init__(self):
        for t in (self.t1, self.t2):
            if not 0.0 < t <= 1.0:
                raise InvalidTransmission(f"transmission {t!r} not in (0, 1]")
        if self.ell < 0:
            raise InvalidTransmission(f"fiber length {self.ell!r} < 0")

    @classmethod
    def asymmetric(cls, ell: float):
        return cls(1.0, float(np.exp(-ell)), ell)


@dataclass(frozen=True)
class LocalSymplectic:
    """A block-diagonal local symplectic transformation.

    Each 2x2 block has the form [[a, b], [conj(b), conj(a)]] with
    |a|^2 - |b|^2 = 1, which is exactly the condition for the assembled
    matrix S to satisfy S^-1 = E S+ E.
    """

    s1: np.ndarray
    s2: np.ndarray

    def __post_init__(self):
        for name, s in (("s1", self.s1), ("s2", self.s2)):
            s = np.asarray(s, dtype=complex)
            if s.shape != (2, 2):
                raise ValueError(f"{name} must be 2x2")
            if (abs(s[1, 1] - np.conj(s[0, 0])) > 1e-12
                    or abs(s[1, 0] - np.conj(s[0, 1])) > 1e-12):
                raise ValueError(f"{name} lacks the conjugate block form")
            det = abs(s[0, 0]) ** 2 - abs(s[0, 1]) ** 2
            if abs(det - 1.0) > 1e-12:
                raise ValueError(f"{name}: |a|^2 - |b|^2 = {det!r} != 1")
            s.flags.writeable = False
            object.__setattr__(self, name, s)

    @property
    def matrix(self):
        m = np.zeros((4, 4), dtype=complex)
        m[:2, :2] = self.s1
        m[2:, 2:] = self.s2
        return m


def _one_minus_exp_over(p):
    # (1 - exp(-p))/p with its removable singularity at p = 0;
    # expm1 keeps full accuracy through the p2 = d - 2r zero crossing
    if p == 0.0:
        return 1.0
    return -np.expm1(-p) / p


def tmtss(p: TmtssParams) -> StandardFormParams:
    """Two-mode squeezed thermal state of a noisy crystal.

    The two principal variances are h_i = exp(-p_i) +
    d(2 nbar + 1)(1 - exp(-p_i))/p_i with p_{1,2} = d +- 2r; the state
    has n = (h1 + h2)/4, ms = 0, mc = (h1 - h2)/4.  The d -> 0 limit is
    the pure two-mode squeezed vacuum.
    """
    scale = p.d * (2 * p.nbar + 1)
    h = [float(np.exp(-pi) + scale * _one_minus_exp_over(pi))
         for pi in (p.d + 2 * p.r, p.d - 2 * p.r)]
    n = (h[0] + h[1]) / 4
    mc = (h[0] - h[1]) / 4
    return StandardFormParams(n, n, 0.0, mc)


def tmsv(r: float) -> StandardFormParams:
    """Pure two-mode squeezed vacuum with squeezing parameter r."""
    if r < 0:
        raise ValueError("squeezing parameter must be non-negative")
    n = float(np.cosh(2 * r) / 2)
    return StandardFormParams(n, n, 0.0, float(-np.sinh(2 * r) / 2))


def _attenuate(n, t):
    # t == 1 must be an exact identity, not a round-tripped float
    return n if t == 1.0 else (n - 0.5) * t * t + 0.5


def lossy_fiber(sp: StandardFormParams, f: FiberParams) -> StandardFormParams:
    """Send each mode through a lossy fiber arm.

    Thermal parts relax toward the vacuum value 1/2 as n' =
    (n - 1/2) t^2 + 1/2 while the correlations pick up one factor of
    each transmission.
    """
    return StandardFormParams(
        _attenuate(sp.n1, f.t1),
        _attenuate(sp.n2, f.t2),
        sp.ms * f.t1 * f.t2,
        sp.mc * f.t1 * f.t2,
    )


def make_local_symplectic(theta1, r1, phi1, theta2, r2, phi2) -> LocalSymplectic:
    """Local symplectic from per-mode rotation, squeeze and squeeze
    phase: a = e^{i theta} cosh r, b = e^{i phi} sinh r."""
    def block(theta, r, phi):
        a = np.exp(1j * theta) * np.cosh(r)
        b = np.exp(1j * phi) * np.sinh(r)
        return np.array([[a, b], [np.conj(b), np.conj(a)]])

    return LocalSymplectic(block(theta1, r1, phi1), block(theta2, r2, phi2))


def apply_local(v: CovarianceMatrix, s: LocalSymplectic) -> CovarianceMatrix:
    """Conjugate the CM: V -> S+ V S.  Preserves all local invariants,
    physicality, purity, and both intervals."""
    m = s.matrix
    return CovarianceMatrix(m.conj().T @ v.entries @ m)


# sampler ranges: wide enough to cover both sides of the separability
# boundary without numerically extreme states
_N_RANGE = (0.5, 3.0)
_M_RANGE = (-2.0, 2.0)
_SQUEEZE_MAX = 1.5


def random_standard_params(rng) -> StandardFormParams:
    """Rejection-sample physical standard-form parameters."""
    while True:
        sp = StandardFormParams(
            rng.uniform(*_N_RANGE), rng.uniform(*_N_RANGE),
            rng.uniform(*_M_RANGE), rng.uniform(*_M_RANGE))
        if is_physical(build_standard_cm(sp)):
            return sp


def random_local_symplectic(rng) -> LocalSymplectic:
    """Random local symplectic within the sampler's squeeze budget."""
    th1, ph1, th2, ph2 = rng.uniform(0.0, 2 * np.pi, 4)
    r1, r2 = rng.uniform(0.0, _SQUEEZE_MAX, 2)
    return make_local_symplectic(th1, r1, ph1, th2, r2, ph2)


def random_physical_state(seed: int, transform: bool = True) -> CovarianceMatrix:
    """Deterministic random physical CM for a given seed.

    Draws physical standard-form parameters and, on a coin flip (when
    ``transform`` is allowed), conjugates by a random local symplectic
    so the ensemble also covers states away from standard form.
    """
    rng = np.random.default_rng(seed)
    v = build_standard_cm(random_standard_params(rng))
    if transform and rng.uniform() < 0.5:
        v = apply_local(v, random_local_symplectic(rng))
    return v


def random_noise_cm(rng, max_norm: float = 1.0) -> CovarianceMatrix:
    """Random classical-noise CM: local (block-diagonal) and PSD.

    Each mode block is B B+ for a random conjugate-structured complex
    block B, and the whole matrix is rescaled to a uniform random
    spectral norm below ``max_norm``.  Keeping the noise local is what
    makes the interval measure provably non-increasing on the sampled
    ensemble; correlated noise blocks can increase it.
    """
    def block():
        a = rng.normal() + 1j * rng.normal()
        b = rng.normal() + 1j * rng.normal()
        m = np.array([[a, b], [np.conj(b), np.conj(a)]])
        return m @ m.conj().T

    p = np.zeros((4, 4), dtype=complex)
    p[:2, :2] = block()
    p[2:, 2:] = block()
    top = np.linalg.eigvalsh(p)[-1]
    if top > 0:
        p *= rng.uniform(0.0, max_norm) / top
    return CovarianceMatrix(p)
