"""Two-qubit pure states and their wave, particle, and entanglement measures.

Amplitudes are ordered over the product basis |0e>, |0f>, |1e>, |1f>: the
first label is the path qubit (0/1), the second the partner system (e/f).
Two scalar combinations drive everything downstream:

    coherence   = conj(a2)*a0 + conj(a3)*a1      (off-diagonal of the path state)
    determinant = a1*a2 - a0*a3                  (amplitude-matrix determinant)

Visibility is 2|coherence|, concurrence is 2|determinant|, and
distinguishability is the population imbalance of the path qubit. For any
normalized state V^2 + D^2 + C^2 = 1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

# Validation band for unit-norm inputs accepted without rescaling.
NORM_TOL = 1e-9


class DualityTriad(NamedTuple):
    """Visibility, distinguishability, concurrence; each in [0, 1]."""

    V: float
    D: float
    C: float


@dataclass(frozen=True, slots=True)
class TwoQubitState:
    """Normalized four-amplitude record over |0e>, |0f>, |1e>, |1f>."""

    alpha: tuple[complex, complex, complex, complex]

    def __post_init__(self):
        alpha = tuple(complex(a) for a in self.alpha)
        if len(alpha) != 4:
            raise ValueError("a two-qubit state needs exactly 4 amplitudes")
        object.__setattr__(self, "alpha", alpha)
        n = math.sqrt(sum(a.real * a.real + a.imag * a.imag for a in alpha))
        if not math.isfinite(n) or abs(n - 1.0) > NORM_TOL:
            raise ValueError(f"amplitudes are not normalized: |amp| = {n!r}")


def make_state(amplitudes: Sequence[complex], normalize: bool = False) -> TwoQubitState:
    """Build a TwoQubitState from 4 amplitudes.

    With ``normalize`` the input is rescaled to unit norm; without it, inputs
    whose norm deviates from 1 by more than ``NORM_TOL`` are rejected so that
    typos do not get silently absorbed.
    """
    alpha = tuple(complex(a) for a in amplitudes)
    if len(alpha) != 4:
        raise ValueError("expected 4 amplitudes")
    n = math.sqrt(sum(a.real * a.real + a.imag * a.imag for a in alpha))
    if not math.isfinite(n):
        raise ValueError("amplitudes must be finite")
    if n == 0.0:
        raise ValueError("all-zero amplitudes do not define a state")
    if normalize:
        alpha = tuple(a / n for a in alpha)
    return TwoQubitState(alpha)


@dataclass(frozen=True, slots=True)
class CorrelatedState:
    """Path qubit correlated with a d-dimensional partner.

    The state is mu*|0>|chi1> + nu*|1>|chi2> where chi1, chi2 are unit vectors
    of the same dimension d >= 1, not necessarily orthogonal. Invariants after
    construction: each chi has unit norm and |mu|^2 + |nu|^2 = 1.
    """

    mu: complex
    nu: complex
    chi1: tuple[complex, ...]
    chi2: tuple[complex, ...]

    def __post_init__(self):
        chi1 = tuple(complex(c) for c in self.chi1)
        chi2 = tuple(complex(c) for c in self.chi2)
        if len(chi1) == 0 or len(chi1) != len(chi2):
            raise ValueError("chi1 and chi2 must share a dimension d >= 1")
        object.__setattr__(self, "mu", complex(self.mu))
        object.__setattr__(self, "nu", complex(self.nu))
        object.__setattr__(self, "chi1", chi1)
        object.__setattr__(self, "chi2", chi2)
        n1 = _vec_norm(chi1)
        n2 = _vec_norm(chi2)
        if not (math.isfinite(n1) and math.isfinite(n2)):
            raise ValueError("chi entries must be finite")
        if abs(n1 - 1.0) > NORM_TOL or abs(n2 - 1.0) > NORM_TOL:
            raise ValueError("chi1 and chi2 must be unit vectors")
        w = math.hypot(abs(self.mu), abs(self.nu))
        if not math.isfinite(w) or abs(w - 1.0) > NORM_TOL:
            raise ValueError("|mu|^2 + |nu|^2 must equal 1")


def _vec_norm(v) -> float:
    return math.sqrt(sum(c.real * c.real + c.imag * c.imag for c in v))


def make_correlated(
    mu: complex,
    nu: complex,
    chi1: Sequence[complex],
    chi2: Sequence[complex],
    normalize: bool = False,
) -> CorrelatedState:
    """Build a CorrelatedState; optionally rescale it onto the invariants.

    Rescaling folds each chi's norm into its branch weight and then scales
    (mu, nu) to unit combined weight, which leaves the physical ray untouched.
    Zero-norm chi vectors (or a combined zero weight) are rejected.
    """
    c1 = tuple(complex(c) for c in chi1)
    c2 = tuple(complex(c) for c in chi2)
    m, n = complex(mu), complex(nu)
    if normalize:
        n1 = _vec_norm(c1)
        n2 = _vec_norm(c2)
        if n1 == 0.0 or n2 == 0.0:
            raise ValueError("chi vectors must have nonzero norm")
        c1 = tuple(c / n1 for c in c1)
        c2 = tuple(c / n2 for c in c2)
        m *= n1
        n *= n2
        w = math.hypot(abs(m), abs(n))
        if w == 0.0:
            raise ValueError("mu and nu cannot both vanish")
        m /= w
        n /= w
    return CorrelatedState(m, n, c1, c2)


def embed_correlated(c: CorrelatedState) -> TwoQubitState:
    """Map a correlated state onto the two-qubit form.

    The partner space is reduced to the plane spanned by chi1 and chi2 via
    Gram-Schmidt with e = chi1, f = orthogonalized chi2. The output amplitudes
    are (mu, 0, nu*<e|chi2>, nu*r) with r the residual norm of chi2 off e.
    When chi2 is (numerically) parallel to chi1 the residual amplitude is ~0,
    so the completion direction never shows up in the output.
    """
    overlap = sum(e.conjugate() * x for e, x in zip(c.chi1, c.chi2))
    resid_sq = sum(
        abs(x - overlap * e) ** 2 for e, x in zip(c.chi1, c.chi2)
    )
    resid = math.sqrt(resid_sq)
    return make_state((c.mu, 0j, c.nu * overlap, c.nu * resid), normalize=True)


@dataclass(frozen=True, slots=True)
class DensityMatrix2:
    """2x2 Hermitian unit-trace density matrix.

    Stored as the two real diagonals and the upper off-diagonal entry; the
    lower one is its conjugate by construction, so Hermiticity is structural.
    """

    rho00: float
    rho01: complex
    rho11: float

    def __post_init__(self):
        object.__setattr__(self, "rho00", float(self.rho00))
        object.__setattr__(self, "rho01", complex(self.rho01))
        object.__setattr__(self, "rho11", float(self.rho11))
        trace = self.rho00 + self.rho11
        if not math.isfinite(trace) or abs(trace - 1.0) > NORM_TOL:
            raise ValueError("trace must be 1")
        if not abs(self.rho01) <= 1.0 or min(self.eigenvalues()) < -NORM_TOL:
            raise ValueError("matrix must be positive semidefinite")

    @property
    def rho10(self) -> complex:
        return self.rho01.conjugate()

    def eigenvalues(self) -> tuple[float, float]:
        """Eigenvalues in descending order (closed form for 2x2 Hermitian)."""
        mean = 0.5 * (self.rho00 + self.rho11)
        off = math.hypot(0.5 * (self.rho00 - self.rho11), abs(self.rho01))
        return (mean + off, mean - off)

    def as_array(self) -> np.ndarray:
        return np.array(
            [[self.rho00, self.rho01], [self.rho10, self.rho11]], dtype=complex
        )


def reduced_density_photon(s: TwoQubitState) -> DensityMatrix2:
    """Reduced state of the path qubit (partner traced out).

    The off-diagonal is stored as the coherence term conj(a2)*a0 + conj(a3)*a1.
    """
    a0, a1, a2, a3 = s.alpha
    p0 = abs(a0) ** 2 + abs(a1) ** 2
    p1 = abs(a2) ** 2 + abs(a3) ** 2
    return DensityMatrix2(p0, a2.conjugate() * a0 + a3.conjugate() * a1, p1)


def reduced_density_second(s: TwoQubitState) -> DensityMatrix2:
    """Reduced state of the partner qubit (path qubit traced out).

    Off-diagonal conj(a1)*a0 + conj(a3)*a2, i.e. the partial trace over the
    first factor written in the same coherence orientation as the photon case.
    """
    a0, a1, a2, a3 = s.alpha
    pe = abs(a0) ** 2 + abs(a2) ** 2
    pf = abs(a1) ** 2 + abs(a3) ** 2
    return DensityMatrix2(pe, a1.conjugate() * a0 + a3.conjugate() * a2, pf)


def visibility(s: TwoQubitState) -> float:
    """Interference-fringe visibility: twice the path-qubit coherence modulus."""
    a0, a1, a2, a3 = s.alpha
    return 2.0 * abs(a2.conjugate() * a0 + a3.conjugate() * a1)


def distinguishability(s: TwoQubitState) -> float:
    """Which-path knowledge: absolute population imbalance of the path qubit."""
    a0, a1, a2, a3 = s.alpha
    p0 = abs(a0) ** 2 + abs(a1) ** 2
    p1 = abs(a2) ** 2 + abs(a3) ** 2
    return abs(p0 - p1)


def concurrence(s: TwoQubitState) -> float:
    """Entanglement of the pure state: 2|a1*a2 - a0*a3|.

    Equals twice the modulus of the amplitude-matrix determinant, hence 0 for
    product states and 1 for maximally entangled ones.
    """
    a0, a1, a2, a3 = s.alpha
    return 2.0 * abs(a1 * a2 - a0 * a3)


def triad(s: TwoQubitState) -> DualityTriad:
    """The (V, D, C) triple; satisfies V^2 + D^2 + C^2 = 1."""
    return DualityTriad(visibility(s), distinguishability(s), concurrence(s))


def second_subsystem_triad(s: TwoQubitState) -> DualityTriad:
    """(V', D', C) with the roles of the two qubits exchanged.

    V' and D' come from the partner qubit's reduced density matrix; C is
    symmetric under the exchange, and V'^2 + D'^2 + C^2 = 1 again.
    """
    rho = reduced_density_second(s)
    return DualityTriad(
        2.0 * abs(rho.rho01), abs(rho.rho00 - rho.rho11), concurrence(s)
    )


def fringe_extrema(s: TwoQubitState, grid: int = 360) -> tuple[float, float]:
    """Detection-probability extrema over a relative phase applied to |1>.

    Scans p(delta) = |a0 + e^{i delta} a2|^2/2 + |a1 + e^{i delta} a3|^2/2
    (the probability of the symmetric path superposition) over a uniform grid
    plus the analytic extremum phases, and returns (p_max, p_min). The fringe
    contrast (p_max - p_min)/(p_max + p_min) reproduces ``visibility``.
    """
    if grid < 4:
        raise ValueError("grid must be at least 4")
    a0, a1, a2, a3 = s.alpha
    coherence = a2.conjugate() * a0 + a3.conjugate() * a1
    peak = cmath.phase(coherence) if coherence != 0 else 0.0
    deltas = np.empty(grid + 2)
    deltas[:grid] = np.arange(grid) * (2.0 * math.pi / grid)
    deltas[grid] = peak
    deltas[grid + 1] = peak + math.pi
    phase = np.exp(1j * deltas)
    p = 0.5 * np.abs(a0 + phase * a2) ** 2 + 0.5 * np.abs(a1 + phase * a3) ** 2
    return (float(p.max()), float(p.min()))


def purity(rho: DensityMatrix2) -> float:
    """Tr(rho^2); 1 for pure states, 1/2 for the maximally mixed qubit."""
    off = abs(rho.rho01)
    return rho.rho00 * rho.rho00 + rho.rho11 * rho.rho11 + 2.0 * off * off


@dataclass(frozen=True, slots=True)
class BlochAngles:
    """Polar/azimuthal angles of a single-qubit pure state."""

    theta: float
    phi: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError("theta must lie in [0, pi]")
        if not 0.0 <= self.phi < 2.0 * math.pi:
            raise ValueError("phi must lie in [0, 2*pi)")


def bloch_state(b: BlochAngles) -> TwoQubitState:
    """Product state cos(theta/2)|0e> + e^{i phi} sin(theta/2)|1e>.

    Its triad is (sin(theta), |cos(theta)|, 0), so V^2 + D^2 = 1 on the whole
    sphere of such states.
    """
    half = 0.5 * b.theta
    return TwoQubitState(
        (
            complex(math.cos(half)),
            0j,
            cmath.exp(1j * b.phi) * math.sin(half),
            0j,
        )
    )
