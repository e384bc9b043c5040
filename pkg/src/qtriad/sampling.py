"""Deterministic, seedable state ensembles.

Reproducibility contract
------------------------
Sample ``i`` of a run is a pure function of ``(seed, i)``:

* Randomness comes from numpy's Philox counter-based generator keyed by the
  64-bit seed. Sample ``i`` owns the private counter block starting at
  ``i * 2**128``, so streams never overlap and any subset of indices can be
  generated independently, in any order, on any number of workers.
* Uniform doubles are the generator's standard 53-bit variates.
* Normal variates use the Marsaglia polar method: consecutive uniform pairs
  (u, v) are mapped to (2u-1, 2v-1), rejected unless 0 < s = x^2+y^2 < 1, and
  accepted pairs yield (x, y) * sqrt(-2 ln(s)/s). Uniforms are consumed in
  blocks of 16.

The same (seed, index) therefore reproduces the same state bit for bit across
runs and platforms, which is what lets dataset emission be byte-stable.

Ensembles
---------
haar        4 complex amplitudes from 8 normals, normalized (unitarily
            invariant measure on pure states).
separable   product of two independent single-qubit Haar states.
fixedc      Schmidt-form state with concurrence C, randomized by independent
            Haar single-qubit unitaries on both factors.
bloch       deterministic theta grid of single-qubit product states (no
            randomness; the seed is ignored).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .states import BlochAngles, TwoQubitState, bloch_state

HAAR = "haar"
SEPARABLE = "separable"
FIXED_CONCURRENCE = "fixedc"
BLOCH_GRID = "bloch"

ENSEMBLES = (HAAR, SEPARABLE, FIXED_CONCURRENCE, BLOCH_GRID)

_MAX_SEED = 2**64 - 1


@dataclass(frozen=True, slots=True)
class SampleSpec:
    """What to sample: ensemble, size, and the stream seed."""

    count: int
    seed: int
    ensemble: str
    c: float | None = None

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be at least 1")
        if not 0 <= self.seed <= _MAX_SEED:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.ensemble not in ENSEMBLES:
            raise ValueError(f"unknown ensemble {self.ensemble!r}")
        if self.ensemble == FIXED_CONCURRENCE:
            if self.c is None or not 0.0 <= self.c <= 1.0:
                raise ValueError("fixedc requires a concurrence c in [0, 1]")


def _substream(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed, counter=index << 128))


def _polar_normals(gen: np.random.Generator, count: int) -> list[float]:
    # Marsaglia polar rejection over consecutive uniform pairs.
    out = []
    while len(out) < count:
        block = gen.random(16).tolist()
        for j in range(0, 16, 2):
            x = 2.0 * block[j] - 1.0
            y = 2.0 * block[j + 1] - 1.0
            s = x * x + y * y
            if 0.0 < s < 1.0:
                f = math.sqrt(-2.0 * math.log(s) / s)
                out.append(x * f)
                out.append(y * f)
                if len(out) >= count:
                    break
    return out[:count]


def _normalized_pair(n0, n1, n2, n3) -> tuple[complex, complex]:
    a = complex(n0, n1)
    b = complex(n2, n3)
    w = math.hypot(n0, n1, n2, n3)
    return a / w, b / w


def haar_state(seed: int, index: int) -> TwoQubitState:
    """Haar-random two-qubit pure state for the given stream index."""
    n = _polar_normals(_substream(seed, index), 8)
    w = math.hypot(*n)
    return TwoQubitState(
        (
            complex(n[0], n[1]) / w,
            complex(n[2], n[3]) / w,
            complex(n[4], n[5]) / w,
            complex(n[6], n[7]) / w,
        )
    )


def separable_state(seed: int, index: int) -> TwoQubitState:
    """Product of two independent Haar single-qubit states."""
    n = _polar_normals(_substream(seed, index), 8)
    a, b = _normalized_pair(n[0], n[1], n[2], n[3])
    c, d = _normalized_pair(n[4], n[5], n[6], n[7])
    return TwoQubitState((a * c, a * d, b * c, b * d))


def _haar_qubit_unitary(gen) -> tuple[complex, complex, complex, complex]:
    # Haar on U(2): uniform phase times an SU(2) element built from a point
    # on S^3. Returned row-major as (u00, u01, u10, u11).
    n = _polar_normals(gen, 4)
    a, b = _normalized_pair(n[0], n[1], n[2], n[3])
    t = 2.0 * math.pi * float(gen.random())
    phase = complex(math.cos(t), math.sin(t))
    return (phase * a, -phase * b.conjugate(), phase * b, phase * a.conjugate())


def fixed_concurrence_state(seed: int, index: int, c: float) -> TwoQubitState:
    """Random state of concurrence exactly c (up to roundoff).

    Starts from the Schmidt form lambda1*|0e> + lambda2*|1f> with
    2*lambda1*lambda2 = c and applies independent Haar unitaries to both
    qubits, which moves the state around its shell without changing C.
    """
    if not 0.0 <= c <= 1.0:
        raise ValueError("concurrence must lie in [0, 1]")
    root = math.sqrt(max(1.0 - c * c, 0.0))
    lam1 = math.sqrt(0.5 * (1.0 + root))
    lam2 = math.sqrt(max(0.5 * (1.0 - root), 0.0))
    gen = _substream(seed, index)
    u00, u01, u10, u11 = _haar_qubit_unitary(gen)
    w00, w01, w10, w11 = _haar_qubit_unitary(gen)
    # (U x W) applied to (lam1, 0, 0, lam2).
    return TwoQubitState(
        (
            lam1 * u00 * w00 + lam2 * u01 * w01,
            lam1 * u00 * w10 + lam2 * u01 * w11,
            lam1 * u10 * w00 + lam2 * u11 * w01,
            lam1 * u10 * w10 + lam2 * u11 * w11,
        )
    )


def bloch_grid_states(count: int) -> list[TwoQubitState]:
    """Deterministic theta grid over [0, pi] at phi = 0 (product states)."""
    if count < 1:
        raise ValueError("count must be at least 1")
    if count == 1:
        return [bloch_state(BlochAngles(0.0, 0.0))]
    step = math.pi / (count - 1)
    return [bloch_state(BlochAngles(min(i * step, math.pi), 0.0)) for i in range(count)]


def sample_haar(spec: SampleSpec) -> list[TwoQubitState]:
    if spec.ensemble != HAAR:
        raise ValueError("spec.ensemble must be 'haar'")
    return [haar_state(spec.seed, i) for i in range(spec.count)]


def sample_separable(spec: SampleSpec) -> list[TwoQubitState]:
    if spec.ensemble != SEPARABLE:
        raise ValueError("spec.ensemble must be 'separable'")
    return [separable_state(spec.seed, i) for i in range(spec.count)]


def sample_fixed_concurrence(spec: SampleSpec) -> list[TwoQubitState]:
    if spec.ensemble != FIXED_CONCURRENCE:
        raise ValueError("spec.ensemble must be 'fixedc'")
    return [fixed_concurrence_state(spec.seed, i, spec.c) for i in range(spec.count)]


def sample(spec: SampleSpec) -> list[TwoQubitState]:
    """Dispatch on the spec's ensemble."""
    if spec.ensemble == HAAR:
        return sample_haar(spec)
    if spec.ensemble == SEPARABLE:
        return sample_separable(spec)
    if spec.ensemble == FIXED_CONCURRENCE:
        return sample_fixed_concurrence(spec)
    return bloch_grid_states(spec.count)
