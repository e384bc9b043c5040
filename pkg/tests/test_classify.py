import math

import numpy as np
import pytest

from qtriad.classify import (
    SchmidtForm,
    StratumLabel,
    classify,
    schmidt_decompose,
    shell_radius,
)
from qtriad.projection import ball_point, quaternify, stereo_project
from qtriad.quaternion import is_infinite
from qtriad.states import (
    TwoQubitState,
    concurrence,
    make_state,
    purity,
    reduced_density_photon,
    visibility,
)

RNG = np.random.default_rng(404)

BELL = make_state((1, 0, 0, 1), normalize=True)


def random_state():
    v = RNG.normal(size=8)
    return make_state(
        [complex(v[2 * k], v[2 * k + 1]) for k in range(4)], normalize=True
    )


# ------------------------------------------------------------------- classify

def test_classify_bell():
    assert classify(BELL) == {
        StratumLabel.MAXIMALLY_ENTANGLED,
        StratumLabel.WAVE_LESS,
        StratumLabel.PARTICLE_LESS,
        StratumLabel.ON_X0_AXIS,
        StratumLabel.ON_GREAT_DISC,
    }


def test_classify_equal_superposition():
    s = make_state((1, 0, 1, 0), normalize=True)
    assert classify(s) == {
        StratumLabel.SEPARABLE,
        StratumLabel.WAVE_ONLY,
        StratumLabel.PARTICLE_LESS,
        StratumLabel.ON_GREAT_DISC,
    }


def test_classify_partially_entangled_diagonal():
    s = make_state((0.6, 0, 0, 0.8))
    assert classify(s) == {StratumLabel.WAVE_LESS, StratumLabel.ON_X0_AXIS}


def test_classify_basis_state():
    s = make_state((1, 0, 0, 0))
    assert classify(s) == {
        StratumLabel.SEPARABLE,
        StratumLabel.PARTICLE_ONLY,
        StratumLabel.WAVE_LESS,
        StratumLabel.ON_X0_AXIS,
    }


def test_classify_rejects_bad_tolerance():
    with pytest.raises(ValueError):
        classify(BELL, tol=0.0)


def _wave_only_state():
    # equatorial path qubit times a random partner state: V = 1 exactly
    v = RNG.normal(size=4)
    a, b = complex(v[0], v[1]), complex(v[2], v[3])
    n = math.hypot(abs(a), abs(b))
    a, b = a / n, b / n
    delta = RNG.uniform(0, 2 * math.pi)
    phase = complex(math.cos(delta), math.sin(delta))
    r = 1 / math.sqrt(2)
    return TwoQubitState((r * a, r * b, r * phase * a, r * phase * b))


def test_stratum_implications_on_constructed_members():
    for _ in range(100):
        labels = classify(_wave_only_state())
        assert StratumLabel.WAVE_ONLY in labels
        assert StratumLabel.SEPARABLE in labels
        assert StratumLabel.PARTICLE_LESS in labels

    for _ in range(100):
        v = RNG.normal(size=4)
        a, b = complex(v[0], v[1]), complex(v[2], v[3])
        n = math.hypot(abs(a), abs(b))
        s = TwoQubitState((a / n, b / n, 0j, 0j))  # particle-only member
        labels = classify(s)
        assert StratumLabel.PARTICLE_ONLY in labels
        assert StratumLabel.SEPARABLE in labels
        assert StratumLabel.WAVE_LESS in labels

    for _ in range(100):
        s = _random_maximally_entangled()
        labels = classify(s)
        assert StratumLabel.MAXIMALLY_ENTANGLED in labels
        assert StratumLabel.WAVE_LESS in labels
        assert StratumLabel.PARTICLE_LESS in labels


def _random_qubit_unitary():
    z = RNG.normal(size=(2, 2)) + 1j * RNG.normal(size=(2, 2))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def _random_maximally_entangled():
    psi = np.array([1, 0, 0, 1], dtype=complex).reshape(2, 2) / math.sqrt(2)
    psi = _random_qubit_unitary() @ psi @ _random_qubit_unitary().T
    return TwoQubitState(tuple(psi.reshape(4)))


def test_classify_agrees_with_projection_geometry():
    tol = 1e-9
    for _ in range(300):
        s = random_state()
        labels = classify(s, tol)
        q = stereo_project(quaternify(s))
        if StratumLabel.PARTICLE_LESS in labels:
            assert not is_infinite(q)
            assert abs(q.norm() - 1.0) <= 10 * tol
        if StratumLabel.PARTICLE_ONLY in labels:
            assert is_infinite(q) or q.norm() <= 10 * tol
        if StratumLabel.ON_GREAT_DISC in labels:
            assert abs(ball_point(s).x0) <= tol
    # particle-only members hit Q in {0, inf}
    assert is_infinite(stereo_project(quaternify(make_state((1, 0, 0, 0)))))
    q = stereo_project(quaternify(make_state((0, 0, 1, 0))))
    assert q.norm() == 0.0


# ------------------------------------------------------------------- schmidt

def test_schmidt_bell_is_degenerate_with_canonical_basis():
    form = schmidt_decompose(BELL)
    r = 1 / math.sqrt(2)
    assert abs(form.lambda1 - r) < 1e-15
    assert abs(form.lambda2 - r) < 1e-15
    assert form.basis2 == ((1 + 0j, 0j), (0j, 1 + 0j))


def test_schmidt_product_state():
    form = schmidt_decompose(make_state((1, 0, 0, 0)))
    assert abs(form.lambda1 - 1.0) < 1e-15
    assert form.lambda2 < 1e-15


def test_schmidt_worked_diagonal():
    form = schmidt_decompose(make_state((0.6, 0, 0, 0.8)))
    assert abs(form.lambda1 - 0.8) < 1e-15
    assert abs(form.lambda2 - 0.6) < 1e-15
    assert abs(2 * form.lambda1 * form.lambda2 - 0.96) < 1e-15


def test_schmidt_concurrence_bridge():
    for _ in range(500):
        s = random_state()
        form = schmidt_decompose(s)
        assert abs(concurrence(s) - 2 * form.lambda1 * form.lambda2) <= 1e-12


def test_schmidt_reconstructs_state():
    for _ in range(300):
        s = random_state()
        form = schmidt_decompose(s)
        m = np.array(s.alpha).reshape(2, 2)
        rebuilt = np.zeros((2, 2), dtype=complex)
        for lam, w in zip((form.lambda1, form.lambda2), form.basis2):
            wv = np.array(w)
            if lam < 1e-14:
                continue
            u = m @ wv.conj() / lam
            rebuilt += lam * np.outer(u, wv)
        assert np.max(np.abs(rebuilt - m)) < 1e-12


def test_schmidt_basis_phase_convention():
    for _ in range(200):
        form = schmidt_decompose(random_state())
        for w in form.basis2:
            lead = w[0] if abs(w[0]) > 1e-12 else w[1]
            assert abs(lead.imag) < 1e-12
            assert lead.real > 0


def test_schmidt_zero_coherence_states_match_branch_weights():
    for _ in range(200):
        # rows of the amplitude matrix made orthogonal: zero coherence
        v = RNG.normal(size=8)
        row0 = np.array([complex(v[0], v[1]), complex(v[2], v[3])])
        row1 = np.array([complex(v[4], v[5]), complex(v[6], v[7])])
        row1 -= (np.vdot(row0, row1) / np.vdot(row0, row0)) * row0
        amps = np.concatenate([row0, row1])
        s = make_state(tuple(amps), normalize=True)
        assert visibility(s) <= 1e-12
        a0, a1, a2, a3 = s.alpha
        weights = sorted(
            (
                math.sqrt(abs(a0) ** 2 + abs(a1) ** 2),
                math.sqrt(abs(a2) ** 2 + abs(a3) ** 2),
            ),
            reverse=True,
        )
        form = schmidt_decompose(s)
        assert abs(form.lambda1 - weights[0]) < 1e-12
        assert abs(form.lambda2 - weights[1]) < 1e-12


def test_schmidt_form_validation():
    with pytest.raises(ValueError):
        SchmidtForm(0.6, 0.8, ((1 + 0j, 0j), (0j, 1 + 0j)))
    with pytest.raises(ValueError):
        SchmidtForm(1.0, 0.5, ((1 + 0j, 0j), (0j, 1 + 0j)))
    with pytest.raises(ValueError):
        SchmidtForm(0.8, 0.6, ((1 + 0j, 0j), (1 + 0j, 0j)))


# ------------------------------------------------------------------- bridges

def test_entanglement_purity_bridge():
    for _ in range(500):
        s = random_state()
        c = concurrence(s)
        p = purity(reduced_density_photon(s))
        assert abs(c * c - 2.0 * (1.0 - p)) <= 1e-10


def test_shell_membership_at_fixed_concurrence():
    for c_target in (0.0, 0.3, 0.6, 0.9, 1.0):
        root = math.sqrt(1 - c_target * c_target)
        lam1 = math.sqrt((1 + root) / 2)
        lam2 = math.sqrt((1 - root) / 2)
        base = np.diag([lam1, lam2]).astype(complex)
        for _ in range(50):
            psi = _random_qubit_unitary() @ base @ _random_qubit_unitary().T
            s = TwoQubitState(tuple(psi.reshape(4)))
            assert abs(ball_point(s).radius - root) <= 1e-10


# --------------------------------------------------------------- shell radius

def test_shell_radius_values():
    assert shell_radius(0.0) == 1.0
    assert shell_radius(1.0) == 0.0
    assert abs(shell_radius(0.96) - 0.28) < 1e-15


def test_shell_radius_domain():
    with pytest.raises(ValueError):
        shell_radius(-0.1)
    with pytest.raises(ValueError):
        shell_radius(1.1)
    # slack band is accepted and clamped
    assert shell_radius(1.0 + 1e-13) == 0.0
    assert shell_radius(-1e-13) == 1.0
