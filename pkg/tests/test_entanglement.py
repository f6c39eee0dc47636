import numpy as np
import pytest

from noisy_cluster.channels import ChannelKind, decohered_cluster
from noisy_cluster.entanglement import (
    esd_threshold,
    negativity,
    witness_crossing,
    witness_expectation,
    witness_operator,
)
from noisy_cluster.states import InitialState, build_cluster
from noisy_cluster.tensor_core import DensityMatrix

ALPHA_MAX = InitialState(np.pi / 4, 0.0)


def random_product_state(rng):
    mats = []
    for _ in range(4):
        v = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        v /= np.linalg.norm(v)
        mats.append(np.outer(v, v.conj()))
    out = mats[0]
    for m in mats[1:]:
        out = np.kron(out, m)
    return DensityMatrix(out)


def test_product_states_have_zero_negativity():
    rng = np.random.default_rng(0)
    for _ in range(10):
        rho = random_product_state(rng)
        for subset in ([1], [3], [1, 2], [2, 4]):
            assert negativity(rho, subset).value < 1e-12


def test_cluster_negativities_frozen_values():
    # frozen from the partial-transpose eigendecomposition oracle
    rho = build_cluster(ALPHA_MAX)
    assert negativity(rho, [1]).value == pytest.approx(0.5, abs=1e-12)
    assert negativity(rho, [1, 3]).value == pytest.approx(0.25, abs=1e-12)
    assert negativity(rho, [1, 2]).value == pytest.approx(0.5, abs=1e-12)


def test_negativity_subset_validation():
    rho = build_cluster(ALPHA_MAX)
    with pytest.raises(ValueError):
        negativity(rho, [])
    with pytest.raises(ValueError):
        negativity(rho, [1, 2, 3, 4])


def test_witness_operator_structure():
    w0 = witness_operator(0.0)
    expected = np.eye(16) / 2 - build_cluster(ALPHA_MAX).mat
    assert np.abs(w0.matrix - expected).max() < 1e-12
    assert np.abs(w0.matrix - w0.matrix.conj().T).max() < 1e-12
    assert np.trace(w0.matrix).real == pytest.approx(7.0, abs=1e-12)
    # eigenvalues: single -1/2 against the cluster, +1/2 elsewhere
    values = np.linalg.eigvalsh(w0.matrix)
    assert values[0] == pytest.approx(-0.5, abs=1e-12)
    assert np.allclose(values[1:], 0.5, atol=1e-12)


def test_witness_two_pi_periodic():
    assert np.abs(witness_operator(2 * np.pi).matrix - witness_operator(0.0).matrix).max() < 1e-12


def test_witness_expectation_values():
    assert witness_expectation(build_cluster(ALPHA_MAX), 0.0) == pytest.approx(-0.5, abs=1e-12)
    mixed = DensityMatrix(np.eye(16) / 16)
    assert witness_expectation(mixed, 0.0) == pytest.approx(7.0 / 16.0, abs=1e-12)
    assert witness_expectation(build_cluster(InitialState(0.0, 0.0)), 0.0) == pytest.approx(0.0, abs=1e-12)


def test_witness_nonnegative_on_product_states():
    rng = np.random.default_rng(1)
    for trial in range(200):
        rho = random_product_state(rng)
        beta = rng.uniform(0, 2 * np.pi)
        assert witness_expectation(rho, beta) >= -1e-12


def test_witness_requires_four_qubits():
    with pytest.raises(ValueError):
        witness_expectation(DensityMatrix(np.eye(4) / 4), 0.0)


def test_dephasing_death_point():
    threshold = esd_threshold(ChannelKind.DEPHASING, [1], ALPHA_MAX, tol=1e-5)
    assert threshold == pytest.approx(2 * (np.sqrt(2) - 1), abs=1e-4)


def test_amp_damping_never_dies():
    assert esd_threshold(ChannelKind.AMPLITUDE_DAMPING, [1, 2], ALPHA_MAX, tol=1e-3) is None


def test_depolarizing_death_points_frozen():
    # frozen from two independent channel implementations
    assert esd_threshold(ChannelKind.DEPOLARIZING, [1], ALPHA_MAX, tol=1e-5) == pytest.approx(
        0.468436, abs=1e-4
    )
    assert esd_threshold(ChannelKind.DEPOLARIZING, [1, 2], ALPHA_MAX, tol=1e-5) == pytest.approx(
        0.450074, abs=1e-4
    )
    assert esd_threshold(ChannelKind.DEPOLARIZING, [1, 3], ALPHA_MAX, tol=1e-5) == pytest.approx(
        1 - 1 / np.sqrt(3), abs=1e-4
    )


def test_esd_rejects_unentangled_start():
    with pytest.raises(ValueError):
        esd_threshold(ChannelKind.DEPHASING, [1], InitialState(0.0, 0.0))
    with pytest.raises(ValueError):
        esd_threshold(ChannelKind.DEPHASING, [1], ALPHA_MAX, tol=-1.0)


def test_negativity_continuous_in_strength():
    for kind in ChannelKind:
        previous = None
        for p in np.linspace(0, 1, 101):
            value = negativity(decohered_cluster(ALPHA_MAX, kind, p), [1]).value
            if previous is not None:
                assert abs(value - previous) < 0.05
            previous = value


def test_witness_crossing_examples():
    # dephasing at alpha = pi/4: crossing where (1 + sqrt(1-p))^4 = 8
    crossing = witness_crossing(ChannelKind.DEPHASING, np.pi / 4, 0.0, tol=1e-6)
    assert crossing == pytest.approx(1 - (8**0.25 - 1) ** 2, abs=1e-5)
    # already nonnegative at p = 0 for a product-like input
    assert witness_crossing(ChannelKind.DEPHASING, 0.0, 0.0) == 0.0


def test_matched_phase_is_beta_independent():
    # rotating the witness and the state phase together changes nothing
    for kind in ChannelKind:
        for beta in (0.4, 1.9):
            rho_rotated = decohered_cluster(InitialState(np.pi / 3, beta), kind, 0.35)
            rho_zero = decohered_cluster(InitialState(np.pi / 3, 0.0), kind, 0.35)
            assert witness_expectation(rho_rotated, beta) == pytest.approx(
                witness_expectation(rho_zero, 0.0), abs=1e-12
            )
