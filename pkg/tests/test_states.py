import numpy as np
import pytest

from noisy_cluster.states import (
    CZ,
    HADAMARD,
    PLUS,
    InitialState,
    build_cluster,
    cluster_state_vector,
    embed,
    gate,
    psi_in,
    x_rotation,
    z_rotation,
)
from noisy_cluster.tensor_core import kron_all


def test_psi_in_basis_cases():
    assert np.allclose(psi_in(InitialState(0.0, 1.3)), [1, 0])
    assert np.allclose(psi_in(InitialState(np.pi / 2, 0.0)), [0, 1])
    assert np.allclose(psi_in(InitialState(np.pi / 4, np.pi / 2)), np.array([1, 1j]) / np.sqrt(2))


def test_psi_in_unit_norm():
    rng = np.random.default_rng(0)
    for _ in range(20):
        s = InitialState(rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi))
        assert abs(np.linalg.norm(psi_in(s)) - 1) < 1e-12


def test_initial_state_validation():
    with pytest.raises(ValueError):
        InitialState(-0.1, 0.0)
    with pytest.raises(ValueError):
        InitialState(np.pi + 0.1, 0.0)
    assert InitialState(0.5, 2 * np.pi + 0.25).beta == pytest.approx(0.25)


def test_cluster_is_pure_for_any_input():
    rng = np.random.default_rng(1)
    for _ in range(5):
        s = InitialState(rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi))
        rho = build_cluster(s)
        assert rho.qubit_count == 4
        assert abs(rho.purity() - 1) < 1e-12


def test_cluster_stabilizer_expectations():
    # expectation-value oracle on the constructed state at alpha = pi/4
    from noisy_cluster.states import PAULI_X, PAULI_Z, IDENTITY_2

    rho = build_cluster(InitialState(np.pi / 4, 0.0)).mat
    x, z, i = PAULI_X, PAULI_Z, IDENTITY_2
    generators = [
        kron_all(x, z, i, i),
        kron_all(z, x, z, i),
        kron_all(i, z, x, z),
        kron_all(i, i, z, x),
    ]
    for g in generators:
        assert np.trace(g @ rho).real == pytest.approx(1.0, abs=1e-12)


def test_cluster_overlap_between_inputs():
    v1 = cluster_state_vector(InitialState(np.pi / 4, 0.0))
    v2 = cluster_state_vector(InitialState(0.0, 0.0))
    assert abs(np.vdot(v1, v2)) ** 2 == pytest.approx(0.5, abs=1e-12)


def test_cluster_entries_equal_magnitude():
    rho = build_cluster(InitialState(np.pi / 4, 0.0)).mat
    assert np.abs(np.abs(rho) - 1.0 / 16.0).max() < 1e-12


def test_cluster_cz_order_irrelevant():
    s = InitialState(1.1, 0.4)
    base = kron_all(
        psi_in(s).reshape(2, 1), PLUS.reshape(2, 1), PLUS.reshape(2, 1), PLUS.reshape(2, 1)
    ).ravel()
    reference = cluster_state_vector(s)
    for order in ((3, 4), (1, 2), (2, 3)), ((2, 3), (3, 4), (1, 2)):
        v = base.copy()
        for pair in order:
            v = embed(CZ, pair, 4) @ v
        assert np.abs(v - reference).max() < 1e-12


def test_cluster_eigenstate_property():
    rng = np.random.default_rng(2)
    for _ in range(20):
        s = InitialState(rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi))
        v = cluster_state_vector(s)
        rho = build_cluster(s).mat
        assert np.vdot(v, rho @ v).real == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("form", ["exponential", "phase"])
def test_rotations_unitary_and_zero_angle(form):
    assert np.abs(z_rotation(0.0, form) - np.eye(2)).max() < 1e-12
    assert np.abs(x_rotation(0.0, form) - np.eye(2)).max() < 1e-12
    for phi in (0.3, 1.7, 4.4):
        for rot in (z_rotation(phi, form), x_rotation(phi, form)):
            assert np.abs(rot @ rot.conj().T - np.eye(2)).max() < 1e-12


def test_hadamard_involution_and_cz_symmetry():
    assert np.abs(HADAMARD @ HADAMARD - np.eye(2)).max() < 1e-12
    swap = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    assert np.array_equal(swap @ CZ @ swap, CZ)


def test_gate_lookup():
    assert np.array_equal(gate("CZ"), CZ)
    assert np.abs(gate("Zrot", 0.0) - np.eye(2)).max() < 1e-12
    with pytest.raises(ValueError):
        gate("nope")
    with pytest.raises(ValueError):
        gate("H", angle=0.3)


def test_embed_cz_squares_to_identity():
    plus4 = kron_all(*([PLUS.reshape(2, 1)] * 4)).ravel()
    g = embed(CZ, (1, 2), 4)
    assert np.abs(g @ (g @ plus4) - plus4).max() < 1e-12


def test_embed_unitary_and_index_checks():
    g = embed(HADAMARD, 3, 4)
    assert np.abs(g @ g.conj().T - np.eye(16)).max() < 1e-12
    with pytest.raises(ValueError):
        embed(CZ, (0, 1), 4)
    with pytest.raises(ValueError):
        embed(CZ, (4, 5), 4)
    with pytest.raises(ValueError):
        embed(CZ, (2, 2), 4)
