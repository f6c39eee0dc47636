import numpy as np
import pytest

from noisy_cluster.channels import ChannelKind
from noisy_cluster.choi import (
    choi_from_superoperator,
    first_kraus_correlation,
    first_kraus_fidelity,
    kraus_from_choi,
)
from noisy_cluster.logical import (
    RotationSpec,
    haar_random_rotation,
    ideal_superoperator,
    reconstruct_superoperator,
    target_unitary,
)
from noisy_cluster.tensor_core import unvec_row_major, vec_row_major

#: theta2 on the pi/2 grid keeps the dephasing/depolarizing correlation
#: exactly 1; see the validation module.
ROTATION = RotationSpec(0.7, np.pi / 2, 0.4)


def decomposition_for(kind, p, rotation=ROTATION):
    superop = reconstruct_superoperator(kind, p, rotation)
    unitary = target_unitary(rotation)
    return kraus_from_choi(choi_from_superoperator(superop), unitary), superop, unitary


def test_identity_channel_choi():
    identity = ideal_superoperator(RotationSpec(0, 0, 0))
    # strip the rotation: use S = I4 directly
    choi = choi_from_superoperator(np.eye(4, dtype=complex))
    vec_i = vec_row_major(np.eye(2))
    assert np.abs(choi - vec_i @ vec_i.conj().T).max() < 1e-15
    assert np.linalg.matrix_rank(choi) == 1
    assert np.trace(choi).real == pytest.approx(2.0)
    decomposition = kraus_from_choi(choi, np.eye(2, dtype=complex))
    assert np.abs(decomposition.kraus[0] - np.eye(2)).max() < 1e-12
    assert decomposition.amplitudes[0] == pytest.approx(1.0, abs=1e-12)
    assert identity.matrix.shape == (4, 4)


def test_choi_hermitian_and_unit_trace_sum():
    rng = np.random.default_rng(0)
    for _ in range(30):
        kind = list(ChannelKind)[rng.integers(3)]
        decomposition, superop, _ = decomposition_for(
            kind, rng.uniform(0, 1), haar_random_rotation(rng)
        )
        choi = decomposition.choi
        assert np.abs(choi - choi.conj().T).max() < 1e-12
        assert np.trace(choi).real == pytest.approx(2.0, abs=1e-10)
        assert float(np.sum(decomposition.amplitudes**2)) == pytest.approx(1.0, abs=1e-10)


def test_kraus_set_reproduces_channel_action():
    rng = np.random.default_rng(1)
    for kind in ChannelKind:
        decomposition, superop, _ = decomposition_for(kind, 0.55, haar_random_rotation(rng))
        for _ in range(20):
            v = rng.standard_normal(2) + 1j * rng.standard_normal(2)
            v /= np.linalg.norm(v)
            rho = np.outer(v, v.conj())
            direct = unvec_row_major(superop.matrix @ vec_row_major(rho))
            assert np.abs(decomposition.apply(rho) - direct).max() < 1e-10


def test_amplitudes_sorted_descending():
    rng = np.random.default_rng(2)
    for kind in ChannelKind:
        decomposition, _, _ = decomposition_for(kind, 0.4, haar_random_rotation(rng))
        amps = decomposition.amplitudes
        assert all(a >= b - 1e-15 for a, b in zip(amps, amps[1:]))


def test_full_dephasing_limit():
    decomposition, _, _ = decomposition_for(ChannelKind.DEPHASING, 1.0)
    # four equal Choi eigenvalues 1/2, amplitudes 1/2, single entries 1/sqrt(2)
    assert np.allclose(decomposition.eigenvalues, 0.5, atol=1e-10)
    assert np.allclose(decomposition.amplitudes, 0.5, atol=1e-10)
    for k in decomposition.kraus:
        magnitudes = np.sort(np.abs(k).ravel())
        assert magnitudes[-1] == pytest.approx(1 / np.sqrt(2), abs=1e-8)
        assert magnitudes[-2] < 1e-8


def test_full_depolarizing_limit():
    decomposition, _, _ = decomposition_for(ChannelKind.DEPOLARIZING, 1.0)
    assert np.allclose(decomposition.amplitudes, 0.5, atol=1e-10)


def test_amp_damping_near_total_collapse():
    decomposition, _, _ = decomposition_for(ChannelKind.AMPLITUDE_DAMPING, 0.99)
    amps = decomposition.amplitudes
    # frozen: the two decaying amplitudes straddle 0.05 at p = 0.99
    assert amps[2] == pytest.approx(0.050244, abs=1e-4)
    assert amps[3] == pytest.approx(0.049749, abs=1e-4)
    # the two survivors concentrate in the top row
    for k in decomposition.kraus[:2]:
        assert np.abs(k[0]).max() > 10 * np.abs(k[1]).max()


def test_first_kraus_identity_channel():
    choi = choi_from_superoperator(np.eye(4, dtype=complex))
    decomposition = kraus_from_choi(choi, np.eye(2, dtype=complex))
    assert first_kraus_fidelity(decomposition, np.eye(2, dtype=complex)) == pytest.approx(1.0)
    assert first_kraus_correlation(decomposition, np.eye(2, dtype=complex)) == pytest.approx(1.0)


def test_dephasing_first_kraus_fidelity_decreases_linearly():
    ps = np.round(np.arange(0.0, 0.91, 0.1), 10)
    values = []
    for p in ps:
        decomposition, _, unitary = decomposition_for(ChannelKind.DEPHASING, p)
        values.append(first_kraus_fidelity(decomposition, unitary))
    values = np.array(values)
    assert np.all(np.diff(values) < 0)
    design = np.vstack([ps, np.ones_like(ps)]).T
    _, rss, *_ = np.linalg.lstsq(design, values, rcond=None)
    r_squared = 1 - float(rss[0]) / float(np.sum((values - values.mean()) ** 2))
    assert r_squared > 0.999


def test_correlation_constant_for_decoherent_channels():
    for kind in (ChannelKind.DEPHASING, ChannelKind.DEPOLARIZING):
        for p in (0.1, 0.4, 0.8):
            decomposition, _, unitary = decomposition_for(kind, p)
            assert first_kraus_correlation(decomposition, unitary) == pytest.approx(1.0, abs=1e-6)


def test_correlation_decreases_for_amp_damping():
    values = []
    for p in np.arange(0.0, 0.91, 0.1):
        decomposition, _, unitary = decomposition_for(ChannelKind.AMPLITUDE_DAMPING, p)
        values.append(first_kraus_correlation(decomposition, unitary))
    assert np.all(np.diff(values) < 0)


def test_correlation_drifts_at_generic_rotations():
    # off the pi/2 grid the top Kraus operator tilts away from the target
    rotation = RotationSpec(1.042, 3.128, 3.661)
    decomposition, _, unitary = decomposition_for(ChannelKind.DEPHASING, 0.8, rotation)
    drift = abs(first_kraus_correlation(decomposition, unitary) - 1)
    assert 1e-6 < drift < 0.05


def test_non_cp_choi_rejected():
    bad = np.diag([1.0, 1.0, 1.0, -1.0]).astype(complex)
    with pytest.raises(ValueError):
        kraus_from_choi(bad, np.eye(2, dtype=complex))


def test_decomposition_serialization():
    decomposition, _, _ = decomposition_for(ChannelKind.DEPHASING, 0.3)
    payload = decomposition.to_dict()
    assert len(payload["eigenvalues"]) == 4
    assert len(payload["kraus"]) == 4
    rebuilt = np.array([[complex(re, im) for re, im in row] for row in payload["kraus"][0]])
    assert np.abs(rebuilt - decomposition.kraus[0]).max() < 1e-15
