"""Choi-matrix analysis of a logical-qubit superoperator: ranked Kraus
extraction, operator amplitudes, and first-Kraus accuracy measures."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .tensor_core import hermitian_eigensystem
from .logical import Superoperator


def choi_from_superoperator(superop: Superoperator | np.ndarray) -> np.ndarray:
    """Index reshuffle C[(i,j),(k,l)] = S[(i,k),(j,l)] consistent with
    row-major vectorization; Hermitian with trace N for a physical map."""
    matrix = superop.matrix if isinstance(superop, Superoperator) else np.asarray(superop, dtype=complex)
    if matrix.shape != (4, 4):
        raise ValueError(f"expected a 4x4 superoperator, got {matrix.shape}")
    return matrix.reshape(2, 2, 2, 2).transpose(0, 2, 1, 3).reshape(4, 4)


@dataclass(frozen=True)
class ChoiDecomposition:
    choi: np.ndarray
    eigenvalues: np.ndarray          # descending
    kraus: tuple[np.ndarray, ...]    # K_a = sqrt(lambda_a) unvec(v_a), phase-fixed
    amplitudes: np.ndarray           # A_a = sqrt(lambda_a / 2)

    def apply(self, rho: np.ndarray) -> np.ndarray:
        out = np.zeros_like(np.asarray(rho, dtype=complex))
        for k in self.kraus:
            out += k @ rho @ k.conj().T
        return out

    def to_dict(self) -> dict:
        return {
            "eigenvalues": [float(v) for v in self.eigenvalues],
            "amplitudes": [float(a) for a in self.amplitudes],
            "kraus": [
                [[[float(z.real), float(z.imag)] for z in row] for row in k]
                for k in self.kraus
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def kraus_from_choi(choi: np.ndarray, reference_unitary: np.ndarray) -> ChoiDecomposition:
    """Eigendecompose the Choi matrix into ranked Kraus operators.

    Eigenvalues are sorted descending and clamped to zero inside the PSD
    slack; each operator's global phase is fixed so Tr[U^dag K_a] is real and
    nonnegative against the reference unitary, which makes the first-Kraus
    fidelity and correlation real quantities.
    """
    choi = np.asarray(choi, dtype=complex)
    eigenvalues, vectors = hermitian_eigensystem(choi)
    if eigenvalues[0] < -1e-8:
        raise ValueError(f"Choi matrix is not PSD: min eigenvalue {eigenvalues[0]:.3e}")
    order = np.argsort(eigenvalues)[::-1]
    eigenvalues = np.clip(eigenvalues[order], 0.0, None)
    vectors = vectors[:, order]
    kraus = []
    for lam, v in zip(eigenvalues, vectors.T):
        k = np.sqrt(lam) * v.reshape(2, 2)
        overlap = np.trace(reference_unitary.conj().T @ k)
        if abs(overlap) > 1e-12:
            k = k * (overlap.conjugate() / abs(overlap))
        kraus.append(k)
    amplitudes = np.sqrt(eigenvalues / 2.0)
    return ChoiDecomposition(choi, eigenvalues, tuple(kraus), amplitudes)


def first_kraus_fidelity(decomposition: ChoiDecomposition, unitary: np.ndarray) -> float:
    """Tr[U^dag K_1] / Tr[U^dag U]; real and in [0, 1] by the phase fix."""
    value = np.trace(unitary.conj().T @ decomposition.kraus[0]) / np.trace(unitary.conj().T @ unitary)
    return float(value.real)


def first_kraus_correlation(decomposition: ChoiDecomposition, unitary: np.ndarray) -> float:
    """Tr[U^dag K_1] normalized by both operator norms; insensitive to the
    magnitude shrink of K_1, so it isolates coherent error."""
    k1 = decomposition.kraus[0]
    norm_sq = np.trace(k1.conj().T @ k1).real
    if norm_sq < 1e-24:
        raise ValueError("first Kraus operator is numerically zero")
    value = np.trace(unitary.conj().T @ k1) / np.sqrt(
        np.trace(unitary.conj().T @ unitary).real * norm_sq
    )
    return float(value.real)
