"""Single-qubit noise models, their four-qubit product lifts, and channel
application as a Kraus sum.

All three channels carry one strength parameter p in [0, 1], applied with
equal strength to every qubit when lifted.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .tensor_core import DensityMatrix, kron_all, vec_row_major
from .states import IDENTITY_2, PAULI_X, PAULI_Y, PAULI_Z


class ChannelKind(enum.Enum):
    DEPHASING = "dephasing"
    AMPLITUDE_DAMPING = "amp"
    DEPOLARIZING = "depol"

    @classmethod
    def parse(cls, text: str) -> "ChannelKind":
        for kind in cls:
            if kind.value == text:
                return kind
        raise ValueError(
            f"unknown channel {text!r}; expected one of "
            + ", ".join(repr(k.value) for k in cls)
        )


@dataclass(frozen=True)
class KrausChannel:
    """Ordered Kraus operators with completeness sum_i K_i^dag K_i = I."""

    kind: ChannelKind
    strength: float
    operators: tuple[np.ndarray, ...]
    qubit_count: int = 1

    def __post_init__(self):
        dim = 2**self.qubit_count
        total = np.zeros((dim, dim), dtype=complex)
        for k in self.operators:
            if k.shape != (dim, dim):
                raise ValueError(f"operator shape {k.shape} does not match {self.qubit_count} qubits")
            total += k.conj().T @ k
        dev = np.abs(total - np.eye(dim)).max()
        if dev > 1e-12:
            raise ValueError(f"Kraus completeness violated: max deviation {dev:.3e}")

    @property
    def stacked(self) -> np.ndarray:
        return np.stack(self.operators)


def single_qubit_kraus(kind: ChannelKind, p: float) -> KrausChannel:
    """The defining Kraus sets: 2 operators for dephasing and amplitude
    damping, 4 (identity plus the three Pauli errors) for depolarizing."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"channel strength must lie in [0, 1], got {p}")
    if kind is ChannelKind.DEPHASING:
        ops = (
            np.diag([1.0, np.sqrt(1.0 - p)]).astype(complex),
            np.diag([0.0, np.sqrt(p)]).astype(complex),
        )
    elif kind is ChannelKind.AMPLITUDE_DAMPING:
        ops = (
            np.diag([1.0, np.sqrt(1.0 - p)]).astype(complex),
            np.array([[0.0, np.sqrt(p)], [0.0, 0.0]], dtype=complex),
        )
    elif kind is ChannelKind.DEPOLARIZING:
        ops = (
            np.sqrt(1.0 - 0.75 * p) * IDENTITY_2,
            0.5 * np.sqrt(p) * PAULI_X,
            0.5 * np.sqrt(p) * PAULI_Y,
            0.5 * np.sqrt(p) * PAULI_Z,
        )
    else:
        raise ValueError(f"unknown channel kind {kind}")
    return KrausChannel(kind, float(p), ops, qubit_count=1)


def lift_to_four_qubits(channel: KrausChannel) -> KrausChannel:
    """All tensor products of the single-qubit operators over four positions
    (leftmost factor acts on qubit 1).  Zero operators at p = 0 or 1 are kept
    so operator counts and ordering stay stable."""
    if channel.qubit_count != 1:
        raise ValueError("channel is already lifted")
    ops = tuple(
        kron_all(a, b, c, d)
        for a, b, c, d in itertools.product(channel.operators, repeat=4)
    )
    return KrausChannel(channel.kind, channel.strength, ops, qubit_count=4)


@lru_cache(maxsize=256)
def _lifted_stack(kind: ChannelKind, p: float) -> np.ndarray:
    return lift_to_four_qubits(single_qubit_kraus(kind, p)).stacked


def four_qubit_channel(kind: ChannelKind, p: float) -> KrausChannel:
    return lift_to_four_qubits(single_qubit_kraus(kind, p))


def apply_channel(rho: DensityMatrix, channel: KrausChannel) -> DensityMatrix:
    """sum_i K_i rho K_i^dag."""
    mat = apply_kraus_stack(rho.mat, channel.stacked)
    if mat.shape != rho.mat.shape:
        raise ValueError("channel dimension does not match the state")
    return DensityMatrix(mat)


def apply_kraus_stack(mat: np.ndarray, stack: np.ndarray) -> np.ndarray:
    if stack.shape[1] != mat.shape[0]:
        raise ValueError(
            f"channel acts on dimension {stack.shape[1]}, state has dimension {mat.shape[0]}"
        )
    out = np.einsum("aij,jl,akl->ik", stack, mat, stack.conj(), optimize=True)
    # Kraus sums of Hermitian input are Hermitian up to rounding.
    return 0.5 * (out + out.conj().T)


def decohered_cluster(state_or_mat, kind: ChannelKind, p: float) -> DensityMatrix:
    """Four-qubit state after the equal-strength product channel."""
    from .states import InitialState, build_cluster

    if isinstance(state_or_mat, InitialState):
        rho = build_cluster(state_or_mat)
    else:
        rho = state_or_mat
    return DensityMatrix(apply_kraus_stack(rho.mat, _lifted_stack(kind, float(p))))


def channel_choi(channel: KrausChannel) -> np.ndarray:
    """Choi matrix sum_i vec(K_i) vec(K_i)^dag (row-major vec); positive
    semidefinite exactly when the map is completely positive."""
    dim_sq = channel.operators[0].size
    choi = np.zeros((dim_sq, dim_sq), dtype=complex)
    for k in channel.operators:
        v = vec_row_major(k)
        choi += v @ v.conj().T
    return choi
