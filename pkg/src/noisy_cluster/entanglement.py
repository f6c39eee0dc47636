"""Negativity over qubit bipartitions, the phase-rotated cluster witness,
and locating the decoherence strengths where they vanish.

Negativity here is the magnitude of the single most negative eigenvalue of
the partial transpose (clamped at zero), not the sum of negative
eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tensor_core import DensityMatrix, hermitian_eigensystem, partial_transpose
from .states import InitialState, build_cluster, embed
from .channels import ChannelKind, decohered_cluster

#: A negativity at or below this is treated as dead when locating vanishing points.
DEATH_THRESHOLD = 1e-12


@dataclass(frozen=True)
class NegativityResult:
    subset: tuple[int, ...]
    value: float


def negativity(rho: DensityMatrix, subset) -> NegativityResult:
    """max(0, -lambda_min) of the partial transpose over ``subset``."""
    pt = partial_transpose(rho, subset)
    eigenvalues, _ = hermitian_eigensystem(pt)
    value = max(0.0, -float(eigenvalues[0]))
    return NegativityResult(tuple(sorted(set(int(q) for q in subset))), value)


def _phase_rotation_qubit1(beta: float) -> np.ndarray:
    rot = np.diag([np.exp(-0.5j * beta), np.exp(0.5j * beta)]).astype(complex)
    return embed(rot, 1, 4)


@dataclass(frozen=True)
class WitnessOperator:
    beta: float
    matrix: np.ndarray


_REFERENCE_CLUSTER = None


def _reference_cluster() -> np.ndarray:
    global _REFERENCE_CLUSTER
    if _REFERENCE_CLUSTER is None:
        _REFERENCE_CLUSTER = build_cluster(InitialState(np.pi / 4, 0.0)).mat
    return _REFERENCE_CLUSTER


def witness_operator(beta: float) -> WitnessOperator:
    """I/2 minus the cluster projector phase-rotated by ``beta`` on qubit 1.

    Nonnegative on product states; expectation -1/2 on the matching cluster.
    """
    rot = _phase_rotation_qubit1(beta)
    mat = np.eye(16, dtype=complex) / 2 - rot @ _reference_cluster() @ rot.conj().T
    return WitnessOperator(float(beta), mat)


def witness_expectation(rho: DensityMatrix, beta: float) -> float:
    if rho.qubit_count != 4:
        raise ValueError("witness is defined on four qubits")
    value = np.trace(witness_operator(beta).matrix @ rho.mat)
    if abs(value.imag) > 1e-12:
        raise ValueError(f"witness expectation has imaginary residue {value.imag:.3e}")
    return float(value.real)


def esd_threshold(
    kind: ChannelKind,
    subset,
    state: InitialState,
    tol: float = 1e-6,
) -> float | None:
    """Smallest p at which the negativity over ``subset`` dies, by bisection.

    Returns ``None`` when the negativity stays above :data:`DEATH_THRESHOLD`
    all the way to p = 1 - tol (asymptotic decay rather than death at finite
    strength).  Raises ``ValueError`` when there is no entanglement to lose
    at p = 0.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    rho0 = build_cluster(state)

    def alive(p: float) -> bool:
        rho = decohered_cluster(rho0, kind, p)
        return negativity(rho, subset).value > DEATH_THRESHOLD

    if not alive(0.0):
        raise ValueError(f"no negativity over subset {tuple(subset)} at p = 0")
    hi = 1.0 - max(tol, 1e-9)
    if alive(hi):
        return None
    lo = 0.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if alive(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def witness_crossing(
    kind: ChannelKind,
    alpha: float,
    beta: float = 0.0,
    tol: float = 1e-6,
) -> float | None:
    """Smallest p at which Tr[W_beta rho_4F(alpha, 0, p)] reaches zero.

    The state is built with input phase 0 and probed with the witness rotated
    by ``beta``; a matched state/witness phase pair is exactly equivalent to
    beta = 0 because single-qubit phase rotations commute with all three
    channels.  Returns 0.0 when the expectation is already nonnegative at
    p = 0 and ``None`` if it stays negative through p = 1.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    rho0 = build_cluster(InitialState(alpha, 0.0))

    def value(p: float) -> float:
        return witness_expectation(decohered_cluster(rho0, kind, p), beta)

    if value(0.0) >= 0.0:
        return 0.0
    if value(1.0) < 0.0:
        return None
    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if value(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
