"""Single-qubit input states, the standard gate set, and the four-qubit
linear cluster state.

The cluster is built on qubits 1..4 as CZ(3,4) CZ(2,3) CZ(1,2) acting on
|psi_in> (x) |+> (x) |+> (x) |+>, with the input state on qubit 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tensor_core import DensityMatrix, kron_all

IDENTITY_2 = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
CZ = np.diag([1, 1, 1, -1]).astype(complex)

PLUS = np.array([1, 1], dtype=complex) / np.sqrt(2)
PLUS_I = np.array([1, 1j], dtype=complex) / np.sqrt(2)

#: Axis-rotation conventions.  "exponential" is exp(-i phi sigma/2); "phase"
#: is diag(1, e^{i phi}) and its Hadamard conjugate.  The two differ by a
#: global phase e^{i phi/2} only, which cancels in every density-matrix or
#: superoperator quantity; "exponential" is the shipped default.
ROTATION_FORMS = ("exponential", "phase")


def z_rotation(phi: float, form: str = "exponential") -> np.ndarray:
    if form == "exponential":
        return np.diag([np.exp(-0.5j * phi), np.exp(0.5j * phi)]).astype(complex)
    if form == "phase":
        return np.diag([1.0, np.exp(1j * phi)]).astype(complex)
    raise ValueError(f"unknown rotation form {form!r}")


def x_rotation(phi: float, form: str = "exponential") -> np.ndarray:
    if form == "exponential":
        c, s = np.cos(phi / 2), np.sin(phi / 2)
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)
    if form == "phase":
        return HADAMARD @ z_rotation(phi, "phase") @ HADAMARD
    raise ValueError(f"unknown rotation form {form!r}")


_FIXED_GATES = {
    "I": IDENTITY_2,
    "H": HADAMARD,
    "X": PAULI_X,
    "Y": PAULI_Y,
    "Z": PAULI_Z,
    "CZ": CZ,
}


def gate(name: str, angle: float | None = None, form: str = "exponential") -> np.ndarray:
    """Look up a gate by name; ``Z(phi)`` and ``X(phi)`` take an angle."""
    if name in ("Zrot", "Z(phi)"):
        return z_rotation(float(angle), form)
    if name in ("Xrot", "X(phi)"):
        return x_rotation(float(angle), form)
    if angle is not None:
        raise ValueError(f"gate {name!r} takes no angle")
    try:
        return _FIXED_GATES[name]
    except KeyError:
        raise ValueError(f"unknown gate {name!r}") from None


def embed(gate_matrix: np.ndarray, qubits, n: int) -> np.ndarray:
    """Lift a k-qubit gate to n qubits, acting on the named 1-based qubits."""
    if isinstance(qubits, int):
        qubits = (qubits,)
    qubits = tuple(int(q) for q in qubits)
    k = len(qubits)
    if len(set(qubits)) != k:
        raise ValueError("duplicate qubit index")
    for q in qubits:
        if q < 1 or q > n:
            raise ValueError(f"qubit index {q} out of range 1..{n}")
    g = np.asarray(gate_matrix, dtype=complex)
    if g.shape != (2**k, 2**k):
        raise ValueError(f"gate shape {g.shape} does not act on {k} qubits")
    dim = 2**n
    out = np.zeros((dim, dim), dtype=complex)
    # n <= 6 throughout this package, so the explicit basis walk is fine.
    for col in range(dim):
        bits = [(col >> (n - 1 - i)) & 1 for i in range(n)]
        sub_in = 0
        for q in qubits:
            sub_in = (sub_in << 1) | bits[q - 1]
        for sub_out in range(2**k):
            amp = g[sub_out, sub_in]
            if amp == 0:
                continue
            new_bits = list(bits)
            for j, q in enumerate(qubits):
                new_bits[q - 1] = (sub_out >> (k - 1 - j)) & 1
            row = 0
            for b in new_bits:
                row = (row << 1) | b
            out[row, col] += amp
    return out


@dataclass(frozen=True)
class InitialState:
    """Input state cos(alpha)|0> + e^{i beta} sin(alpha)|1> on qubit 1."""

    alpha: float
    beta: float = 0.0

    def __post_init__(self):
        if not np.isfinite(self.alpha) or not np.isfinite(self.beta):
            raise ValueError("angles must be finite")
        # slack absorbs round-tripping through decimal text formats
        if self.alpha < -1e-9 or self.alpha > np.pi + 1e-9:
            raise ValueError(f"alpha must lie in [0, pi], got {self.alpha}")
        object.__setattr__(self, "alpha", float(min(max(self.alpha, 0.0), np.pi)))
        object.__setattr__(self, "beta", float(np.mod(self.beta, 2 * np.pi)))


def psi_in(state: InitialState) -> np.ndarray:
    """State vector (cos alpha, e^{i beta} sin alpha)."""
    return np.array(
        [np.cos(state.alpha), np.exp(1j * state.beta) * np.sin(state.alpha)],
        dtype=complex,
    )


def cluster_state_vector(state: InitialState) -> np.ndarray:
    v = kron_all(
        psi_in(state).reshape(2, 1), PLUS.reshape(2, 1), PLUS.reshape(2, 1), PLUS.reshape(2, 1)
    ).ravel()
    for pair in ((1, 2), (2, 3), (3, 4)):
        v = embed(CZ, pair, 4) @ v
    return v


def build_cluster(state: InitialState) -> DensityMatrix:
    """Pure four-qubit cluster state carrying the input on qubit 1."""
    return DensityMatrix.from_state_vector(cluster_state_vector(state))
