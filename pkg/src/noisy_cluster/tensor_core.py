"""Dense complex-matrix utilities and multi-qubit index manipulation.

Conventions fixed here and used by every other module:

* density matrices are vectorized ROW-major (vec stacks rows top to
  bottom), so that vec(U rho U^dag) = (U (x) conj(U)) vec(rho);
* qubit indices are 1-based in all public interfaces, qubit 1 being the
  leftmost tensor factor;
* eigenvalues are returned ascending.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# Tolerance constants shared across the package.
HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_SLACK = -1e-10
ORACLE_TOL = 1e-9


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; dimensions multiply."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def kron_all(*mats: np.ndarray) -> np.ndarray:
    out = np.array([[1.0 + 0.0j]])
    for m in mats:
        out = np.kron(out, np.asarray(m, dtype=complex))
    return out


def vec_row_major(m: np.ndarray) -> np.ndarray:
    """Stack the rows of ``m`` into a column vector."""
    m = np.asarray(m, dtype=complex)
    return m.reshape(-1, 1)


def unvec_row_major(v: np.ndarray) -> np.ndarray:
    """Inverse of :func:`vec_row_major`; the length must be a perfect square."""
    v = np.asarray(v, dtype=complex).ravel()
    dim = int(round(np.sqrt(v.size)))
    if dim * dim != v.size:
        raise ValueError(f"cannot unvec a vector of length {v.size}: not a perfect square")
    return v.reshape(dim, dim)


def _check_subset(subset, n: int) -> tuple[int, ...]:
    qubits = tuple(sorted(set(int(q) for q in subset)))
    if not qubits:
        raise ValueError("qubit subset must be nonempty")
    if len(qubits) >= n:
        raise ValueError("qubit subset must be a proper subset")
    for q in qubits:
        if q < 1 or q > n:
            raise ValueError(f"qubit index {q} out of range 1..{n}")
    return qubits


def partial_transpose(rho: "DensityMatrix | np.ndarray", subset, qubit_count: int | None = None) -> np.ndarray:
    """Transpose the tensor indices of the chosen qubits only.

    ``subset`` is a nonempty proper set of 1-based qubit indices.  The result
    is Hermitian with the same trace but is generally not positive, which is
    exactly what the negativity probes.
    """
    mat, n = _as_matrix(rho, qubit_count)
    qubits = _check_subset(subset, n)
    t = mat.reshape([2] * (2 * n))
    for q in qubits:
        t = np.swapaxes(t, q - 1, n + q - 1)
    return t.reshape(2**n, 2**n)


def trace_out(rho: "DensityMatrix | np.ndarray", subset, qubit_count: int | None = None) -> "DensityMatrix":
    """Partial trace over ``subset`` (1-based); returns the reduced state."""
    mat, n = _as_matrix(rho, qubit_count)
    qubits = _check_subset(subset, n)
    t = mat.reshape([2] * (2 * n))
    n_left = n
    for q in sorted(qubits, reverse=True):
        t = np.trace(t, axis1=q - 1, axis2=n_left + q - 1)
        n_left -= 1
    dim = 2**n_left
    return DensityMatrix(t.reshape(dim, dim))


def hermitian_eigensystem(m: np.ndarray, tol: float = 1e-10) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (real, ascending) and orthonormal eigenvector columns.

    Raises ``ValueError`` if ``m`` is not Hermitian within ``tol``.
    """
    m = np.asarray(m, dtype=complex)
    dev = np.abs(m - m.conj().T).max()
    if dev > tol:
        raise ValueError(f"matrix is not Hermitian: max |m - m^dag| = {dev:.3e}")
    eigenvalues, eigenvectors = np.linalg.eigh(m)
    return eigenvalues, eigenvectors


def _as_matrix(rho, qubit_count: int | None) -> tuple[np.ndarray, int]:
    if isinstance(rho, DensityMatrix):
        return rho.mat, rho.qubit_count
    mat = np.asarray(rho, dtype=complex)
    if qubit_count is None:
        qubit_count = int(round(np.log2(mat.shape[0])))
    return mat, qubit_count


@dataclass(frozen=True)
class DensityMatrix:
    """Validated n-qubit density matrix (Hermitian, unit trace, PSD)."""

    mat: np.ndarray
    qubit_count: int = field(init=False)

    def __post_init__(self):
        mat = np.asarray(self.mat, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError(f"density matrix must be square, got shape {mat.shape}")
        n = int(round(np.log2(mat.shape[0])))
        if 2**n != mat.shape[0]:
            raise ValueError(f"dimension {mat.shape[0]} is not a power of two")
        if not np.all(np.isfinite(mat)):
            raise ValueError("density matrix has non-finite entries")
        herm = np.abs(mat - mat.conj().T).max()
        if herm > HERMITICITY_TOL:
            raise ValueError(f"not Hermitian: max deviation {herm:.3e}")
        tr = np.trace(mat)
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"trace is {tr}, expected 1")
        min_eig = np.linalg.eigvalsh(mat).min()
        if min_eig < PSD_SLACK:
            raise ValueError(f"not positive semidefinite: min eigenvalue {min_eig:.3e}")
        object.__setattr__(self, "mat", mat)
        object.__setattr__(self, "qubit_count", n)

    @classmethod
    def from_state_vector(cls, psi: np.ndarray) -> "DensityMatrix":
        psi = np.asarray(psi, dtype=complex).ravel()
        return cls(np.outer(psi, psi.conj()))

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def purity(self) -> float:
        return float(np.trace(self.mat @ self.mat).real)
