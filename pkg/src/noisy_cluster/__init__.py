"""Desk-scale simulator for a four-qubit linear cluster state under
dephasing, amplitude-damping, and depolarizing noise: entanglement measures,
the measurement-driven single-logical-qubit rotation, its superoperator and
Choi/Kraus representations, and the associated fidelity metrics."""

from .tensor_core import (
    DensityMatrix,
    hermitian_eigensystem,
    kron,
    partial_transpose,
    trace_out,
    unvec_row_major,
    vec_row_major,
)
from .states import InitialState, build_cluster, embed, gate, psi_in
from .channels import (
    ChannelKind,
    KrausChannel,
    apply_channel,
    decohered_cluster,
    lift_to_four_qubits,
    single_qubit_kraus,
)
from .entanglement import (
    NegativityResult,
    WitnessOperator,
    esd_threshold,
    negativity,
    witness_crossing,
    witness_expectation,
    witness_operator,
)
from .logical import (
    ConventionCalibration,
    RotationSpec,
    Superoperator,
    calibrate_conventions,
    closed_form_cluster_fidelity,
    closed_form_gate_fidelity,
    closed_form_superoperator,
    cluster_fidelity,
    gate_fidelity,
    haar_random_rotation,
    ideal_superoperator,
    measure_chain,
    post_selection_probability,
    reconstruct_superoperator,
    target_unitary,
)
from .choi import (
    ChoiDecomposition,
    choi_from_superoperator,
    first_kraus_correlation,
    first_kraus_fidelity,
    kraus_from_choi,
)

__version__ = "0.1.0"
