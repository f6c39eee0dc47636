"""Choi-matrix view of the noisy logical rotation: ranked Kraus operators,
their amplitudes, and the first-operator fidelity/correlation split that
separates decoherent shrinkage from coherent error.

Run:  python demos/kraus_ranking.py
"""
import numpy as np

from noisy_cluster import (
    ChannelKind,
    RotationSpec,
    choi_from_superoperator,
    first_kraus_correlation,
    first_kraus_fidelity,
    kraus_from_choi,
    reconstruct_superoperator,
    target_unitary,
)

rotation = RotationSpec(0.7, np.pi / 2, 0.4)
unitary = target_unitary(rotation)

for kind in ChannelKind:
    print(f"\n=== {kind.value} ===")
    print("  p     A1      A2      A3      A4      F1      C1")
    for p in (0.0, 0.2, 0.4, 0.6, 0.8):
        superop = reconstruct_superoperator(kind, p, rotation)
        decomposition = kraus_from_choi(choi_from_superoperator(superop), unitary)
        amps = decomposition.amplitudes
        f1 = first_kraus_fidelity(decomposition, unitary)
        c1 = first_kraus_correlation(decomposition, unitary)
        print(f"  {p:.1f}  " + "  ".join(f"{a:.4f}" for a in amps) + f"  {f1:.4f}  {c1:.4f}")

print("""
Reading the table: the dephasing and depolarizing correlations stay pinned
at 1 while the amplitudes spread out -- the error is purely decoherent.
Amplitude damping instead drags C1 below 1: it rotates the dominant Kraus
operator away from the target, a coherent effect on top of the shrinkage.
""")

superop = reconstruct_superoperator(ChannelKind.AMPLITUDE_DAMPING, 0.99, rotation)
decomposition = kraus_from_choi(choi_from_superoperator(superop), unitary)
print("amplitude damping near p = 1: amplitudes",
      [round(a, 4) for a in decomposition.amplitudes])
print("surviving operators concentrate in the top row (everything decays to |0>):")
for k in decomposition.kraus[:2]:
    print(np.round(k, 3))
