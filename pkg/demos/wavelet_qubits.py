"""
Qubits from map coefficients
----------------------------

Two map coefficients become the amplitudes of a two-level state. Its
versors are dual functions placed in separate component slots.
"""

import numpy as np

import wavequbit as wq
from wavequbit import two_qubit_relations as tq

grid = (0.0, 10.0 / 2047, 2048)
events = [wq.BurstSpec(3.0, 8.0, 0.8), wq.BurstSpec(3.0, 20.0, 0.8, 1.25), wq.BurstSpec(7.0, 8.0, 0.8)]
signal = wq.superpose(wq.synth_burst(e, grid) for e in events)
morlet = wq.get_wavelet("morlet-real")
wmap = wq.forward_cwt(signal, morlet, wq.FrequencyGrid.log_spaced(2.5, 40.0, 96))
dual = wq.dual_function(morlet)

###############################################################################
# The strongest peaks feed one qubit; the weaker ones feed a second.

p = wq.select_peaks(wmap, 4)
q1 = wq.encode_qubit(wmap, (p[0].freq_index, p[0].time_index), (p[1].freq_index, p[1].time_index), dual)
q2 = wq.encode_qubit(wmap, (p[2].freq_index, p[2].time_index), (p[3].freq_index, p[3].time_index), dual)
print(f"q1 amplitudes {q1.amplitudes}, norm {wq.qubit_norm(q1):.4f}")
print(f"q2 amplitudes {q2.amplitudes}, norm {wq.qubit_norm(q2):.4f}")

###############################################################################
# Versors are orthogonal at every instant, though not of unit length.

t = np.linspace(0.0, 10.0, 5)
m = wq.versor_waveform(q1, "m", t)
n = wq.versor_waveform(q1, "n", t)
print("m.n =", m[0] * n[0] + m[1] * n[1])

###############################################################################
# The product relation always factorizes. A state with zeros on the diagonal
# satisfies a Bell pattern and has a nonzero determinant.

state = wq.relate_product(wq.normalize(q1), wq.normalize(q2))
print(tq.state_summary(state)["U"], "separated:", wq.is_separated(state))

bell = wq.TwoQubitState.from_values((0.0, 2**-0.5, 2**-0.5, 0.0))
result = wq.classify_bell_condition(bell)
print(f"matched {sorted(result.matched)} forms {result.forms}, det {wq.entanglement_determinant(bell):.3f}")
