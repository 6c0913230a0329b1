"""
Sifting with the discrete kernel
--------------------------------

Summing products of wavelets and duals over the map grid gives a kernel
that should act like a delta function. The frequency weight decides
whether it does.
"""

import numpy as np

import wavequbit as wq
from wavequbit import wavelet_engine as we

hat = wq.get_wavelet("mexican-hat")
dual = wq.dual_function(hat)

# the grid reaches low frequencies, and shifts cover the widest support
freq = wq.FrequencyGrid.log_spaced(0.04, 26.0, 128)
shifts = np.arange(-204.0, 204.0 + 1e-9, 0.025)
t_prime = np.arange(-3.0, 3.0 + 1e-9, 0.0125)
probes = np.linspace(-0.5, 0.5, 5)


def bump(t):
    return np.exp(-t**2 / 0.5)


###############################################################################
# ``omega**3`` over-weights high frequencies and sharpens the bump, while
# ``omega**1`` returns it nearly unchanged.

for power in (we.DEFAULT_KERNEL_POWER, we.IDENTITY_KERNEL_POWER):
    got = we.sifting_check(hat, dual, bump, probes, t_prime, freq, shifts, power)
    print(f"omega**{power:g}: recovered / true =", np.round(got / bump(probes), 4))
