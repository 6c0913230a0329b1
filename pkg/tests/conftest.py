import numpy as np
import pytest

from wavequbit import BurstSpec, FrequencyGrid, get_wavelet, dual_function, superpose, synth_burst

# single-burst round-trip fixture: 10 s window, 2048 samples
N_SAMPLES = 2048
GRID = (0.0, 10.0 / (N_SAMPLES - 1), N_SAMPLES)
BAND = (2.5, 40.0, 96)
BURST = BurstSpec(center=5.0, frequency=10.0, width=0.5)

# three-event localization fixture: (omega1, t1), (omega2, t1), (omega1, t2)
OMEGA1, OMEGA2, T1, T2 = 8.0, 20.0, 3.0, 7.0
EVENT_WIDTH = 0.8
EVENT2_AMPLITUDE = 1.25


def three_event_bursts(shift=0.0):
    return [
        BurstSpec(T1 + shift, OMEGA1, EVENT_WIDTH),
        BurstSpec(T1 + shift, OMEGA2, EVENT_WIDTH, EVENT2_AMPLITUDE),
        BurstSpec(T2 + shift, OMEGA1, EVENT_WIDTH),
    ]


def three_event_signal(shift=0.0, grid=GRID):
    return superpose(synth_burst(spec, grid) for spec in three_event_bursts(shift))


@pytest.fixture(scope="session")
def mexican_hat():
    return get_wavelet("mexican-hat")


@pytest.fixture(scope="session")
def morlet():
    return get_wavelet("morlet-real")


@pytest.fixture(scope="session")
def mh_dual(mexican_hat):
    return dual_function(mexican_hat)


@pytest.fixture(scope="session")
def band():
    return FrequencyGrid.log_spaced(*BAND)


@pytest.fixture(scope="session")
def burst_signal():
    return synth_burst(BURST, GRID)


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
