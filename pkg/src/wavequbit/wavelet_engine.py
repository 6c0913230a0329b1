"""Continuous wavelet decomposition of real signals and its inversion.

The forward map is

    W(omega, T) = sqrt(omega) * integral f(t) g(omega (t - T)) dt

evaluated by direct trapezoidal quadrature on the signal samples. The inverse
is a superposition of dual functions ``Psi = g / C_g`` weighted by
``omega**omega_power`` with trapezoidal weights on the log-spaced frequency
grid and the uniform shift spacing.

The default exponents (``omega_power=1`` for :func:`reconstruct`,
``omega_power=3`` for :func:`delta_kernel`) are the ones of the printed
inversion formulas. They do not form an exact resolution of the identity
together with the ``sqrt(omega)`` forward prefactor: the composite operator
is a ``|k|**(omega_power - 1/2)`` filter times a constant. The exponent that
does close the identity is ``omega_power=0.5`` for reconstruction and
``omega_power=1`` for the kernel (see :data:`IDENTITY_RECONSTRUCT_POWER`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DomainError, ExtentError, GridError, ParseError, UndefinedMetricError
from .signal_core import TimeSeries

DEFAULT_RECONSTRUCT_POWER = 1.0
DEFAULT_KERNEL_POWER = 3.0
IDENTITY_RECONSTRUCT_POWER = 0.5
IDENTITY_KERNEL_POWER = 1.0

DEFAULT_WAVELET = "mexican-hat"
DEFAULT_QUADRATURE = (1e-4, 50.0, 4096)
DEFAULT_OMEGA_COUNT = 96
DEFAULT_STRIDE = 4
CONVERGENCE_RTOL = 1e-6

# rows of the (shift x window) gather matrix evaluated at once
_CHUNK_ELEMENTS = 4_000_000


@dataclass(frozen=True)
class AnalyzingWavelet:
    """Real analyzing wavelet ``g(z)`` with its Fourier transform.

    ``spectrum`` is ``ghat(xi) = integral g(z) exp(-i xi z) dz``, which is
    real for the even wavelets provided here. ``support_radius`` bounds the
    region where ``|g(z)| >= 1e-12``.
    """

    kind: str
    evaluate: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    spectrum: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    support_radius: float

    def __call__(self, z):
        return self.evaluate(z)


def _mexican_hat(z):
    z = np.asarray(z, dtype=float)
    z2 = z * z
    return (1.0 - z2) * np.exp(-0.5 * z2)


def _mexican_hat_spectrum(xi):
    xi = np.asarray(xi, dtype=float)
    xi2 = xi * xi
    return math.sqrt(2.0 * math.pi) * xi2 * np.exp(-0.5 * xi2)


_MEXICAN_HAT_RADIUS = 8.0


def mexican_hat(amplitude: float = 1.0, dilation: float = 1.0) -> AnalyzingWavelet:
    """Mexican hat ``amplitude * (1 - (a z)**2) exp(-(a z)**2 / 2)`` with ``a = dilation``."""
    a = float(dilation)
    c = float(amplitude)
    if not a > 0:
        raise DomainError("dilation must be > 0")
    if a == 1.0 and c == 1.0:
        return AnalyzingWavelet("mexican-hat", _mexican_hat, _mexican_hat_spectrum, _MEXICAN_HAT_RADIUS)

    def evaluate(z):
        return c * _mexican_hat(a * np.asarray(z, dtype=float))

    def spectrum(xi):
        return (c / a) * _mexican_hat_spectrum(np.asarray(xi, dtype=float) / a)

    return AnalyzingWavelet(f"mexican-hat(a={a!r}, c={c!r})", evaluate, spectrum, _MEXICAN_HAT_RADIUS / a)


MORLET_CYCLES = 5.0


def real_morlet(center: float = MORLET_CYCLES) -> AnalyzingWavelet:
    """Real part of the zero-mean Morlet wavelet, dilated so that ``omega`` reads as frequency.

    ``g(z) = (cos(c b z) - exp(-c**2 / 2)) exp(-(b z)**2 / 2)`` with
    ``b = 2 / (c + sqrt(c**2 + 2))``. That ``b`` puts the maximum of the
    ``sqrt(omega)``-weighted response to a pure tone of frequency ``omega0``
    at ``omega = omega0`` (up to terms of order ``exp(-c**2)``).
    """
    c = float(center)
    if not c >= 3:
        raise DomainError("Morlet center frequency must be >= 3 for the zero-mean correction to stay small")
    b = 2.0 / (c + math.sqrt(c * c + 2.0))
    offset = math.exp(-0.5 * c * c)
    root = math.sqrt(2.0 * math.pi)

    def evaluate(z):
        u = b * np.asarray(z, dtype=float)
        return (np.cos(c * u) - offset) * np.exp(-0.5 * u * u)

    def spectrum(xi):
        u = np.asarray(xi, dtype=float) / b
        return (root / b) * (
            0.5 * np.exp(-0.5 * (u - c) ** 2) + 0.5 * np.exp(-0.5 * (u + c) ** 2) - offset * np.exp(-0.5 * u * u)
        )

    # exp(-u**2/2) < 1e-12 / 2 beyond u = 7.5
    return AnalyzingWavelet("morlet-real", evaluate, spectrum, 7.5 / b)


WAVELETS: dict[str, Callable[[], AnalyzingWavelet]] = {
    "mexican-hat": mexican_hat,
    "morlet-real": real_morlet,
}


def get_wavelet(kind: str = DEFAULT_WAVELET) -> AnalyzingWavelet:
    try:
        return WAVELETS[kind]()
    except KeyError:
        raise DomainError(f"unknown wavelet {kind!r}; choose from {sorted(WAVELETS)}") from None


def scaled_wavelet(wavelet: AnalyzingWavelet, factor: float) -> AnalyzingWavelet:
    """Return ``factor * g`` (same support)."""
    evaluate, spectrum = wavelet.evaluate, wavelet.spectrum
    return AnalyzingWavelet(
        f"{factor!r}*{wavelet.kind}",
        lambda z: factor * evaluate(z),
        lambda xi: factor * spectrum(xi),
        wavelet.support_radius,
    )


def evaluate_wavelet(wavelet: AnalyzingWavelet, z):
    """Evaluate ``g(z)``; scalar in, float out."""
    value = wavelet.evaluate(z)
    return float(value) if np.ndim(value) == 0 else value


def _log_trapezoid(wavelet, xi_min, xi_max, n):
    u = np.linspace(math.log(xi_min), math.log(xi_max), n)
    # |ghat|^2 / xi dxi == |ghat|^2 du with xi = exp(u)
    integrand = wavelet.spectrum(np.exp(u)) ** 2
    du = u[1] - u[0]
    return du * (integrand.sum() - 0.5 * (integrand[0] + integrand[-1]))


def admissibility_constant(wavelet: AnalyzingWavelet, quadrature: tuple[float, float, int] = DEFAULT_QUADRATURE) -> float:
    """Admissibility constant ``C_g = integral_0^inf |ghat(xi)|**2 / xi dxi``.

    Integrated with the trapezoidal rule on a logarithmic ``xi`` grid. The
    result is accepted only if doubling ``n`` and, separately, widening the
    range by a decade below and a factor 2 above each change it by at most
    1e-6 relative.

    Raises
    ------
    DomainError
        Invalid quadrature specification.
    ConvergenceError
        Either refinement moves the value by more than the tolerance, or the
        integral is not positive and finite.
    """
    xi_min, xi_max, n = quadrature
    if not (0 < xi_min < xi_max):
        raise DomainError(f"need 0 < xi_min < xi_max, got ({xi_min}, {xi_max})")
    if n < 1000:
        raise DomainError(f"admissibility quadrature needs n >= 1000, got {n}")
    value = _log_trapezoid(wavelet, xi_min, xi_max, n)
    if not (math.isfinite(value) and value > 0):
        raise ConvergenceError(f"admissibility integral is not positive and finite: {value!r}")
    refined = _log_trapezoid(wavelet, xi_min, xi_max, 2 * n - 1)
    widened = _log_trapezoid(wavelet, xi_min / 10.0, xi_max * 2.0, 2 * n - 1)
    for label, other in (("doubling n", refined), ("widening the range", widened)):
        change = abs(other - value) / value
        if change > CONVERGENCE_RTOL:
            raise ConvergenceError(f"admissibility integral moved by {change:.3g} relative when {label}")
    return float(value)


@dataclass(frozen=True)
class DualBasisFunction:
    """Self-dual reconstruction function ``Psi(z) = g(z) / C_g``."""

    base: AnalyzingWavelet
    admissibility: float

    def __post_init__(self):
        if not (math.isfinite(self.admissibility) and self.admissibility > 0):
            raise DomainError(f"admissibility must be positive and finite, got {self.admissibility!r}")

    def evaluate(self, z):
        value = self.base.evaluate(z) / self.admissibility
        return float(value) if np.ndim(value) == 0 else value

    __call__ = evaluate

    @property
    def support_radius(self) -> float:
        return self.base.support_radius


def dual_function(wavelet: AnalyzingWavelet, quadrature=DEFAULT_QUADRATURE) -> DualBasisFunction:
    return DualBasisFunction(wavelet, admissibility_constant(wavelet, quadrature))


@dataclass(frozen=True, eq=False)
class FrequencyGrid:
    """Strictly ascending, logarithmically spaced angular frequencies (rad/s)."""

    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.ndim != 1 or values.size < 1:
            raise DomainError("frequency grid must be a non-empty 1-D array")
        if not np.all(np.isfinite(values)) or not np.all(values > 0):
            raise DomainError("frequencies must be positive and finite")
        if values.size > 1:
            if not np.all(np.diff(values) > 0):
                raise DomainError("frequencies must be strictly ascending")
            ratios = values[1:] / values[:-1]
            if np.max(np.abs(ratios / ratios[0] - 1.0)) > 1e-10:
                raise DomainError("frequencies must be logarithmically spaced")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def log_spaced(cls, omega_min: float, omega_max: float, count: int = DEFAULT_OMEGA_COUNT) -> "FrequencyGrid":
        if not (0 < omega_min < omega_max):
            raise DomainError(f"need 0 < omega_min < omega_max, got ({omega_min}, {omega_max})")
        if count < 2:
            raise DomainError("a frequency band needs at least 2 points")
        return cls(np.geomspace(omega_min, omega_max, count))

    @property
    def count(self) -> int:
        return self.values.size

    @property
    def ratio(self) -> float:
        return float(self.values[1] / self.values[0]) if self.count > 1 else 1.0

    def weights(self) -> np.ndarray:
        """Trapezoidal integration weights on the (non-uniform) grid."""
        w = np.zeros(self.count)
        if self.count > 1:
            gaps = np.diff(self.values)
            w[1:] += 0.5 * gaps
            w[:-1] += 0.5 * gaps
        return w

    def __len__(self):
        return self.count


def shift_grid(signal: TimeSeries, stride: int = DEFAULT_STRIDE) -> np.ndarray:
    """Uniform shifts every ``stride`` samples, extended to cover the last sample."""
    if stride < 1:
        raise DomainError(f"stride must be >= 1, got {stride}")
    m = -(-(signal.n - 1) // stride)
    return signal.t0 + signal.dt * stride * np.arange(m + 1)


def _check_shifts(times) -> np.ndarray:
    times = np.asarray(times, dtype=float)
    if times.ndim != 1 or times.size < 1:
        raise DomainError("shift grid must be a non-empty 1-D array")
    if not np.all(np.isfinite(times)):
        raise DomainError("shift grid must be finite")
    if times.size > 1:
        steps = np.diff(times)
        if not np.all(steps > 0):
            raise DomainError("shift grid must be strictly ascending")
        if np.max(np.abs(steps - steps.mean())) > 1e-9 * steps.mean():
            raise DomainError("shift grid must be uniform")
    return times


def _shift_step(times: np.ndarray) -> float:
    return float((times[-1] - times[0]) / (times.size - 1)) if times.size > 1 else 1.0


@dataclass(frozen=True, eq=False)
class WaveletMap:
    """Coefficients ``W[i, j]`` at ``(freq.values[i], times[j])``."""

    freq: FrequencyGrid
    times: np.ndarray
    coeffs: np.ndarray
    kind: str = DEFAULT_WAVELET
    signal_grid: tuple[float, float, int] | None = None

    def __post_init__(self):
        times = _check_shifts(self.times)
        coeffs = np.array(self.coeffs, dtype=float)
        if coeffs.shape != (self.freq.count, times.size):
            raise GridError(f"coefficient shape {coeffs.shape} != ({self.freq.count}, {times.size})")
        if not np.all(np.isfinite(coeffs)):
            raise DomainError("wavelet map coefficients must be finite")
        times.setflags(write=False)
        coeffs.setflags(write=False)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def shape(self):
        return self.coeffs.shape

    @property
    def shift_step(self) -> float:
        return _shift_step(self.times)

    def scaled(self, factor: float) -> "WaveletMap":
        return WaveletMap(self.freq, self.times, factor * self.coeffs, self.kind, self.signal_grid)

    def argmax(self) -> tuple[int, int]:
        """Index of the largest ``|W|`` (first occurrence in row-major order)."""
        i, j = np.unravel_index(np.argmax(np.abs(self.coeffs)), self.coeffs.shape)
        return int(i), int(j)


def _window_sum(centers, offsets, values, weights_fn):
    """Sum ``values[k] * weights_fn(k, row)`` over ``k = centers[row] + offsets``.

    Out-of-range indices contribute nothing. Rows are processed in chunks so
    the gather matrix stays bounded; each row is reduced in a fixed order.
    """
    n = values.size
    out = np.empty(centers.size)
    rows_per_chunk = max(1, _CHUNK_ELEMENTS // offsets.size)
    for start in range(0, centers.size, rows_per_chunk):
        rows = slice(start, start + rows_per_chunk)
        idx = centers[rows, None] + offsets[None, :]
        inside = (idx >= 0) & (idx < n)
        np.clip(idx, 0, n - 1, out=idx)
        kernel = weights_fn(idx, rows)
        out[rows] = np.sum(np.where(inside, kernel * values[idx], 0.0), axis=1)
    return out


def _aligned_indices(positions, origin, step):
    """Integer indices ``(positions - origin) / step`` if all are integral to 1e-9, else None."""
    raw = (positions - origin) / step
    idx = np.rint(raw)
    if np.max(np.abs(raw - idx)) > 1e-9:
        return None
    return idx.astype(np.int64)


def forward_cwt(
    signal: TimeSeries,
    wavelet: AnalyzingWavelet,
    freq: FrequencyGrid,
    times=None,
    stride: int = DEFAULT_STRIDE,
) -> WaveletMap:
    """Wavelet map of ``signal`` on ``freq`` x ``times``.

    ``W[i, j] = sqrt(w_i) * sum_k f_k g(w_i (t_k - T_j)) h_k`` with
    trapezoidal weights ``h_k`` (``dt``, halved at both ends). Terms with
    ``|w_i (t_k - T_j)| > support_radius`` are dropped. When ``times`` is
    omitted a shift grid with spacing ``stride * dt`` is used.

    Raises
    ------
    DomainError
        Empty grids, or a frequency whose support window misses the signal
        for every shift.
    """
    times = shift_grid(signal, stride) if times is None else _check_shifts(times)
    radius = wavelet.support_radius
    t = signal.times
    weighted = signal.samples * signal.dt
    weighted[0] *= 0.5
    weighted[-1] *= 0.5
    # nearest sample to each shift
    centers = np.rint((times - signal.t0) / signal.dt).astype(np.int64)

    aligned = _aligned_indices(times, signal.t0, signal.dt) is not None

    coeffs = np.empty((freq.count, times.size))
    for i, omega in enumerate(freq.values):
        half = radius / omega
        if times[-1] + half < signal.t0 or times[0] - half > signal.t_end:
            raise DomainError(f"support window at omega={omega!r} never overlaps the signal")
        m = int(math.ceil(half / signal.dt)) + 1
        offsets = np.arange(-m, m + 1)
        if aligned:
            # direct (non-FFT) convolution; kernel depends only on the sample offset
            z = omega * signal.dt * offsets
            taps = np.where(np.abs(z) <= radius, wavelet.evaluate(z), 0.0)
            full = np.convolve(weighted, taps[::-1])
            row = np.zeros(times.size)
            pos = centers + m
            ok = (pos >= 0) & (pos < full.size)
            row[ok] = full[pos[ok]]
            coeffs[i] = math.sqrt(omega) * row
            continue

        def kernel(idx, rows, omega=omega):
            z = omega * (t[idx] - times[rows, None])
            return np.where(np.abs(z) <= radius, wavelet.evaluate(z), 0.0)

        coeffs[i] = math.sqrt(omega) * _window_sum(centers, offsets, weighted, kernel)

    return WaveletMap(freq, times, coeffs, wavelet.kind, signal.grid)


def delta_kernel(
    wavelet: AnalyzingWavelet,
    dual: DualBasisFunction,
    t,
    t_prime,
    freq: FrequencyGrid,
    times,
    omega_power: float = DEFAULT_KERNEL_POWER,
):
    """Discretized resolution-of-identity kernel ``K(t, t')``.

    ``K = sum_i sum_j w_i**omega_power g(w_i (t' - T_j)) Psi(w_i (t - T_j)) dw_i dT``
    with trapezoidal ``dw_i`` and uniform ``dT``.

    ``t`` and ``t_prime`` may be scalars or 1-D arrays; the result has shape
    ``np.shape(t) + np.shape(t_prime)``.
    """
    times = _check_shifts(times)
    t = np.asarray(t, dtype=float)
    t_prime = np.asarray(t_prime, dtype=float)
    probes = np.atleast_1d(t).ravel()
    targets = np.atleast_1d(t_prime).ravel()
    d_shift = _shift_step(times)
    radius = min(wavelet.support_radius, dual.support_radius)
    lo = min(probes.min(), targets.min())
    hi = max(probes.max(), targets.max())
    total = np.zeros((probes.size, targets.size))
    for omega, d_omega in zip(freq.values, freq.weights()):
        half = radius / omega
        span = times[(times >= lo - half) & (times <= hi + half)]
        if span.size == 0:
            continue
        acc = np.zeros_like(total)
        step = max(1, _CHUNK_ELEMENTS // max(targets.size, probes.size))
        for start in range(0, span.size, step):
            shifts = span[start : start + step]
            zp = omega * (probes[:, None] - shifts[None, :])
            psi = np.where(np.abs(zp) <= radius, dual.evaluate(zp), 0.0)
            zt = omega * (targets[:, None] - shifts[None, :])
            g = np.where(np.abs(zt) <= radius, wavelet.evaluate(zt), 0.0)
            acc += psi @ g.T
        total += (omega**omega_power * d_omega * d_shift) * acc
    return total.reshape(t.shape + t_prime.shape)


def sifting_check(
    wavelet: AnalyzingWavelet,
    dual: DualBasisFunction,
    phi: Callable[[np.ndarray], np.ndarray],
    probes,
    t_prime,
    freq: FrequencyGrid,
    times,
    omega_power: float = DEFAULT_KERNEL_POWER,
) -> np.ndarray:
    """Trapezoidal ``integral K(t, t') phi(t') dt'`` at each probe ``t``."""
    t_prime = np.asarray(t_prime, dtype=float)
    kernel = delta_kernel(wavelet, dual, np.asarray(probes, dtype=float), t_prime, freq, times, omega_power)
    values = kernel * phi(t_prime)[None, :]
    return np.trapezoid(values, t_prime, axis=1)


def reconstruct(
    wmap: WaveletMap,
    dual: DualBasisFunction,
    out_grid: tuple[float, float, int],
    omega_power: float = DEFAULT_RECONSTRUCT_POWER,
) -> TimeSeries:
    """Superpose dual functions weighted by the map coefficients.

    ``f(t) = sum_i sum_j W[i, j] w_i**omega_power Psi(w_i (t - T_j)) dw_i dT``.

    Raises
    ------
    ExtentError
        Output grid reaches outside ``[times[0], times[-1]]``.
    """
    t0, dt, n = out_grid
    if n < 2 or not dt > 0:
        raise DomainError(f"invalid output grid {out_grid!r}")
    times = wmap.times
    t_last = t0 + dt * (n - 1)
    slack = 1e-9 * max(1.0, abs(times[0]), abs(times[-1]))
    if t0 < times[0] - slack or t_last > times[-1] + slack:
        raise ExtentError(
            f"output grid [{t0!r}, {t_last!r}] is outside the shift extent [{times[0]!r}, {times[-1]!r}]"
        )
    t = t0 + dt * np.arange(n)
    d_shift = wmap.shift_step
    radius = dual.support_radius
    centers = np.rint((t - times[0]) / d_shift).astype(np.int64)

    # shift j sits on output sample first + stride * j when the grids are aligned
    stride = d_shift / dt
    first = _aligned_indices(np.array([times[0]]), t0, dt)
    aligned = abs(stride - round(stride)) <= 1e-9 * stride and first is not None and round(stride) >= 1
    if aligned:
        stride = int(round(stride))
        slots = int(first[0]) + stride * np.arange(times.size)
        length = max(n, int(slots[-1]) + 1)

    out = np.zeros(n)
    for omega, d_omega, row in zip(wmap.freq.values, wmap.freq.weights(), wmap.coeffs):
        weight = omega**omega_power * d_omega * d_shift
        if aligned:
            m = int(math.ceil(radius / (omega * dt))) + 1
            z = omega * dt * np.arange(-m, m + 1)
            taps = np.where(np.abs(z) <= radius, dual.evaluate(z), 0.0)
            upsampled = np.zeros(length)
            upsampled[slots] = row
            out += weight * np.convolve(upsampled, taps)[m : m + n]
            continue

        m = int(math.ceil(radius / (omega * d_shift))) + 1
        offsets = np.arange(-m, m + 1)

        def kernel(idx, rows, omega=omega):
            z = omega * (t[rows, None] - times[idx])
            return np.where(np.abs(z) <= radius, dual.evaluate(z), 0.0)

        out += weight * _window_sum(centers, offsets, row, kernel)
    return TimeSeries(out, dt, t0)


def reconstruction_error(original: TimeSeries, reconstructed: TimeSeries) -> float:
    """Relative L2 error ``||f - fhat|| / ||f||`` on a shared grid."""
    if not original.same_grid(reconstructed):
        raise GridError(f"grid mismatch: {original.grid} vs {reconstructed.grid}")
    norm = np.linalg.norm(original.samples)
    if norm == 0:
        raise UndefinedMetricError("relative error is undefined for an all-zero original")
    return float(np.linalg.norm(original.samples - reconstructed.samples) / norm)


def save_map_csv(wmap: WaveletMap, path) -> None:
    """Write ``omega,T,W`` rows, omega-major, at 17 significant digits."""
    lines = ["omega,T,W"]
    for omega, row in zip(wmap.freq.values, wmap.coeffs):
        lines.extend(f"{omega:.17g},{shift:.17g},{w:.17g}" for shift, w in zip(wmap.times, row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_map_csv(path, kind: str = DEFAULT_WAVELET) -> WaveletMap:
    """Read a map written by :func:`save_map_csv`."""
    text = Path(path).read_text(encoding="utf-8").splitlines()
    if not text or text[0].strip().replace(" ", "") != "omega,T,W":
        raise ParseError(f"{path}: expected header 'omega,T,W'", line=1)
    rows = []
    for lineno, line in enumerate(text[1:], start=2):
        if not line.strip():
            continue
        fields = line.split(",")
        if len(fields) != 3:
            raise ParseError(f"{path}: expected 3 fields, got {len(fields)}", line=lineno)
        try:
            rows.append([float(f) for f in fields])
        except ValueError:
            raise ParseError(f"{path}: non-numeric field", line=lineno) from None
    if not rows:
        raise ParseError(f"{path}: no data rows")
    data = np.asarray(rows)
    omegas = np.unique(data[:, 0])
    shifts = np.unique(data[:, 1])
    if data.shape[0] != omegas.size * shifts.size:
        raise ParseError(f"{path}: rows do not form a full omega x T grid")
    expected_omega = np.repeat(omegas, shifts.size)
    expected_shift = np.tile(shifts, omegas.size)
    if not (np.array_equal(data[:, 0], expected_omega) and np.array_equal(data[:, 1], expected_shift)):
        raise ParseError(f"{path}: rows must be ordered by omega, then T")
    coeffs = data[:, 2].reshape(omegas.size, shifts.size)
    return WaveletMap(FrequencyGrid(omegas), shifts, coeffs, kind)


def save_map_pgm(wmap: WaveletMap, path) -> None:
    """8-bit binary PGM of ``|W| / max|W|``; highest omega in the top row."""
    mag = np.abs(wmap.coeffs)[::-1]
    peak = mag.max()
    scaled = np.zeros_like(mag) if peak == 0 else mag / peak
    pixels = np.rint(255.0 * scaled).astype(np.uint8)
    rows, cols = pixels.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{cols} {rows}\n255\n".encode("ascii"))
        fh.write(pixels.tobytes())
