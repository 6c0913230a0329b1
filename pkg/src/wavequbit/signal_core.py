"""Uniformly sampled real signals: construction, CSV I/O and burst synthesis."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, GridError, ParseError, SizeError, SpacingError, UsageError

SPACING_RTOL = 1e-6


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """Real signal sampled at ``t0 + k * dt`` for ``k = 0 .. n-1``.

    The sample array is copied and made read-only on construction.
    """

    samples: np.ndarray
    dt: float
    t0: float = 0.0

    def __post_init__(self):
        samples = np.array(self.samples, dtype=float)
        if samples.ndim != 1:
            raise SizeError("samples must be one-dimensional")
        if samples.size < 2:
            raise SizeError(f"a time series needs at least 2 samples, got {samples.size}")
        if not np.all(np.isfinite(samples)):
            raise DomainError("samples must be finite")
        dt = float(self.dt)
        if not (dt > 0 and math.isfinite(dt)):
            raise DomainError(f"dt must be positive and finite, got {self.dt!r}")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "dt", dt)
        object.__setattr__(self, "t0", float(self.t0))

    def __len__(self):
        return self.samples.size

    @property
    def n(self) -> int:
        return self.samples.size

    @property
    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.n)

    @property
    def t_end(self) -> float:
        return self.t0 + self.dt * (self.n - 1)

    @property
    def grid(self) -> tuple[float, float, int]:
        return (self.t0, self.dt, self.n)

    def same_grid(self, other: "TimeSeries") -> bool:
        return self.grid == other.grid

    def __repr__(self):
        return f"TimeSeries(n={self.n}, dt={self.dt!r}, t0={self.t0!r})"


@dataclass(frozen=True)
class BurstSpec:
    """Gabor burst: ``amplitude * cos(frequency * (t - center)) * exp(-(t - center)**2 / (2 width**2))``.

    ``frequency`` is angular (rad/s), ``center`` and ``width`` are in seconds.
    """

    center: float
    frequency: float
    width: float
    amplitude: float = 1.0

    def __post_init__(self):
        if not self.frequency > 0:
            raise DomainError(f"burst frequency must be > 0, got {self.frequency!r}")
        if not self.width > 0:
            raise DomainError(f"burst width must be > 0, got {self.width!r}")


def _is_number(field: str) -> bool:
    try:
        float(field)
    except ValueError:
        return False
    return True


def load_csv(path, dt: float | None = None, t0: float = 0.0) -> TimeSeries:
    """Read a signal from a ``time,value`` or ``value`` CSV file.

    Parameters
    ----------
    path : str or Path
        UTF-8 comma-separated file. A first line whose first field is not
        numeric is treated as a header and skipped.
    dt : float, optional
        Sample spacing for single-column files. Ignored for two-column files,
        where the spacing is the mean difference of the time column.
    t0 : float
        Time of the first sample for single-column files.

    Raises
    ------
    ParseError
        Malformed row (the message names the 1-based line number).
    SpacingError
        Time column not uniform within a relative tolerance of 1e-6.
    SizeError
        Fewer than two data rows.
    """
    rows: list[list[float]] = []
    width = None
    with open(path, newline="", encoding="utf-8") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or all(not field.strip() for field in row):
                continue
            fields = [field.strip() for field in row]
            if lineno == 1 and not _is_number(fields[0]):
                continue
            if width is None:
                width = len(fields)
                if width not in (1, 2):
                    raise ParseError(f"expected 1 or 2 columns, got {width}", line=lineno)
            elif len(fields) != width:
                raise ParseError(f"expected {width} columns, got {len(fields)}", line=lineno)
            try:
                values = [float(field) for field in fields]
            except ValueError:
                raise ParseError(f"non-numeric field in {row!r}", line=lineno) from None
            if not all(math.isfinite(v) for v in values):
                raise ParseError(f"non-finite value in {row!r}", line=lineno)
            rows.append(values)

    if len(rows) < 2:
        raise SizeError(f"{path}: need at least 2 data rows, got {len(rows)}")
    data = np.asarray(rows)
    if width == 1:
        if dt is None:
            raise UsageError(f"{path}: single-column file requires dt")
        return TimeSeries(data[:, 0], dt, t0)

    t = data[:, 0]
    step = (t[-1] - t[0]) / (len(t) - 1)
    if not step > 0:
        raise SpacingError(f"{path}: time column must be strictly increasing")
    deviation = np.abs(np.diff(t) - step)
    worst = int(np.argmax(deviation))
    if deviation[worst] > SPACING_RTOL * step:
        raise SpacingError(
            f"{path}: non-uniform sampling between rows {worst + 1} and {worst + 2} "
            f"(step {t[worst + 1] - t[worst]!r}, mean {step!r})"
        )
    return TimeSeries(data[:, 1], step, t[0])


def save_csv(series: TimeSeries, path, header: bool = False) -> None:
    """Write ``time,value`` rows at 17 significant digits."""
    lines = ["time,value"] if header else []
    lines += [f"{t:.17g},{v:.17g}" for t, v in zip(series.times, series.samples)]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def synth_burst(spec: BurstSpec, grid: tuple[float, float, int]) -> TimeSeries:
    t0, dt, n = grid
    if n < 2:
        raise SizeError(f"grid needs n >= 2, got {n}")
    if not dt > 0:
        raise DomainError(f"grid dt must be > 0, got {dt!r}")
    u = t0 + dt * np.arange(n) - spec.center
    samples = spec.amplitude * np.cos(spec.frequency * u) * np.exp(-(u**2) / (2.0 * spec.width**2))
    return TimeSeries(samples, dt, t0)


def superpose(signals: Sequence[TimeSeries] | Iterable[TimeSeries]) -> TimeSeries:
    """Pointwise sum of signals that share one grid."""
    signals = list(signals)
    if not signals:
        raise SizeError("superpose needs at least one signal")
    first = signals[0]
    for other in signals[1:]:
        if not first.same_grid(other):
            raise GridError(f"grid mismatch: {first.grid} vs {other.grid}")
    total = np.sum([s.samples for s in signals], axis=0)
    return TimeSeries(total, first.dt, first.t0)
