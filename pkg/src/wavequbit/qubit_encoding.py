"""Two-level states whose amplitudes are wavelet-map coefficients.

A :class:`WaveletQubit` takes the coefficient at one map point as the
amplitude on the versor ``m = (0, Psi(w_i (t - T_j)))`` and the coefficient
at a second point as the amplitude on ``n = (Psi(w_p (t - T_q)), 0)``. The
two versors occupy disjoint component slots, so they are orthogonal at every
``t`` by construction, although neither has unit length in general.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from .errors import DegeneracyError, MapIndexError, NonNormalizableError, ParseError, PeakCountError
from .wavelet_engine import DualBasisFunction, WaveletMap, get_wavelet

NORM_FLOOR = 1e-12


@dataclass(frozen=True)
class MapPoint:
    freq_index: int
    time_index: int
    omega: float
    shift: float
    coeff: float

    def matches(self, wmap: WaveletMap) -> bool:
        """True if the stored values equal a fresh lookup in ``wmap``."""
        i, j = self.freq_index, self.time_index
        return (
            self.omega == wmap.freq.values[i] and self.shift == wmap.times[j] and self.coeff == wmap.coeffs[i, j]
        )

    def to_dict(self) -> dict:
        return {
            "omega": self.omega,
            "T": self.shift,
            "W": self.coeff,
            "freq_index": self.freq_index,
            "time_index": self.time_index,
        }


def map_point(wmap: WaveletMap, freq_index: int, time_index: int) -> MapPoint:
    rows, cols = wmap.shape
    if not (0 <= freq_index < rows and 0 <= time_index < cols):
        raise MapIndexError(f"point ({freq_index}, {time_index}) outside map of shape {wmap.shape}")
    return MapPoint(
        int(freq_index),
        int(time_index),
        float(wmap.freq.values[freq_index]),
        float(wmap.times[time_index]),
        float(wmap.coeffs[freq_index, time_index]),
    )


@dataclass(frozen=True)
class WaveletQubit:
    """Amplitude ``point_m.coeff`` on versor m, ``point_n.coeff`` on versor n."""

    point_m: MapPoint
    point_n: MapPoint
    dual: DualBasisFunction
    normalized: bool = False

    def __post_init__(self):
        if (self.point_m.freq_index, self.point_m.time_index) == (self.point_n.freq_index, self.point_n.time_index):
            raise DegeneracyError("the two qubit points must be distinct grid points")

    @property
    def alpha(self) -> float:
        return self.point_m.coeff

    @property
    def beta(self) -> float:
        return self.point_n.coeff

    @property
    def amplitudes(self) -> tuple[float, float]:
        return (self.alpha, self.beta)

    def to_dict(self) -> dict:
        return {
            "point_m": self.point_m.to_dict(),
            "point_n": self.point_n.to_dict(),
            "wavelet_kind": self.dual.base.kind,
            "admissibility": self.dual.admissibility,
            "normalized": self.normalized,
        }


def encode_qubit(wmap: WaveletMap, p1, p2, dual: DualBasisFunction) -> WaveletQubit:
    """Read the amplitudes at grid points ``p1`` (versor m) and ``p2`` (versor n).

    Raises
    ------
    DegeneracyError
        ``p1 == p2``.
    MapIndexError
        A point lies outside the map.
    """
    if tuple(p1) == tuple(p2):
        raise DegeneracyError(f"p1 and p2 are the same grid point {tuple(p1)}")
    return WaveletQubit(map_point(wmap, *p1), map_point(wmap, *p2), dual)


def versor_waveform(qubit: WaveletQubit, which: str, t):
    """Two-component value of versor ``"m"`` or ``"n"`` at time(s) ``t``.

    Returns a ``(first, second)`` tuple of floats for scalar ``t`` or of
    arrays otherwise.
    """
    t_arr = np.asarray(t, dtype=float)
    if which == "m":
        p = qubit.point_m
        second = qubit.dual.evaluate(p.omega * (t_arr - p.shift))
        first = np.zeros_like(second) if np.ndim(second) else 0.0
    elif which == "n":
        p = qubit.point_n
        first = qubit.dual.evaluate(p.omega * (t_arr - p.shift))
        second = np.zeros_like(first) if np.ndim(first) else 0.0
    else:
        raise ValueError(f"which must be 'm' or 'n', got {which!r}")
    return first, second


def qubit_norm(qubit: WaveletQubit) -> float:
    return math.hypot(qubit.alpha, qubit.beta)


def normalize(qubit: WaveletQubit) -> WaveletQubit:
    norm = qubit_norm(qubit)
    if not norm > NORM_FLOOR:
        raise NonNormalizableError(f"qubit norm {norm!r} is below {NORM_FLOOR}")
    if qubit.normalized and norm == 1.0:
        return qubit
    return replace(
        qubit,
        point_m=replace(qubit.point_m, coeff=qubit.alpha / norm),
        point_n=replace(qubit.point_n, coeff=qubit.beta / norm),
        normalized=True,
    )


def select_peaks(wmap: WaveletMap, k: int) -> list[MapPoint]:
    """The ``k`` strongest strict interior local maxima of ``|W|``.

    A point qualifies when its magnitude exceeds all eight neighbours; the
    outermost rows and columns are never candidates. Ordering is by
    descending ``|W|``, then ascending frequency index, then ascending time
    index.

    Raises
    ------
    PeakCountError
        Fewer than ``k`` maxima exist.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    mag = np.abs(wmap.coeffs)
    rows, cols = mag.shape
    if rows < 3 or cols < 3:
        raise PeakCountError(k, 0)
    inner = mag[1:-1, 1:-1]
    is_peak = np.ones(inner.shape, dtype=bool)
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            if di or dj:
                is_peak &= inner > mag[1 + di : rows - 1 + di, 1 + dj : cols - 1 + dj]
    fi, tj = np.nonzero(is_peak)
    fi += 1
    tj += 1
    if fi.size < k:
        raise PeakCountError(k, int(fi.size))
    order = np.lexsort((tj, fi, -mag[fi, tj]))[:k]
    return [map_point(wmap, int(fi[o]), int(tj[o])) for o in order]


def save_qubit_json(qubit: WaveletQubit, path) -> None:
    Path(path).write_text(dumps_json(qubit.to_dict()) + "\n", encoding="utf-8")


def load_qubit_json(path) -> WaveletQubit:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        points = []
        for key in ("point_m", "point_n"):
            p = data[key]
            points.append(
                MapPoint(int(p["freq_index"]), int(p["time_index"]), float(p["omega"]), float(p["T"]), float(p["W"]))
            )
        dual = DualBasisFunction(get_wavelet(data["wavelet_kind"]), float(data["admissibility"]))
        normalized = bool(data.get("normalized", False))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"{path}: malformed qubit JSON ({exc})") from None
    return WaveletQubit(points[0], points[1], dual, normalized)


def _format(value, indent: str) -> str:
    if isinstance(value, bool) or value is None:
        return json.dumps(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError("non-finite value in JSON export")
        text = f"{value:.17g}"
        return text if any(ch in text for ch in ".en") else text + ".0"
    if isinstance(value, (int, str)):
        return json.dumps(value)
    inner = indent + "  "
    if isinstance(value, dict):
        body = ",\n".join(f"{inner}{json.dumps(k)}: {_format(v, inner)}" for k, v in value.items())
        return "{\n" + body + "\n" + indent + "}"
    if isinstance(value, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in value):
            return "[" + ", ".join(_format(v, inner) for v in value) + "]"
        body = ",\n".join(f"{inner}{_format(v, inner)}" for v in value)
        return "[\n" + body + "\n" + indent + "]"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps_json(obj) -> str:
    """JSON with insertion-ordered keys and floats at 17 significant digits."""
    return _format(obj, "")
