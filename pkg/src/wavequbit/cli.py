"""Command-line front end: one subcommand per pipeline stage.

Exit codes: 0 success, 1 usage/parse/I-O, 2 domain/validation, 3 convergence/extent.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import asdict, dataclass, fields
from pathlib import Path

import numpy as np

from . import qubit_encoding as qe
from . import signal_core as sc
from . import two_qubit_relations as tq
from . import wavelet_engine as we
from .errors import UsageError, WaveQubitError

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib


@dataclass
class RunConfig:
    wavelet: str = we.DEFAULT_WAVELET
    omega_min: float = 2.5
    omega_max: float = 40.0
    omega_count: int = we.DEFAULT_OMEGA_COUNT
    stride: int = we.DEFAULT_STRIDE
    xi_min: float = we.DEFAULT_QUADRATURE[0]
    xi_max: float = we.DEFAULT_QUADRATURE[1]
    xi_count: int = we.DEFAULT_QUADRATURE[2]
    omega_power: float = we.DEFAULT_RECONSTRUCT_POWER
    tol_bell: float = tq.DEFAULT_TOL
    tol_sep: float = tq.DEFAULT_TOL
    out_dir: str = "."

    def validate(self) -> "RunConfig":
        if not (0 < self.omega_min < self.omega_max):
            raise UsageError(f"need 0 < omega_min < omega_max, got {self.omega_min}, {self.omega_max}")
        if self.omega_count < 8:
            raise UsageError(f"omega_count must be >= 8, got {self.omega_count}")
        if self.stride < 1:
            raise UsageError(f"stride must be >= 1, got {self.stride}")
        if self.tol_bell < 0 or self.tol_sep < 0:
            raise UsageError("tolerances must be non-negative")
        if self.wavelet not in we.WAVELETS:
            raise UsageError(f"unknown wavelet {self.wavelet!r}; choose from {sorted(we.WAVELETS)}")
        return self

    @property
    def quadrature(self):
        return (self.xi_min, self.xi_max, self.xi_count)

    def frequency_grid(self) -> we.FrequencyGrid:
        return we.FrequencyGrid.log_spaced(self.omega_min, self.omega_max, self.omega_count)

    def dual(self) -> we.DualBasisFunction:
        return we.dual_function(we.get_wavelet(self.wavelet), self.quadrature)


CONFIG_KEYS = {f.name: f.type for f in fields(RunConfig)}
_CASTS = {"str": str, "float": float, "int": int}


def load_config(path) -> dict:
    """Flat ``key = value`` TOML file; keys may use dashes or underscores."""
    try:
        with open(path, "rb") as fh:
            raw = tomllib.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    except tomllib.TOMLDecodeError as exc:
        raise UsageError(f"malformed config {path}: {exc}") from None
    values = {}
    for key, value in raw.items():
        name = key.replace("-", "_")
        if name not in CONFIG_KEYS:
            raise UsageError(f"unknown config key {key!r} in {path}")
        if isinstance(value, dict):
            raise UsageError(f"config {path} must be flat; found table {key!r}")
        try:
            values[name] = _CASTS[CONFIG_KEYS[name]](value)
        except (TypeError, ValueError):
            raise UsageError(f"bad value for {key!r} in {path}: {value!r}") from None
    return values


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _triple(text: str) -> tuple[float, float, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected t0,dt,n, got {text!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected t0,dt,n, got {text!r}") from None


def _burst(text: str) -> tuple[float, ...]:
    try:
        values = [float(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected center,frequency,width[,amplitude], got {text!r}") from None
    if len(values) not in (3, 4):
        raise argparse.ArgumentTypeError(f"expected center,frequency,width[,amplitude], got {text!r}")
    return tuple(values)


def _point(text: str) -> tuple[int, int]:
    try:
        i, j = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected freq_index,time_index, got {text!r}") from None
    return i, j


def _common_options(suppress: bool) -> argparse.ArgumentParser:
    parent = _Parser(add_help=False)
    default = argparse.SUPPRESS if suppress else None
    g = parent.add_argument_group("run configuration")
    g.add_argument("--config", default=default, help="flat key = value TOML file")
    g.add_argument("--out-dir", dest="out_dir", default=default)
    g.add_argument("--tol-bell", dest="tol_bell", type=float, default=default)
    g.add_argument("--tol-sep", dest="tol_sep", type=float, default=default)
    g.add_argument("--omega-min", dest="omega_min", type=float, default=default)
    g.add_argument("--omega-max", dest="omega_max", type=float, default=default)
    g.add_argument("--omega-count", dest="omega_count", type=int, default=default)
    g.add_argument("--stride", type=int, default=default)
    g.add_argument("--wavelet", default=default, choices=sorted(we.WAVELETS))
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wavequbit", parents=[_common_options(False)], description=__doc__.splitlines()[0])
    common = _common_options(True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("synth", parents=[common], help="write a superposition of Gabor bursts")
    p.add_argument("--burst", action="append", type=_burst, default=[], metavar="CENTER,FREQ,WIDTH[,AMP]")
    p.add_argument("--grid", type=_triple, required=True, metavar="T0,DT,N")
    p.add_argument("--out", required=True)

    p = sub.add_parser("transform", parents=[common], help="wavelet map of a signal CSV")
    p.add_argument("signal")
    p.add_argument("--dt", type=float, help="sample spacing for single-column files")
    p.add_argument("--out", required=True)
    p.add_argument("--pgm", help="also write a grayscale |W| heatmap")

    p = sub.add_parser("reconstruct", parents=[common], help="signal from a map CSV")
    p.add_argument("map")
    p.add_argument("--out", required=True)
    p.add_argument("--reference", help="signal CSV to compare against (also fixes the output grid)")
    p.add_argument("--grid", type=_triple, metavar="T0,DT,N")
    p.add_argument("--omega-power", dest="omega_power", type=float, default=argparse.SUPPRESS)

    p = sub.add_parser("encode", parents=[common], help="qubit JSON from two map points")
    p.add_argument("map")
    sel = p.add_mutually_exclusive_group(required=True)
    sel.add_argument("--point", action="append", type=_point, metavar="I,J")
    sel.add_argument("--auto", type=int, metavar="K")
    p.add_argument("--normalize", action="store_true")
    p.add_argument("--out", required=True)

    p = sub.add_parser("relate", parents=[common], help="product relation of two qubit JSON files")
    p.add_argument("qubit1")
    p.add_argument("qubit2")
    p.add_argument("--out", required=True)
    return parser


def resolve_config(args) -> RunConfig:
    values = {}
    config_path = getattr(args, "config", None)
    if config_path:
        values.update(load_config(config_path))
    for name in CONFIG_KEYS:
        flag = getattr(args, name, None)
        if flag is not None:
            values[name] = flag
    return RunConfig(**values).validate()


def _output(config: RunConfig, name) -> Path:
    path = Path(name)
    if not path.is_absolute():
        path = Path(config.out_dir) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def _meta_value(value) -> str:
    if isinstance(value, str):
        return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(value, float):
        return f"{value:.17g}" if np.isfinite(value) else '"nan"'
    return str(value)


def write_run_meta(directory: Path, command: str, config: RunConfig, extra: dict) -> None:
    """Record the effective config for ``command`` in ``directory/run.meta``.

    Sections written by other subcommands are kept; the file is sorted by
    command name so repeated runs produce identical bytes.
    """
    path = directory / "run.meta"
    sections: dict[str, list[str]] = {}
    if path.exists():
        current = None
        for line in path.read_text(encoding="utf-8").splitlines():
            if line.startswith("[") and line.endswith("]"):
                current = line[1:-1]
                sections[current] = []
            elif current is not None and line:
                sections[current].append(line)
    body = [f"{key} = {_meta_value(value)}" for key, value in asdict(config).items()]
    body += [f"{key} = {_meta_value(value)}" for key, value in extra.items()]
    sections[command] = body
    text = "\n\n".join(f"[{name}]\n" + "\n".join(lines) for name, lines in sorted(sections.items()))
    path.write_text(text + "\n", encoding="utf-8")


def cmd_synth(args, config: RunConfig) -> None:
    if not args.burst:
        raise UsageError("synth needs at least one --burst")
    # specs are built here so invalid values surface as domain errors, not usage errors
    specs = [sc.BurstSpec(*values) for values in args.burst]
    signal = sc.superpose(sc.synth_burst(spec, args.grid) for spec in specs)
    out = _output(config, args.out)
    sc.save_csv(signal, out)
    write_run_meta(out.parent, "synth", config, {"out": str(args.out), "bursts": len(args.burst)})
    t0, dt, n = signal.grid
    print(f"wrote {n} samples (t0={t0:g}, dt={dt:g}) from {len(args.burst)} burst(s) to {out}")


def cmd_transform(args, config: RunConfig) -> None:
    signal = sc.load_csv(args.signal, dt=args.dt)
    freq = config.frequency_grid()
    wmap = we.forward_cwt(signal, we.get_wavelet(config.wavelet), freq, stride=config.stride)
    out = _output(config, args.out)
    we.save_map_csv(wmap, out)
    extra = {"signal": str(args.signal), "out": str(args.out)}
    if args.pgm:
        pgm = _output(config, args.pgm)
        we.save_map_pgm(wmap, pgm)
        extra["pgm"] = str(args.pgm)
    write_run_meta(out.parent, "transform", config, extra)
    i, j = wmap.argmax()
    peak = abs(wmap.coeffs[i, j])
    print(f"map {freq.count} x {wmap.times.size} (omega x T) written to {out}")
    print(f"max |W| = {peak:.6g} at omega = {freq.values[i]:.6g} rad/s, T = {wmap.times[j]:.6g} s")
    if peak > 0 and i in (0, freq.count - 1):
        edge = "lower" if i == 0 else "upper"
        print(
            f"warning: max |W| lies on the {edge} edge of the frequency band; "
            "the signal's spectral content may fall outside [omega_min, omega_max]",
            file=sys.stderr,
        )


def _reconstruction_grid(args, wmap: we.WaveletMap, config: RunConfig, reference):
    if args.grid is not None:
        if reference is not None and reference.n != args.grid[2]:
            raise UsageError(f"reference has {reference.n} samples but --grid asks for {args.grid[2]}")
        return args.grid
    if reference is not None:
        return reference.grid
    dt = wmap.shift_step / config.stride
    n = int(np.floor((wmap.times[-1] - wmap.times[0]) / dt + 1e-9)) + 1
    return (float(wmap.times[0]), dt, n)


def cmd_reconstruct(args, config: RunConfig) -> None:
    wmap = we.load_map_csv(args.map, kind=config.wavelet)
    reference = sc.load_csv(args.reference) if args.reference else None
    grid = _reconstruction_grid(args, wmap, config, reference)
    signal = we.reconstruct(wmap, config.dual(), grid, omega_power=config.omega_power)
    out = _output(config, args.out)
    sc.save_csv(signal, out)
    write_run_meta(out.parent, "reconstruct", config, {"map": str(args.map), "out": str(args.out)})
    print(f"wrote {signal.n} reconstructed samples to {out}")
    if reference is not None:
        if not reference.same_grid(signal):
            raise UsageError("reference grid does not match the reconstruction grid")
        error = we.reconstruction_error(reference, signal)
        print(f"relative L2 error = {error:.6g}")


def cmd_encode(args, config: RunConfig) -> None:
    wmap = we.load_map_csv(args.map, kind=config.wavelet)
    if args.auto is not None:
        if args.auto < 2:
            raise UsageError("--auto needs K >= 2 to pick two points")
        peaks = qe.select_peaks(wmap, args.auto)
        p1 = (peaks[0].freq_index, peaks[0].time_index)
        p2 = (peaks[1].freq_index, peaks[1].time_index)
    else:
        if len(args.point) != 2:
            raise UsageError(f"encode needs exactly two --point options, got {len(args.point)}")
        p1, p2 = args.point
    qubit = qe.encode_qubit(wmap, p1, p2, config.dual())
    if args.normalize:
        qubit = qe.normalize(qubit)
    out = _output(config, args.out)
    qe.save_qubit_json(qubit, out)
    write_run_meta(out.parent, "encode", config, {"map": str(args.map), "out": str(args.out)})
    print(f"qubit amplitudes (m, n) = ({qubit.alpha:.6g}, {qubit.beta:.6g}), norm {qe.qubit_norm(qubit):.6g}")


def cmd_relate(args, config: RunConfig) -> None:
    q1 = qe.load_qubit_json(args.qubit1)
    q2 = qe.load_qubit_json(args.qubit2)
    state = tq.relate_product(q1, q2, provenance=(Path(args.qubit1).name, Path(args.qubit2).name))
    out = _output(config, args.out)
    tq.save_state_json(state, out, config.tol_bell, config.tol_sep)
    write_run_meta(
        out.parent, "relate", config, {"qubit1": str(args.qubit1), "qubit2": str(args.qubit2), "out": str(args.out)}
    )
    summary = tq.state_summary(state, config.tol_bell, config.tol_sep)
    print(
        f"U = {summary['U']}, determinant = {summary['determinant']:.6g}, "
        f"bell_matched = {summary['bell_matched']}, separated = {summary['separated']}"
    )


COMMANDS = {
    "synth": cmd_synth,
    "transform": cmd_transform,
    "reconstruct": cmd_reconstruct,
    "encode": cmd_encode,
    "relate": cmd_relate,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        config = resolve_config(args)
        COMMANDS[args.command](args, config)
    except WaveQubitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
