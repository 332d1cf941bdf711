"""Command-line front end.

Single records are written as one JSON object per line (``--format json``) or
as a header plus one CSV row. Surface meshes default to CSV with the header
``x1,x2,x3,x0,S4,l,status``. Floats are always printed with 17 significant
digits so repeated runs are byte-identical.

Exit codes: 0 success, 2 domain or configuration error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from typing import Iterable, Iterator

import numpy as np

from .algebra import CONE_TOLERANCE, Cone, Event4, IsotropicEvent4, Velocity3, cone_classify, to_isotropic
from .errors import ConfigError, H4Error, NegativeQuarticForm, SuperluminalError
from .kinematics import velocity_modulus_h4, velocity_modulus_nonrel, w_form
from .metric import (
    fourth_root,
    interval2_minkowski,
    interval2_minkowski_isotropiclike,
    interval4_h4_orthonormal,
    interval4_minkowski,
    interval_h4_isotropic,
)
from .simultaneity import (
    MAX_GRID_NODES,
    RESIDUAL_TOLERANCE,
    AxisRange,
    GridSpec,
    ObserverScale,
    SpatialOffset,
    SurfaceSample,
    distance_asymmetry,
    distance_h4,
    distance_minkowski,
    s4_on_surface,
    sample_surface,
    sample_surface_minkowski,
    simultaneity_x0,
)
from .transforms import (
    FrameVelocity,
    add_velocities,
    apply_group,
    group_from_velocity,
    inverse_group_from_velocity,
    modulus_after_boost,
    time_dilation_factor,
)

MESH_COLUMNS = ("x1", "x2", "x3", "x0", "S4", "l", "status")

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_IO = 3


def format_float(x) -> str:
    return format(float(x), ".17g")


def _json_value(obj) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(obj) if math.isfinite(obj) else "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_json_value(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_json_value(v) for v in obj) + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def to_json_line(record: dict) -> str:
    return _json_value(record) + "\n"


def _flatten(record: dict, prefix: str = "") -> dict:
    flat = {}
    for key, value in record.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, name + "."))
        elif isinstance(value, (list, tuple)):
            for i, item in enumerate(value):
                flat[f"{name}.{i}"] = item
        else:
            flat[name] = value
    return flat


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return format_float(value) if math.isfinite(value) else ""
    return str(value)


def to_csv(records: list[dict]) -> str:
    flats = [_flatten(r) for r in records]
    header: list[str] = []
    for flat in flats:
        header.extend(k for k in flat if k not in header)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for flat in flats:
        writer.writerow([_csv_cell(flat.get(k)) for k in header])
    return buf.getvalue()


def mesh_csv_lines(samples: Iterable[SurfaceSample]) -> Iterator[str]:
    yield ",".join(MESH_COLUMNS) + "\n"
    for s in samples:
        cells = [*s.offset, s.x0, s.s4, s.l]
        yield ",".join(_csv_cell(c) for c in cells) + f",{s.status}\n"


def mesh_json_lines(samples: Iterable[SurfaceSample]) -> Iterator[str]:
    for s in samples:
        x1, x2, x3 = s.offset
        yield to_json_line({"x1": x1, "x2": x2, "x3": x3, "x0": s.x0, "S4": s.s4, "l": s.l, "status": s.status})


def _record(command: str, inputs: dict, outputs: dict | None = None, status: str = "ok", **extra) -> dict:
    rec = {"command": command, "inputs": inputs, "outputs": outputs or {}, "status": status}
    rec.update(extra)
    return rec


def _error_record(command: str, inputs: dict, exc: Exception) -> dict:
    return _record(command, inputs, status="error", error=f"{type(exc).__name__}: {exc}")


def _minkowski_cone(s2: float, x0: float, scale: float, tolerance: float) -> Cone:
    if abs(s2) <= tolerance * scale:
        return Cone.ON_BOUNDARY
    if s2 > 0 and x0 > 0:
        return Cone.INSIDE_FUTURE
    return Cone.OUTSIDE


# --- commands ---------------------------------------------------------------

def cmd_interval(args) -> list[dict]:
    coords = [float(c) for c in args.coords]
    inputs = {"coords": coords, "basis": args.basis, "geometry": args.geometry}
    tol = args.tolerance if args.tolerance is not None else CONE_TOLERANCE
    if args.geometry == "h4":
        if args.basis == "isotropic":
            xi = IsotropicEvent4(*coords)
            interval = interval_h4_isotropic(xi)
            outputs = {"S": float(interval.value), "S4": float(interval.fourth_power)}
        else:
            e = Event4(*coords)
            xi = to_isotropic(e)
            s4 = float(interval4_h4_orthonormal(e))
            if s4 < 0:
                raise NegativeQuarticForm("S^4 < 0: the event is space-like, S is not real")
            outputs = {"S": float(fourth_root(s4)), "S4": s4}
        outputs["cone"] = cone_classify(xi, tol).value
    else:
        if args.basis == "isotropic":
            xi = IsotropicEvent4(*coords)
            s2 = float(interval2_minkowski_isotropiclike(xi))
            x0 = sum(coords) * math.sqrt(6.0) / 4.0
        else:
            e = Event4(*coords)
            s2 = float(interval2_minkowski(e))
            x0 = coords[0]
        scale = max(abs(c) for c in coords) ** 2
        outputs = {"S2": s2, "S4": s2 * s2 if args.basis == "isotropic" else float(interval4_minkowski(Event4(*coords)))}
        outputs["S"] = math.sqrt(s2) if s2 >= 0 else None
        outputs["cone"] = _minkowski_cone(s2, x0, scale, tol).value
    return [_record("interval", inputs, outputs)]


def cmd_distance(args) -> list[dict]:
    d = SpatialOffset(*(float(c) for c in args.offset))
    scale = ObserverScale(float(args.T))
    inputs = {"T": scale.t_half, "offset": list(d), "geometry": args.geometry}
    if args.geometry == "h4":
        x0 = float(simultaneity_x0(scale, d))
        outputs = {
            "l": float(distance_h4(scale, d)),
            "x0": x0,
            "S4": float(s4_on_surface(scale, d, x0)),
        }
        if args.asymmetry:
            l_pos, l_neg = distance_asymmetry(scale, d)
            outputs["l_neg"] = float(l_neg)
            outputs["asymmetry"] = float(l_pos - l_neg)
    else:
        outputs = {"l": float(distance_minkowski(scale, d))}
        if args.asymmetry:
            outputs["l_neg"] = float(distance_minkowski(scale, -d))
            outputs["asymmetry"] = outputs["l"] - outputs["l_neg"]
    return [_record("distance", inputs, outputs)]


def cmd_speed(args) -> list[dict]:
    v = Velocity3(*(float(c) for c in args.velocity))
    tol = args.tolerance if args.tolerance is not None else CONE_TOLERANCE
    form = w_form(v)
    outputs = {
        "h4": None,
        "sr": float(velocity_modulus_nonrel(v)),
        "factors": [float(f) for f in form.factors],
        "W": float(form.w),
        "cone": cone_classify(form.factors, tol).value,
    }
    status = "ok"
    try:
        outputs["h4"] = float(velocity_modulus_h4(v, tol))
    except SuperluminalError:
        status = "superluminal"
    return [_record("speed", {"velocity": list(v)}, outputs, status)]


def _parse_event_line(line: str) -> Event4 | None:
    body = line.split("#", 1)[0].strip()
    if not body:
        return None
    parts = body.split()
    if len(parts) != 4:
        raise ValueError(f"expected 4 numbers, got {len(parts)}")
    values = [float(p) for p in parts]
    if not all(math.isfinite(x) for x in values):
        raise ValueError("non-finite coordinate")
    return Event4(*values)


def iter_boost_records(V: FrameVelocity, direction: str, lines: Iterable[str]) -> Iterator[dict]:
    g = group_from_velocity(V) if direction == "forward" else inverse_group_from_velocity(V)
    for lineno, line in enumerate(lines, start=1):
        inputs = {"line": lineno}
        try:
            e = _parse_event_line(line)
        except ValueError as exc:
            yield _record("boost", inputs, status="error", error=f"malformed line: {exc}")
            continue
        if e is None:
            continue
        inputs["event"] = list(e)
        out = apply_group(g, e)
        yield _record(
            "boost",
            inputs,
            {
                "event": [float(c) for c in out],
                "S4_before": float(interval4_h4_orthonormal(e)),
                "S4_after": float(interval4_h4_orthonormal(out)),
            },
        )


def cmd_boost(args) -> Iterator[dict]:
    V = FrameVelocity(*(float(c) for c in args.frame_velocity))
    if args.events_file == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.events_file, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    return iter_boost_records(V, args.direction, lines)


def cmd_add_velocities(args) -> list[dict]:
    values = [float(c) for c in args.values]
    v, V = Velocity3(*values[:3]), FrameVelocity(*values[3:])
    inputs = {"v": list(v), "V": [V.V1, V.V2, V.V3]}
    if not v.is_subluminal():
        raise SuperluminalError("v must be strictly inside the future cone")
    composed = add_velocities(v, V)
    outputs = {
        "v_prime": [float(c) for c in composed],
        "modulus": float(modulus_after_boost(v, V)),
        "modulus_from_components": float(velocity_modulus_h4(composed)),
        "time_dilation": float(time_dilation_factor(v, V)),
    }
    for axis in range(3):
        others = [i for i in range(3) if i != axis]
        if all(v[i] == 0 and values[3 + i] == 0 for i in others):
            a, b = v[axis], values[3 + axis]
            outputs["sr_collinear"] = (a + b) / (1 + a * b)
            break
    return [_record("add-velocities", inputs, outputs)]


def _grid_from_args(args) -> GridSpec:
    axes = []
    for name in ("x1", "x2", "x3"):
        lo, hi, count = getattr(args, name)
        try:
            n = int(count)
        except ValueError:
            raise ConfigError(f"{name}: count must be an integer, got {count!r}") from None
        axes.append(AxisRange(float(lo), float(hi), n))
    return GridSpec(*axes)


def cmd_surface(args) -> list[SurfaceSample]:
    grid = _grid_from_args(args)
    scale = ObserverScale(float(args.T))
    if args.geometry == "h4":
        tol = args.tolerance if args.tolerance is not None else RESIDUAL_TOLERANCE
        return sample_surface(scale, grid, tol, args.max_nodes)
    return sample_surface_minkowski(scale, grid, args.max_nodes)


# --- plumbing -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--tolerance", type=float, default=argparse.SUPPRESS,
                        help="override the default residual/cone tolerance")
    common.add_argument("--out", default=argparse.SUPPRESS, help="write output to PATH instead of stdout")

    parser = argparse.ArgumentParser(prog="h4space", parents=[common],
                                     description="Distance, velocity and frame changes in the Berwald-Moor space H4.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("interval", parents=[common], help="interval of a 4-vector")
    p.add_argument("coords", nargs=4)
    p.add_argument("--basis", choices=("isotropic", "orthonormal"), default="orthonormal")
    p.add_argument("--geometry", choices=("h4", "minkowski"), default="h4")

    p = sub.add_parser("distance", parents=[common], help="3-distance to a parallel world line")
    p.add_argument("--T", type=float, required=True)
    p.add_argument("offset", nargs=3)
    p.add_argument("--geometry", choices=("h4", "minkowski"), default="h4")
    p.add_argument("--asymmetry", action="store_true", help="also report the distance for -offset")

    p = sub.add_parser("speed", parents=[common], help="H4 and SR velocity modulus")
    p.add_argument("velocity", nargs=3)

    p = sub.add_parser("boost", parents=[common], help="transform events to a moving frame")
    p.add_argument("frame_velocity", nargs=3, metavar="V")
    p.add_argument("--events-file", required=True, help="whitespace-separated 4-tuples; '-' for stdin")
    p.add_argument("--direction", choices=("forward", "inverse"), default="forward")

    p = sub.add_parser("add-velocities", parents=[common], help="compose v with frame velocity V")
    p.add_argument("values", nargs=6, metavar="v1 v2 v3 V1 V2 V3")

    p = sub.add_parser("surface", parents=[common], help="sample the simultaneity surface on a grid")
    p.add_argument("--T", type=float, required=True)
    for name in ("x1", "x2", "x3"):
        p.add_argument(f"--{name}", nargs=3, metavar=("MIN", "MAX", "COUNT"), default=("0", "0", "1"))
    p.add_argument("--geometry", choices=("h4", "minkowski"), default="h4")
    p.add_argument("--max-nodes", type=int, default=MAX_GRID_NODES)
    return parser


def _write(chunks: Iterable[str], out: str | None) -> None:
    if out is None:
        for chunk in chunks:
            sys.stdout.write(chunk)
        sys.stdout.flush()
        return
    # write-then-rename, so a failed run never leaves a partial file behind
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".h4space-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            for chunk in chunks:
                fh.write(chunk)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _render(records: list[dict], fmt: str) -> list[str]:
    if fmt == "csv":
        return [to_csv(records)]
    return [to_json_line(r) for r in records]


def _inputs_for_error(args) -> dict:
    skip = {"command", "format", "tolerance", "out"}
    return {k: (list(v) if isinstance(v, (list, tuple)) else v) for k, v in vars(args).items() if k not in skip}


COMMANDS = {
    "interval": cmd_interval,
    "distance": cmd_distance,
    "speed": cmd_speed,
    "boost": cmd_boost,
    "add-velocities": cmd_add_velocities,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_DOMAIN if exc.code not in (0, None) else EXIT_OK
    for name, default in (("format", None), ("tolerance", None), ("out", None)):
        if not hasattr(args, name):
            setattr(args, name, default)

    try:
        if args.command == "surface":
            fmt = args.format or "csv"
            samples = cmd_surface(args)
            chunks = mesh_csv_lines(samples) if fmt == "csv" else mesh_json_lines(samples)
            _write(chunks, args.out)
            ok = sum(s.ok for s in samples)
            print(f"surface: {len(samples)} nodes, {ok} ok, {len(samples) - ok} skipped", file=sys.stderr)
            return EXIT_OK
        fmt = args.format or "json"
        records = list(COMMANDS[args.command](args))
        _write(_render(records, fmt), args.out)
        return EXIT_OK
    except (H4Error, ValueError) as exc:
        if not isinstance(exc, H4Error):
            exc = ConfigError(str(exc))
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        if args.command != "surface":
            try:
                _write(_render([_error_record(args.command, _inputs_for_error(args), exc)], args.format or "json"), args.out)
            except OSError:
                return EXIT_IO
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: I/O: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
